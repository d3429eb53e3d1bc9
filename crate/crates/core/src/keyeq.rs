//! Key equations as modules over F[x].
//!
//! Solutions `(γ, δ)` of `γ·q ≡ δ mod p` correspond to elements `δ - yγ` of
//! the module `M = [p, y - q]` inside `R = F[x] + y·F[x]`. Under the
//! (1, μ)-weighted term order the EA on `(p, q)`, halted at the right row,
//! yields a two-element Gröbner basis of `M`, and the cofactors of any
//! `δ - yγ` in that basis have degrees bounded by [`cofactor_bounds`].

use std::cmp::Ordering;

use crate::error::{invalid, Result};
use crate::poly::{ea_full, EaTrace, Poly};

/// The (1, μ)-weighted module term order: `x^i y^j` has weight `i + μ·j`,
/// ties going to the `x`-only monomial, so `x^μ > y > x^(μ-1)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct TermOrder {
    pub mu: usize,
}

impl TermOrder {
    pub fn new(mu: usize) -> Self {
        TermOrder { mu }
    }

    /// Compares monomials `x^a y^ay` and `x^b y^by` (`ay`, `by` in {0, 1}).
    pub fn cmp_monomials(&self, a: (usize, u8), b: (usize, u8)) -> Ordering {
        let wa = a.0 + self.mu * a.1 as usize;
        let wb = b.0 + self.mu * b.1 as usize;
        wa.cmp(&wb).then(b.1.cmp(&a.1))
    }
}

/// A leading monomial `x^xdeg y^ydeg`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub xdeg: usize,
    pub ydeg: u8,
}

/// `c0(x) + y·c1(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPoly {
    pub c0: Poly,
    pub c1: Poly,
}

impl PairPoly {
    pub fn new(c0: Poly, c1: Poly) -> Self {
        PairPoly { c0, c1 }
    }

    /// `δ - yγ`.
    pub fn from_key_solution(delta: &Poly, gamma: &Poly) -> Self {
        PairPoly::new(delta.clone(), -gamma)
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.c1.is_zero()
    }

    pub fn scale_poly(&self, a: &Poly) -> PairPoly {
        PairPoly::new(a * &self.c0, a * &self.c1)
    }

    pub fn sub(&self, other: &PairPoly) -> PairPoly {
        PairPoly::new(&self.c0 - &other.c0, &self.c1 - &other.c1)
    }

    pub fn add(&self, other: &PairPoly) -> PairPoly {
        PairPoly::new(&self.c0 + &other.c0, &self.c1 + &other.c1)
    }

    /// Leading term under `ord`; `None` for the zero element.
    pub fn leading_term(&self, ord: TermOrder) -> Option<LeadingTerm> {
        let t0 = self.c0.deg().finite().map(|d| (d, 0u8));
        let t1 = self.c1.deg().finite().map(|d| (d, 1u8));
        let best = match (t0, t1) {
            (None, None) => return None,
            (Some(a), None) | (None, Some(a)) => a,
            (Some(a), Some(b)) => {
                if ord.cmp_monomials(a, b) == Ordering::Greater {
                    a
                } else {
                    b
                }
            }
        };
        Some(LeadingTerm {
            xdeg: best.0,
            ydeg: best.1,
        })
    }

    /// If `self ∈ [p, y - q]`, the coefficients `(a, b)` with
    /// `self = a·p + b·(y - q)`.
    pub fn module_coordinates(&self, p: &Poly, q: &Poly) -> Option<(Poly, Poly)> {
        let b = self.c1.clone();
        let rest = &self.c0 + &(&b * q);
        let (a, r) = rest.div_rem(p).ok()?;
        r.is_zero().then_some((a, b))
    }
}

/// Leading term of a nonzero `h` under `ord`.
pub fn leading_term(h: &PairPoly, ord: TermOrder) -> Result<LeadingTerm> {
    h.leading_term(ord)
        .ok_or_else(|| invalid!("the zero element has no leading term"))
}

/// Whether `{h1, h2}` is a Gröbner basis of `[p, y - q]` under `ord`: both
/// lie in the module, their coordinate matrix has a nonzero constant
/// determinant, and their leading terms have different y-degree.
pub fn is_groebner_pair(h1: &PairPoly, h2: &PairPoly, p: &Poly, q: &Poly, ord: TermOrder) -> bool {
    if p.is_zero() {
        return false;
    }
    let (Some((a1, b1)), Some((a2, b2))) = (h1.module_coordinates(p, q), h2.module_coordinates(p, q))
    else {
        return false;
    };
    let det = &(&a1 * &b2) - &(&a2 * &b1);
    if det.is_zero() || !det.is_constant() {
        return false;
    }
    match (h1.leading_term(ord), h2.leading_term(ord)) {
        (Some(l1), Some(l2)) => l1.ydeg != l2.ydeg,
        _ => false,
    }
}

/// A Gröbner basis `{h1, h2}` of `[p, y - q]` obtained from the EA, with
/// `h1` carrying the y-degree 0 leading term and `h2` the y-degree 1 one.
#[derive(Clone, Debug)]
pub struct GrobnerPair {
    pub h1: PairPoly,
    pub h2: PairPoly,
    pub order: TermOrder,
    pub p: Poly,
    pub q: Poly,
    /// EA row `i` at which the algorithm halted; `h2` comes from row `i`.
    pub stop_index: usize,
    pub trace: EaTrace,
}

impl GrobnerPair {
    /// x-degree of the leading term of `h1`.
    pub fn xdeg1(&self) -> usize {
        self.h1.leading_term(self.order).expect("nonzero").xdeg
    }

    /// x-degree of the leading term of `h2`.
    pub fn xdeg2(&self) -> usize {
        self.h2.leading_term(self.order).expect("nonzero").xdeg
    }

    /// Divides `h` by the pair, returning `(f1, f2, remainder)` with
    /// `h = f1·h1 + f2·h2 + remainder`; the remainder is zero iff `h ∈ M`.
    pub fn divide(&self, h: &PairPoly) -> (Poly, Poly, PairPoly) {
        let f = self.p.field().clone();
        let (mut f1, mut f2) = (Poly::zero(&f), Poly::zero(&f));
        let mut rem = h.clone();
        let l1 = self.h1.leading_term(self.order).expect("nonzero");
        let l2 = self.h2.leading_term(self.order).expect("nonzero");
        let mut stuck = PairPoly::new(Poly::zero(&f), Poly::zero(&f));
        while let Some(lt) = rem.leading_term(self.order) {
            let (div, ldiv, acc) = if lt.ydeg == 0 {
                (&self.h1, l1, &mut f1)
            } else {
                (&self.h2, l2, &mut f2)
            };
            let lead_coeff = |x: &PairPoly, t: LeadingTerm| {
                if t.ydeg == 0 {
                    x.c0.coeff(t.xdeg)
                } else {
                    x.c1.coeff(t.xdeg)
                }
            };
            if lt.xdeg < ldiv.xdeg {
                // Leading term not divisible: move it to the remainder.
                let c = lead_coeff(&rem, lt);
                let mono = Poly::monomial(&f, c, lt.xdeg);
                let piece = if lt.ydeg == 0 {
                    PairPoly::new(mono, Poly::zero(&f))
                } else {
                    PairPoly::new(Poly::zero(&f), mono)
                };
                stuck = stuck.add(&piece);
                rem = rem.sub(&piece);
                continue;
            }
            let c = f
                .div(lead_coeff(&rem, lt), lead_coeff(div, ldiv))
                .expect("nonzero leading coefficient");
            let t = Poly::monomial(&f, c, lt.xdeg - ldiv.xdeg);
            rem = rem.sub(&div.scale_poly(&t));
            *acc = &*acc + &t;
        }
        (f1, f2, stuck)
    }
}

/// Runs the EA on `(p, q)` and halts at the first row `i` with
/// `deg s_i < deg v_i + μ`, returning `h1 = s_{i-1} - v_{i-1}·y`,
/// `h2 = s_i - v_i·y`.
pub fn solve_key_equation(p: &Poly, q: &Poly, mu: usize) -> Result<GrobnerPair> {
    let trace = ea_full(p, q)?;
    let stop = (1..trace.len())
        .find(|&i| {
            let r = trace.row(i);
            r.s.deg() < r.v.deg().plus(mu)
        })
        .expect("the final row has s = 0 and v != 0");
    let pair = |i: usize| {
        let r = trace.row(i);
        PairPoly::new(r.s.clone(), -&r.v)
    };
    Ok(GrobnerPair {
        h1: pair(stop - 1),
        h2: pair(stop),
        order: TermOrder::new(mu),
        p: p.clone(),
        q: q.clone(),
        stop_index: stop,
        trace,
    })
}

/// Which side of `δ - yγ` carries the leading term.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LargerSide {
    /// `δ <_μ yγ`.
    Gamma,
    /// `δ >_μ yγ`.
    Delta,
}

/// Degree bounds on the cofactors in `δ - yγ = f1·h1 + f2·h2`.
///
/// One of the two is an equality: `f2` when `δ <_μ yγ`, `f1` otherwise.
/// A negative bound means that cofactor must be zero.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CofactorBounds {
    pub f1: i64,
    pub f2: i64,
    pub larger: LargerSide,
}

impl CofactorBounds {
    pub fn f1_exact(&self) -> bool {
        self.larger == LargerSide::Delta
    }

    pub fn f2_exact(&self) -> bool {
        self.larger == LargerSide::Gamma
    }
}

pub fn cofactor_bounds(
    pair: &GrobnerPair,
    gamma_deg: i64,
    delta_deg: i64,
    larger: LargerSide,
) -> CofactorBounds {
    let mu = pair.order.mu as i64;
    let d1 = pair.xdeg1() as i64;
    let d2 = pair.xdeg2() as i64;
    match larger {
        LargerSide::Gamma => CofactorBounds {
            f1: gamma_deg + mu - d1 - 1,
            f2: gamma_deg - d2,
            larger,
        },
        LargerSide::Delta => CofactorBounds {
            f1: delta_deg - d1,
            f2: delta_deg - mu - d2,
            larger,
        },
    }
}

/// Which side leads in `δ - yγ` under the order `ord`.
pub fn larger_side(delta: &Poly, gamma: &Poly, ord: TermOrder) -> Option<LargerSide> {
    let h = PairPoly::from_key_solution(delta, gamma);
    h.leading_term(ord).map(|lt| {
        if lt.ydeg == 1 {
            LargerSide::Gamma
        } else {
            LargerSide::Delta
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galois::{Elem, Field};

    fn gf13() -> Field {
        Field::prime(13).unwrap()
    }

    #[test]
    fn leading_terms() {
        let f = gf13();
        let x_minus_y = PairPoly::new(Poly::x(&f), -&Poly::one(&f));
        assert_eq!(
            leading_term(&x_minus_y, TermOrder::new(0)).unwrap(),
            LeadingTerm { xdeg: 1, ydeg: 0 }
        );
        assert_eq!(
            leading_term(&x_minus_y, TermOrder::new(2)).unwrap(),
            LeadingTerm { xdeg: 0, ydeg: 1 }
        );
        let yx3 = PairPoly::new(Poly::zero(&f), Poly::monomial(&f, Elem::ONE, 3));
        for mu in 0..4 {
            assert_eq!(
                leading_term(&yx3, TermOrder::new(mu)).unwrap(),
                LeadingTerm { xdeg: 3, ydeg: 1 }
            );
        }
        let zero = PairPoly::new(Poly::zero(&f), Poly::zero(&f));
        assert!(leading_term(&zero, TermOrder::new(0)).is_err());
        // x^mu beats y on a weight tie.
        let ord = TermOrder::new(2);
        assert_eq!(ord.cmp_monomials((2, 0), (0, 1)), Ordering::Greater);
        assert_eq!(ord.cmp_monomials((1, 0), (0, 1)), Ordering::Less);
    }

    #[test]
    fn hand_example_mu0() {
        let f = gf13();
        let p = Poly::monomial(&f, Elem::ONE, 3);
        let q = Poly::x(&f);
        let g = solve_key_equation(&p, &q, 0).unwrap();
        assert_eq!(g.stop_index, 2);
        assert_eq!(g.h1, PairPoly::new(Poly::x(&f), -&Poly::one(&f)));
        assert_eq!(
            g.h2,
            PairPoly::new(Poly::zero(&f), Poly::monomial(&f, Elem::ONE, 2))
        );
        assert_eq!(g.xdeg1() + g.xdeg2(), 3);
        assert!(is_groebner_pair(&g.h1, &g.h2, &p, &q, g.order));
        assert!(is_groebner_pair(&g.h2, &g.h1, &p, &q, g.order));
        let g1 = solve_key_equation(&p, &q, 1).unwrap();
        assert_eq!(g1.stop_index, 2);
        assert_eq!(g1.h1, g.h1);
        assert_eq!(g1.h2, g.h2);
    }

    #[test]
    fn generators_are_not_groebner_under_mu0() {
        let f = gf13();
        let p = Poly::monomial(&f, Elem::ONE, 3);
        let q = Poly::x(&f);
        let h1 = PairPoly::new(p.clone(), Poly::zero(&f));
        let h2 = PairPoly::new(-&q, Poly::one(&f));
        assert!(!is_groebner_pair(&h1, &h2, &p, &q, TermOrder::new(0)));
    }

    #[test]
    fn zero_q_stops_immediately() {
        let f = gf13();
        let p = Poly::from_values(&f, &[1, 2, 3, 1]).unwrap();
        for mu in 0..3 {
            let g = solve_key_equation(&p, &Poly::zero(&f), mu).unwrap();
            assert_eq!(g.stop_index, 1);
            assert_eq!(g.h1, PairPoly::new(p.clone(), Poly::zero(&f)));
            assert_eq!(g.h2, PairPoly::new(Poly::zero(&f), -&Poly::one(&f)));
        }
    }

    #[test]
    fn rejects_bad_degrees() {
        let f = gf13();
        let x = Poly::x(&f);
        assert!(solve_key_equation(&x, &x, 0).is_err());
    }

    #[test]
    fn cofactor_bound_formulas() {
        let f = gf13();
        let p = Poly::monomial(&f, Elem::ONE, 3);
        let q = Poly::x(&f);
        let g = solve_key_equation(&p, &q, 0).unwrap();
        // deg^x h1 = 1, deg^x h2 = 2
        let b = cofactor_bounds(&g, 2, 1, LargerSide::Gamma);
        assert_eq!((b.f1, b.f2), (2 - 1 - 1, 0));
        assert!(b.f2_exact());
        let b = cofactor_bounds(&g, 1, 4, LargerSide::Delta);
        assert_eq!((b.f1, b.f2), (3, 2));
        assert!(b.f1_exact());
    }

    #[test]
    fn division_recovers_combination() {
        let f = gf13();
        let p = Poly::monomial(&f, Elem::ONE, 3);
        let q = Poly::x(&f);
        let g = solve_key_equation(&p, &q, 0).unwrap();
        let a = Poly::from_values(&f, &[2, 5]).unwrap();
        let b = Poly::from_values(&f, &[7]).unwrap();
        let h = g.h1.scale_poly(&a).add(&g.h2.scale_poly(&b));
        let (f1, f2, r) = g.divide(&h);
        assert!(r.is_zero());
        assert_eq!((f1, f2), (a, b));
        // y alone is not in M = [x^3, y - x].
        let y = PairPoly::new(Poly::zero(&f), Poly::one(&f));
        assert!(!g.divide(&y).2.is_zero());
    }
}
