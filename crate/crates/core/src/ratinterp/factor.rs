//! Extraction of the linear factors `y·f1 + z·f2` of `Q`.
//!
//! With `z = 1` such a factor is a rational root `y = -f2/f1` of
//! `Q(x, y, 1)`. After a shift `x -> x + a` with `f1(a) ≠ 0` that root is a
//! power series; its first `N` terms are found by Roth–Ruckenstein style
//! recursion and the fraction is recovered from them by a Padé step.

use crate::galois::{Elem, Field};
use crate::poly::{ea_full, Degree, Poly};

use super::{HalfInt, HomogPoly};

/// Bivariate polynomial as coefficients of `y^i`, each a polynomial in `x`.
type Bivar = Vec<Poly>;

/// All coprime `(f1, f2)` with `deg f1 <= w1`, `deg f2 <= w2` and
/// `(y·f1 + z·f2) | Q`, normalized so that the leading coefficient of `f1`
/// (of `f2` when `f1 = 0`) is one.
pub fn find_linear_factors(q: &HomogPoly, w1: HalfInt, w2: HalfInt) -> Vec<(Poly, Poly)> {
    let field = q.field().clone();
    if q.is_zero() || w1.is_negative() || w2.is_negative() {
        return Vec::new();
    }
    let (b1, b2) = (w1.floor() as usize, w2.floor() as usize);
    let ell = q.ell();
    let mut out: Vec<(Poly, Poly)> = Vec::new();
    if q.coeffs[ell].is_zero() {
        out.push((Poly::zero(&field), Poly::one(&field)));
    }

    let affine: Bivar = trim(q.coeffs.clone());
    if affine.len() <= 1 {
        // Q is a multiple of z^ℓ: no affine roots.
        return out;
    }
    let lead = affine.last().expect("nonempty").clone();
    let shifts: Vec<Elem> = match field.elements().find(|&a| !lead.eval(a).is_zero()) {
        Some(a) => vec![a],
        // Every admissible f1 avoids one of any b1 + 1 points.
        None => field.elements().take(b1 + 1).collect(),
    };
    let n_terms = w1.ceil() as usize + w2.ceil() as usize + 1;
    for a in shifts {
        let shifted: Bivar = affine.iter().map(|c| c.taylor_shift(a)).collect();
        for series in series_roots(&field, shifted, n_terms) {
            let Some((f1, f2)) = pade(&field, &series, n_terms, b1, b2) else {
                continue;
            };
            let neg_a = field.neg(a);
            let (f1, f2) = (f1.taylor_shift(neg_a), f2.taylor_shift(neg_a));
            if within(&f1, b1) && within(&f2, b2) && q.has_linear_factor(&f1, &f2) && !out.contains(&(f1.clone(), f2.clone())) {
                out.push((f1, f2));
            }
        }
    }
    out
}

fn within(p: &Poly, bound: usize) -> bool {
    match p.deg() {
        Degree::NegInf => true,
        Degree::Finite(d) => d <= bound,
    }
}

fn trim(mut b: Bivar) -> Bivar {
    while b.len() > 1 && b.last().is_some_and(Poly::is_zero) {
        b.pop();
    }
    b
}

/// `Q(x, x·y + γ)`.
fn substitute_step(field: &Field, q: &Bivar, gamma: Elem) -> Bivar {
    // Horner in y for Q(x, y + γ).
    let mut acc: Bivar = vec![Poly::zero(field)];
    for c in q.iter().rev() {
        let mut next: Bivar = vec![Poly::zero(field); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] = &next[i + 1] + a;
            next[i] = &next[i] + &a.scale(gamma);
        }
        next[0] = &next[0] + c;
        acc = next;
    }
    acc.iter().enumerate().map(|(i, c)| c.shift(i)).collect()
}

/// Truncations mod `x^n` of every power series root of `Q(x, y)` (plus
/// possibly some spurious candidates, filtered by the caller).
fn series_roots(field: &Field, q: Bivar, n: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut stack: Vec<(Bivar, usize, Vec<Elem>)> = vec![(q, 0, Vec::new())];
    while let Some((q, depth, prefix)) = stack.pop() {
        if depth == n {
            out.push(Poly::new(field, prefix));
            continue;
        }
        let v = q.iter().filter_map(Poly::valuation).min().unwrap_or(0);
        let q: Bivar = trim(q.iter().map(|c| c.shift_down(v)).collect());
        let at_zero = Poly::new(field, q.iter().map(|c| c.coeff(0)).collect());
        for gamma in at_zero.roots() {
            let next = substitute_step(field, &q, gamma);
            let mut p = prefix.clone();
            p.push(gamma);
            stack.push((next, depth + 1, p));
        }
    }
    out
}

/// `(f1, f2)` with `f1·φ + f2 ≡ 0 mod x^n`, `deg f1 <= b1`, `deg f2 <= b2`,
/// read off the Euclidean remainder sequence of `(x^n, φ)`.
fn pade(field: &Field, phi: &Poly, n: usize, b1: usize, b2: usize) -> Option<(Poly, Poly)> {
    let xn = Poly::monomial(field, Elem::ONE, n);
    let trace = ea_full(&xn, &phi.truncate(n)).ok()?;
    let row = trace.rows.iter().find(|r| within(&r.s, b2))?;
    let f1 = row.v.clone();
    let f2 = -&row.s;
    if f1.is_zero() || !within(&f1, b1) {
        return None;
    }
    let g = f1.gcd(&f2);
    let (f1, f2) = (f1.div_exact(&g).ok()?, f2.div_exact(&g).ok()?);
    let inv = field.inv(f1.lc()).ok()?;
    Some((f1.scale(inv), f2.scale(inv)))
}
