//! Explicit basis of the module `W` of all `Q` with the required
//! multiplicities, and the multiplicity test itself.

use crate::error::{invalid, Result};
use crate::galois::{Elem, Field};
use crate::poly::{lagrange, Poly};

use super::{check_distinct, HomogPoly, InterpPoint};

/// Auxiliary polynomials shared by all basis elements.
#[derive(Clone, Debug)]
pub struct BasisContext {
    /// `Π (x - x_i)`.
    pub g: Poly,
    /// Lagrange interpolant of the `y_i`.
    pub r_y: Poly,
    /// Lagrange interpolant of the `z_i`.
    pub r_z: Poly,
    /// `gcd(G, R_z)`, the product of `x - x_i` over points with `z_i = 0`.
    pub g_z: Poly,
    pub lambda1: Poly,
    pub lambda2: Poly,
    /// `λ2·R_y mod G`.
    pub upsilon: Poly,
}

impl BasisContext {
    pub fn new(field: &Field, points: &[InterpPoint]) -> Result<Self> {
        check_distinct(points)?;
        let xs: Vec<Elem> = points.iter().map(|p| p.x).collect();
        let ys: Vec<Elem> = points.iter().map(|p| p.y).collect();
        let zs: Vec<Elem> = points.iter().map(|p| p.z).collect();
        let g = Poly::from_roots(field, &xs);
        let r_y = lagrange(field, &xs, &ys)?;
        let r_z = lagrange(field, &xs, &zs)?;
        let (g_z, lambda1, lambda2) = g.xgcd(&r_z);
        let upsilon = (&lambda2 * &r_y).rem(&g)?;
        Ok(BasisContext {
            g,
            r_y,
            r_z,
            g_z,
            lambda1,
            lambda2,
            upsilon,
        })
    }
}

fn pos(v: isize) -> usize {
    v.max(0) as usize
}

/// Exponents `[a, b, c, d, e]` of
/// `B^(j) = (g_z y - Υz)^a (yz - R_y z²)^b (zG/g_z)^c y^d z^e`.
pub fn basis_exponents(s: usize, ell: usize, j: usize) -> [usize; 5] {
    let (s, ell, j) = (s as isize, ell as isize, j as isize);
    let a = pos(s - j);
    let c = pos(j - (ell - s));
    let e = pos(j - s);
    let b = (j - c as isize - e as isize) as usize;
    let d = pos(ell - s - j);
    [a, b, c, d, e]
}

/// The context and the `ℓ + 1` basis elements `B^(0), ..., B^(ℓ)`; `B^(j)`
/// has `y`-degree exactly `ℓ - j`.
pub fn build_basis(
    field: &Field,
    points: &[InterpPoint],
    s: usize,
    ell: usize,
) -> Result<(BasisContext, Vec<HomogPoly>)> {
    if s == 0 || ell < s {
        return Err(invalid!("basis needs 1 <= s <= ℓ, got s = {s}, ℓ = {ell}"));
    }
    let ctx = BasisContext::new(field, points)?;
    let one = Poly::one(field);
    let zero = Poly::zero(field);
    let a_factor = HomogPoly::new(vec![-&ctx.upsilon, ctx.g_z.clone()]);
    let b_factor = HomogPoly::new(vec![-&ctx.r_y, one.clone(), zero.clone()]);
    let c_factor = HomogPoly::new(vec![ctx.g.div_exact(&ctx.g_z)?, zero.clone()]);
    let y = HomogPoly::new(vec![zero.clone(), one.clone()]);
    let z = HomogPoly::new(vec![one, zero]);
    let basis = (0..=ell)
        .map(|j| {
            let [a, b, c, d, e] = basis_exponents(s, ell, j);
            a_factor
                .pow(a)
                .mul(&b_factor.pow(b))
                .mul(&c_factor.pow(c))
                .mul(&y.pow(d))
                .mul(&z.pow(e))
        })
        .collect();
    Ok((ctx, basis))
}

/// Writes `p` as `Σ c_j B^(j)` by peeling off the highest `y`-degree first.
/// `None` if `p` is not in the span.
pub fn express_in_basis(p: &HomogPoly, basis: &[HomogPoly]) -> Result<Option<Vec<Poly>>> {
    let ell = p.ell();
    if basis.len() != ell + 1 || basis.iter().any(|b| b.ell() != ell) {
        return Err(invalid!("basis does not match a form of degree {ell}"));
    }
    let mut rest = p.clone();
    let mut out = vec![Poly::zero(p.field()); ell + 1];
    for i in (0..=ell).rev() {
        let j = ell - i;
        let lead = &basis[j].coeffs[i];
        if rest.coeffs[i].is_zero() {
            continue;
        }
        let (quo, rem) = rest.coeffs[i].div_rem(lead)?;
        if !rem.is_zero() {
            return Ok(None);
        }
        rest = rest.add(&basis[j].scale_poly(&-&quo))?;
        out[j] = quo;
    }
    Ok(if rest.is_zero() { Some(out) } else { None })
}

/// `C(n, k) mod p` by Lucas' theorem.
pub(crate) fn binom_mod_p(mut n: u64, mut k: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while k > 0 {
        let (ni, ki) = (n % p, k % p);
        if ki > ni {
            return 0;
        }
        acc = acc * small_binom(ni, ki, p) % p;
        n /= p;
        k /= p;
    }
    acc
}

fn small_binom(n: u64, k: u64, p: u64) -> u64 {
    let k = k.min(n - k);
    let (mut num, mut den) = (1u64, 1u64);
    for t in 0..k {
        num = num * ((n - t) % p) % p;
        den = den * ((t + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Hasse derivative `D_a f` evaluated at `x0`: the coefficient of `x^a` in
/// `f(x + x0)`.
pub(crate) fn hasse_at(f: &Poly, a: usize, x0: Elem) -> Elem {
    let field = f.field();
    let p = field.characteristic() as u64;
    let mut acc = Elem::ZERO;
    let mut xp = Elem::ONE;
    for (k, &c) in f.coeffs().iter().enumerate().skip(a) {
        if !c.is_zero() {
            let b = binom_mod_p(k as u64, a as u64, p);
            if b != 0 {
                let term = field.mul(field.mul(c, xp), field.from_int(b as i64));
                acc = field.add(acc, term);
            }
        }
        xp = field.mul(xp, x0);
    }
    acc
}

/// Whether `Q` vanishes with multiplicity at least `s` at `pt`: after moving
/// the point to the origin no monomial of total degree below `s` survives.
pub fn check_multiplicity(q: &HomogPoly, pt: &InterpPoint, s: usize) -> bool {
    let field = q.field();
    let ell = q.ell();
    if pt.at_infinity() {
        // Q(x, 1, z) shifted in x only; monomial x^a z^c comes from Q_{ℓ-c}.
        return (0..s.min(ell + 1)).all(|c| {
            let qi = &q.coeffs[ell - c];
            (0..s - c).all(|a| hasse_at(qi, a, pt.x).is_zero())
        });
    }
    let p = field.characteristic() as u64;
    for a in 0..s {
        let h: Vec<Elem> = q.coeffs.iter().map(|qi| hasse_at(qi, a, pt.x)).collect();
        for b in 0..(s - a).min(ell + 1) {
            // Coefficient of y^b in Σ_i h_i (y + y0)^i.
            let mut acc = Elem::ZERO;
            for (i, &hi) in h.iter().enumerate().skip(b) {
                if hi.is_zero() {
                    continue;
                }
                let c = binom_mod_p(i as u64, b as u64, p);
                if c == 0 {
                    continue;
                }
                let term = field.mul(
                    field.mul(hi, field.pow(pt.y, (i - b) as u64)),
                    field.from_int(c as i64),
                );
                acc = field.add(acc, term);
            }
            if !acc.is_zero() {
                return false;
            }
        }
    }
    true
}
