//! Rational interpolation.
//!
//! Given `n` points `(x_i, y_i, z_i)` with `(y_i, z_i) ≠ (0, 0)`, find every
//! coprime pair `(f1, f2)` with `deg f1 <= w1`, `deg f2 <= w2` and
//! `y_i·f1(x_i) + z_i·f2(x_i) = 0` for at least `τ` of the points.
//!
//! The solver builds a trivariate `Q(x, y, z) = Σ Q_i(x) y^i z^(ℓ-i)` that
//! vanishes with multiplicity `s` at every point and has
//! `(1, w2, w1)`-weighted degree below `s·τ`; every such pair then shows up as
//! a factor `y·f1 + z·f2` of `Q`. `Q` is found as a shortest vector of an
//! explicit basis of the interpolation module ([`basis`]) after weighted row
//! reduction ([`reduce`]); the factors are extracted by power-series root
//! finding followed by Padé approximation ([`factor`]).
//!
//! [`naive`] solves the same problem through a dense linear system and is
//! only meant as a test oracle.

pub mod basis;
pub mod factor;
pub mod naive;
pub mod reduce;

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{invalid, Error, Result};
use crate::galois::{Elem, Field};
use crate::poly::Poly;

pub use basis::{build_basis, check_multiplicity, express_in_basis, BasisContext};
pub use factor::find_linear_factors;
pub use naive::{naive_interpolate, naive_minimal, NaiveSystem};
pub use reduce::{is_weak_popov, row_reduce, row_reduce_tracked};

/// An exact rational with denominator 1 or 2, stored as twice its value.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    /// `halves / 2`.
    pub fn from_halves(halves: i64) -> Self {
        HalfInt(halves)
    }

    /// Twice the value, an integer.
    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn floor(self) -> i64 {
        self.0.div_euclid(2)
    }

    pub fn ceil(self) -> i64 {
        -(-self.0).div_euclid(2)
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn times(self, k: i64) -> HalfInt {
        HalfInt(self.0 * k)
    }

    pub fn to_f64(self) -> f64 {
        self.0 as f64 / 2.0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 - rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// A partially projective point `(x, y : z)`, normalized so that either
/// `z = 1`, or `z = 0` and `y = 1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct InterpPoint {
    pub x: Elem,
    pub y: Elem,
    pub z: Elem,
}

impl InterpPoint {
    /// Normalizes `(x, y, z)`; errors if `y = z = 0`.
    pub fn new(field: &Field, x: Elem, y: Elem, z: Elem) -> Result<Self> {
        match (y.is_zero(), z.is_zero()) {
            (true, true) => Err(invalid!("interpolation point at x = {x} has y = z = 0")),
            (_, true) => Ok(InterpPoint {
                x,
                y: Elem::ONE,
                z: Elem::ZERO,
            }),
            (_, false) => Ok(InterpPoint {
                x,
                y: field.div(y, z)?,
                z: Elem::ONE,
            }),
        }
    }

    /// An affine point `(x, y : 1)`.
    pub fn affine(x: Elem, y: Elem) -> Self {
        InterpPoint { x, y, z: Elem::ONE }
    }

    pub fn at_infinity(&self) -> bool {
        self.z.is_zero()
    }
}

pub(crate) fn check_distinct(points: &[InterpPoint]) -> Result<()> {
    for (i, p) in points.iter().enumerate() {
        if points[..i].iter().any(|q| q.x == p.x) {
            return Err(invalid!("repeated interpolation abscissa {}", p.x));
        }
        if p.z != Elem::ONE && !(p.z.is_zero() && p.y == Elem::ONE) {
            return Err(invalid!("point at x = {} is not normalized", p.x));
        }
    }
    Ok(())
}

/// Parameters of one interpolation problem.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RatParams {
    pub n: usize,
    pub tau: usize,
    pub s: usize,
    pub ell: usize,
    pub w1: HalfInt,
    pub w2: HalfInt,
}

impl RatParams {
    /// Checks `1 <= s <= ℓ` and non-negative weights.
    pub fn new(n: usize, tau: usize, s: usize, ell: usize, w1: HalfInt, w2: HalfInt) -> Result<Self> {
        if s == 0 {
            return Err(invalid!("multiplicity must be at least 1"));
        }
        if ell < s {
            return Err(invalid!("list size {ell} is below multiplicity {s}"));
        }
        if w1.is_negative() || w2.is_negative() {
            return Err(invalid!("negative weight bounds ({w1}, {w2})"));
        }
        Ok(RatParams {
            n,
            tau,
            s,
            ell,
            w1,
            w2,
        })
    }

    pub fn w_total(&self) -> HalfInt {
        self.w1 + self.w2
    }
}

/// Twice the weight of the column holding `y^i z^(ℓ-i)`.
pub(crate) fn column_weight(ell: usize, w1: HalfInt, w2: HalfInt, i: usize) -> i64 {
    w2.twice() * i as i64 + w1.twice() * (ell - i) as i64
}

/// Strict counting inequality `½·n·s(s+1) < s·τ·(ℓ+1) - ½·ℓ(ℓ+1)·w`, in
/// exact integer arithmetic.
pub fn feasible_counts(n: usize, tau: usize, s: usize, ell: usize, w_total: HalfInt) -> bool {
    let (n, tau, s, ell) = (n as i128, tau as i128, s as i128, ell as i128);
    // Multiplied through by 4; w_total.twice() = 2w.
    let lhs = 2 * n * s * (s + 1);
    let rhs = 4 * s * tau * (ell + 1) - ell * (ell + 1) * w_total.twice() as i128;
    lhs < rhs
}

/// Whether `params` admit an interpolation polynomial by the counting bound.
pub fn feasible(params: &RatParams) -> bool {
    feasible_counts(params.n, params.tau, params.s, params.ell, params.w_total())
}

/// Structural constraint on `(s, ℓ)` imposed by the caller.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ListConstraint {
    /// `ℓ >= s`.
    AtLeastS,
    /// `ℓ > 2s`.
    AboveTwiceS,
}

impl ListConstraint {
    fn admits(self, s: usize, ell: usize) -> bool {
        match self {
            ListConstraint::AtLeastS => ell >= s,
            ListConstraint::AboveTwiceS => ell > 2 * s,
        }
    }
}

/// Smallest feasible `(s, ℓ)` with `ℓ <= ell_max`, minimizing `ℓ` first and
/// then `s`.
pub fn choose_params(
    n: usize,
    tau: usize,
    w_total: HalfInt,
    ell_max: usize,
    constraint: ListConstraint,
) -> Option<(usize, usize)> {
    (1..=ell_max).find_map(|ell| {
        (1..=ell)
            .filter(|&s| constraint.admits(s, ell))
            .find(|&s| feasible_counts(n, tau, s, ell, w_total))
            .map(|s| (s, ell))
    })
}

/// `Q(x, y, z) = Σ_{i=0}^{ℓ} Q_i(x) y^i z^(ℓ-i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomogPoly {
    /// `coeffs[i]` multiplies `y^i z^(ℓ-i)`; length `ℓ + 1`.
    pub coeffs: Vec<Poly>,
}

impl HomogPoly {
    pub fn new(coeffs: Vec<Poly>) -> Self {
        assert!(!coeffs.is_empty(), "a homogeneous polynomial needs ℓ + 1 >= 1 coefficients");
        HomogPoly { coeffs }
    }

    pub fn zero(field: &Field, ell: usize) -> Self {
        HomogPoly::new(vec![Poly::zero(field); ell + 1])
    }

    /// `y^ydeg z^(ell-ydeg)` scaled by `c`.
    pub fn monomial(c: &Poly, ydeg: usize, ell: usize) -> Self {
        let mut h = HomogPoly::zero(c.field(), ell);
        h.coeffs[ydeg] = c.clone();
        h
    }

    pub fn field(&self) -> &Field {
        self.coeffs[0].field()
    }

    /// Homogeneous degree `ℓ` in `(y, z)`.
    pub fn ell(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// Largest `i` with `Q_i ≠ 0`.
    pub fn y_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// `(1, w2, w1)`-weighted degree; `None` for zero.
    pub fn wdeg(&self, w1: HalfInt, w2: HalfInt) -> Option<HalfInt> {
        let ell = self.ell();
        self.coeffs
            .iter()
            .enumerate()
            .filter_map(|(i, c)| {
                c.deg().finite().map(|d| {
                    HalfInt::from_int(d as i64) + HalfInt::from_halves(column_weight(ell, w1, w2, i))
                })
            })
            .max()
    }

    pub fn mul(&self, other: &HomogPoly) -> HomogPoly {
        let f = self.field();
        let mut out = vec![Poly::zero(f); self.ell() + other.ell() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        HomogPoly::new(out)
    }

    pub fn pow(&self, e: usize) -> HomogPoly {
        let mut acc = HomogPoly::new(vec![Poly::one(self.field())]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn add(&self, other: &HomogPoly) -> Result<HomogPoly> {
        if self.ell() != other.ell() {
            return Err(invalid!("adding forms of degree {} and {}", self.ell(), other.ell()));
        }
        Ok(HomogPoly::new(
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn scale_poly(&self, a: &Poly) -> HomogPoly {
        HomogPoly::new(self.coeffs.iter().map(|c| c * a).collect())
    }

    /// `Q(x, y, z)` with `y`, `z` replaced by polynomials in `x`.
    pub fn substitute(&self, y: &Poly, z: &Poly) -> Poly {
        let f = self.field();
        let ell = self.ell();
        let mut zpow = vec![Poly::one(f)];
        for _ in 0..ell {
            let next = zpow.last().expect("nonempty") * z;
            zpow.push(next);
        }
        let mut ypow = Poly::one(f);
        let mut acc = Poly::zero(f);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc = &acc + &(&(c * &ypow) * &zpow[ell - i]);
            }
            if i < ell {
                ypow = &ypow * y;
            }
        }
        acc
    }

    /// Whether `y·f1 + z·f2` divides `self`, for coprime `(f1, f2)`.
    pub fn has_linear_factor(&self, f1: &Poly, f2: &Poly) -> bool {
        self.substitute(&-f2, f1).is_zero()
    }
}

/// Finds a nonzero `Q` vanishing with multiplicity `s` at every point and of
/// minimal `(1, w2, w1)`-weighted degree; errors if the counting bound does
/// not hold or the result misses its guarantees.
pub fn interpolate(field: &Field, points: &[InterpPoint], params: &RatParams) -> Result<HomogPoly> {
    if points.len() != params.n {
        return Err(invalid!(
            "{} points for a problem with n = {}",
            points.len(),
            params.n
        ));
    }
    if !feasible(params) {
        return Err(Error::Infeasible(format!("{params:?}")));
    }
    let q = interpolate_minimal(field, points, params.s, params.ell, params.w1, params.w2)?;
    for pt in points {
        if !check_multiplicity(&q, pt, params.s) {
            return Err(Error::Internal(format!(
                "interpolation output misses multiplicity {} at x = {}",
                params.s, pt.x
            )));
        }
    }
    let bound = HalfInt::from_int((params.s * params.tau) as i64);
    match q.wdeg(params.w1, params.w2) {
        Some(w) if w < bound => Ok(q),
        w => Err(Error::Internal(format!(
            "interpolation output has weighted degree {w:?}, needs < {bound}"
        ))),
    }
}

/// Shortest vector of the interpolation module under the weighted metric,
/// without any degree guarantee.
pub fn interpolate_minimal(
    field: &Field,
    points: &[InterpPoint],
    s: usize,
    ell: usize,
    w1: HalfInt,
    w2: HalfInt,
) -> Result<HomogPoly> {
    if w1.is_negative() || w2.is_negative() {
        return Err(invalid!("negative weight bounds ({w1}, {w2})"));
    }
    let (_, basis) = build_basis(field, points, s, ell)?;
    let matrix: Vec<Vec<Poly>> = basis.into_iter().map(|b| b.coeffs).collect();
    let weights: Vec<i64> = (0..=ell).map(|i| column_weight(ell, w1, w2, i)).collect();
    let reduced = row_reduce(matrix, &weights)?;
    let best = reduced
        .into_iter()
        .min_by_key(|row| reduce::row_degree(row, &weights))
        .expect("at least one row");
    Ok(HomogPoly::new(best))
}
