//! Dense univariate polynomials over a [`Field`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{invalid, Error, Result};
use crate::galois::{Elem, Field};

/// Degree of a polynomial, with `NegInf` for the zero polynomial.
///
/// `NegInf` orders below every finite degree.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        self == Degree::NegInf
    }

    /// Compares `self` against a signed integer.
    pub fn cmp_int(self, v: i64) -> Ordering {
        match self {
            Degree::NegInf => Ordering::Less,
            Degree::Finite(d) => (d as i64).cmp(&v),
        }
    }

    /// `self + k` with `-inf + k = -inf`.
    pub fn plus(self, k: usize) -> Degree {
        match self {
            Degree::NegInf => Degree::NegInf,
            Degree::Finite(d) => Degree::Finite(d + k),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInf,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

const KARATSUBA_THRESHOLD: usize = 32;

/// A polynomial with coefficients in `field`, constant term first.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone)]
pub struct Poly {
    field: Field,
    c: Vec<Elem>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.c == other.c && self.field == other.field
    }
}
impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.c.hash(state);
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(f, "{v}")?,
                (1, 1) => write!(f, "x")?,
                (1, v) => write!(f, "{v}*x")?,
                (i, 1) => write!(f, "x^{i}")?,
                (i, v) => write!(f, "{v}*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Poly {
    /// Builds a polynomial from coefficients (constant term first), trimming
    /// trailing zeros.
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Poly {
        let mut p = Poly {
            field: field.clone(),
            c: coeffs,
        };
        p.trim();
        p
    }

    /// Builds a polynomial from integer encodings, validating each one.
    pub fn from_values(field: &Field, values: &[u32]) -> Result<Poly> {
        let c = values
            .iter()
            .map(|&v| field.elem(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, c))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly {
            field: field.clone(),
            c: Vec::new(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, Elem::ONE)
    }

    pub fn constant(field: &Field, c: Elem) -> Poly {
        Poly::new(field, vec![c])
    }

    /// The polynomial `x`.
    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, Elem::ONE, 1)
    }

    /// `c * x^k`.
    pub fn monomial(field: &Field, c: Elem, k: usize) -> Poly {
        let mut v = vec![Elem::ZERO; k + 1];
        v[k] = c;
        Poly::new(field, v)
    }

    /// `x - a`.
    pub fn linear(field: &Field, a: Elem) -> Poly {
        Poly::new(field, vec![field.neg(a), Elem::ONE])
    }

    /// `prod (x - a)` over the given roots.
    pub fn from_roots(field: &Field, roots: &[Elem]) -> Poly {
        let mut acc = Poly::one(field);
        for &r in roots {
            acc = &acc * &Poly::linear(field, r);
        }
        acc
    }

    fn trim(&mut self) {
        while self.c.last().is_some_and(|c| c.is_zero()) {
            self.c.pop();
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.c
    }

    /// Integer encodings of the coefficients.
    pub fn to_values(&self) -> Vec<u32> {
        self.c.iter().map(|c| c.value()).collect()
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.c.get(i).copied().unwrap_or(Elem::ZERO)
    }

    pub fn deg(&self) -> Degree {
        match self.c.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as a signed integer, `-1` standing in for `-inf`; for callers
    /// doing bound arithmetic where the zero polynomial is excluded anyway.
    pub fn deg_i64(&self) -> i64 {
        self.c.len() as i64 - 1
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == Elem::ONE
    }

    pub fn is_constant(&self) -> bool {
        self.c.len() <= 1
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lc(&self) -> Elem {
        self.c.last().copied().unwrap_or(Elem::ZERO)
    }

    /// Largest `k` with `x^k` dividing `self`; `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.c.iter().position(|c| !c.is_zero())
    }

    pub(crate) fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn assert_same_field(&self, other: &Poly) {
        assert!(
            self.field == other.field,
            "polynomial arithmetic across different fields: {:?} vs {:?}",
            self.field,
            other.field
        );
    }

    pub fn scale(&self, c: Elem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        Poly::new(f, self.c.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![Elem::ZERO; k];
        v.extend_from_slice(&self.c);
        Poly {
            field: self.field.clone(),
            c: v,
        }
    }

    /// Exact division by `x^k`, dropping the low coefficients.
    pub fn shift_down(&self, k: usize) -> Poly {
        Poly::new(&self.field, self.c.iter().skip(k).copied().collect())
    }

    /// Reduction modulo `x^n`.
    pub fn truncate(&self, n: usize) -> Poly {
        Poly::new(&self.field, self.c.iter().take(n).copied().collect())
    }

    /// Scales to a monic polynomial; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.c.last() {
            None => self.clone(),
            Some(&lc) => self.scale(self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// `self += c * x^k * other`, in place.
    pub fn add_scaled_shifted(&mut self, c: Elem, k: usize, other: &Poly) {
        self.assert_same_field(other);
        if c.is_zero() || other.is_zero() {
            return;
        }
        let need = other.c.len() + k;
        if self.c.len() < need {
            self.c.resize(need, Elem::ZERO);
        }
        let f = &self.field;
        for (i, &b) in other.c.iter().enumerate() {
            if !b.is_zero() {
                self.c[i + k] = f.add(self.c[i + k], f.mul(c, b));
            }
        }
        self.trim();
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.c
            .iter()
            .rev()
            .fold(Elem::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(f.from_int(i as i64), a))
            .collect();
        Poly::new(f, c)
    }

    /// The composition `self(x + a)`.
    pub fn taylor_shift(&self, a: Elem) -> Poly {
        if a.is_zero() || self.c.len() <= 1 {
            return self.clone();
        }
        // Repeated synthetic division; works in every characteristic.
        let f = &self.field;
        let mut c = self.c.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n - 1).rev() {
                c[j] = f.add(c[j], f.mul(a, c[j + 1]));
            }
        }
        Poly::new(f, c)
    }

    pub fn square(&self) -> Poly {
        self * self
    }

    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Quotient and remainder; `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let dl = divisor.c.len();
        if self.c.len() < dl {
            return Ok((Poly::zero(f), self.clone()));
        }
        let inv_lc = f.inv(divisor.lc())?;
        let mut r = self.c.clone();
        let mut q = vec![Elem::ZERO; r.len() - dl + 1];
        for k in (0..q.len()).rev() {
            let top = r[k + dl - 1];
            if top.is_zero() {
                continue;
            }
            let t = f.mul(top, inv_lc);
            q[k] = t;
            for (i, &d) in divisor.c.iter().enumerate() {
                r[k + i] = f.sub(r[k + i], f.mul(t, d));
            }
        }
        r.truncate(dl - 1);
        Ok((Poly::new(f, q), Poly::new(f, r)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(invalid!("{divisor} does not divide {self}"))
        }
    }

    pub fn divides(&self, other: &Poly) -> bool {
        other.rem(self).map(|r| r.is_zero()).unwrap_or(false)
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        (self * other).rem(modulus)
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        self.assert_same_field(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `g = s*self + t*other` and `g` the monic gcd.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        self.assert_same_field(other);
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lc()).expect("nonzero leading coefficient");
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// Distinct roots in the coefficient field, in increasing encoding.
    pub fn roots(&self) -> Vec<Elem> {
        let f = &self.field;
        let d = match self.deg() {
            Degree::Finite(d) if d >= 1 => d,
            _ => return Vec::new(),
        };
        let expected = if (f.order() as usize) <= 4 * d {
            d
        } else {
            // Number of distinct roots = deg gcd(x^q - x, self).
            let x = Poly::x(f);
            let frob = x.pow_mod(f.order() as u64, self).expect("nonzero modulus");
            let g = (&frob - &x).gcd(self);
            match g.deg() {
                Degree::Finite(k) => k,
                Degree::NegInf => d,
            }
        };
        let mut out = Vec::with_capacity(expected);
        for a in f.elements() {
            if out.len() == expected {
                break;
            }
            if self.eval(a).is_zero() {
                out.push(a);
            }
        }
        out
    }

    /// Irreducibility over the coefficient field GF(q): `self` has degree
    /// t >= 1 and gcd(x^(q^i) - x mod self, self) = 1 for every i <= t/2.
    pub fn is_irreducible(&self) -> bool {
        let t = match self.deg() {
            Degree::Finite(t) if t >= 1 => t,
            _ => return false,
        };
        if t == 1 {
            return true;
        }
        let f = &self.field;
        let q = f.order() as u64;
        let x = Poly::x(f);
        let mut frob = x.clone();
        for _ in 1..=t / 2 {
            frob = frob.pow_mod(q, self).expect("nonzero modulus");
            if !(&frob - &x).gcd(self).is_one() {
                return false;
            }
        }
        true
    }

    fn mul_slices(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
            return schoolbook(f, a, b);
        }
        karatsuba(f, a, b)
    }
}

fn schoolbook(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

fn add_into(f: &Field, dst: &mut [Elem], src: &[Elem]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = f.add(*d, s);
    }
}

fn sub_into(f: &Field, dst: &mut [Elem], src: &[Elem]) {
    for (d, &s) in dst.iter_mut().zip(src) {
        *d = f.sub(*d, s);
    }
}

fn karatsuba(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let n = a.len().max(b.len());
    if a.len().min(b.len()) < KARATSUBA_THRESHOLD {
        return schoolbook(f, a, b);
    }
    let h = n / 2;
    let (a0, a1) = a.split_at(h.min(a.len()));
    let (b0, b1) = b.split_at(h.min(b.len()));
    let z0 = Poly::mul_slices(f, a0, b0);
    let z2 = Poly::mul_slices(f, a1, b1);
    let mut sa = a0.to_vec();
    sa.resize(a0.len().max(a1.len()), Elem::ZERO);
    add_into(f, &mut sa, a1);
    let mut sb = b0.to_vec();
    sb.resize(b0.len().max(b1.len()), Elem::ZERO);
    add_into(f, &mut sb, b1);
    let mut z1 = Poly::mul_slices(f, &sa, &sb);
    z1.resize(z1.len().max(z0.len()).max(z2.len()), Elem::ZERO);
    sub_into(f, &mut z1, &z0);
    sub_into(f, &mut z1, &z2);
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    add_into(f, &mut out, &z0);
    add_into(f, &mut out[h..], &z1);
    add_into(f, &mut out[2 * h..], &z2);
    out
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.assert_same_field(rhs);
        let f = &self.field;
        let (long, short) = if self.c.len() >= rhs.c.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut c = long.c.clone();
        add_into(f, &mut c, &short.c);
        Poly::new(f, c)
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.assert_same_field(rhs);
        let f = &self.field;
        let mut c = self.c.clone();
        if c.len() < rhs.c.len() {
            c.resize(rhs.c.len(), Elem::ZERO);
        }
        sub_into(f, &mut c, &rhs.c);
        Poly::new(f, c)
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.assert_same_field(rhs);
        let c = Poly::mul_slices(&self.field, &self.c, &rhs.c);
        Poly::new(&self.field, c)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.c.iter().map(|&a| f.neg(a)).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// The unique polynomial of degree `< xs.len()` through all `(xs[i], ys[i])`.
pub fn lagrange(field: &Field, xs: &[Elem], ys: &[Elem]) -> Result<Poly> {
    if xs.len() != ys.len() {
        return Err(invalid!(
            "{} abscissae but {} ordinates",
            xs.len(),
            ys.len()
        ));
    }
    for (i, a) in xs.iter().enumerate() {
        if xs[..i].contains(a) {
            return Err(invalid!("repeated interpolation abscissa {a}"));
        }
    }
    let all = Poly::from_roots(field, xs);
    let mut acc = Poly::zero(field);
    for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let basis = all.div_exact(&Poly::linear(field, xi))?;
        let denom = xs
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .fold(Elem::ONE, |acc, (_, &xj)| field.mul(acc, field.sub(xi, xj)));
        acc = &acc + &basis.scale(field.div(yi, denom)?);
    }
    Ok(acc)
}

/// One row of the extended Euclidean algorithm: `s = u*p + v*q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EaRow {
    pub s: Poly,
    pub u: Poly,
    pub v: Poly,
    /// Quotient that produced this row (`None` for rows 0 and 1).
    pub quotient: Option<Poly>,
}

/// The full remainder and cofactor sequence of the EA on `(p, q)`.
///
/// Row 0 is `(p, 1, 0)`, row 1 is `(q, 0, 1)` and the last row has `s = 0`.
#[derive(Clone, Debug)]
pub struct EaTrace {
    pub p: Poly,
    pub q: Poly,
    pub rows: Vec<EaRow>,
}

impl EaTrace {
    /// Index `N` of the last nonzero remainder, `s_N = gcd(p, q)` up to a unit.
    pub fn gcd_index(&self) -> usize {
        self.rows.len() - 2
    }

    pub fn row(&self, i: usize) -> &EaRow {
        &self.rows[i]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Runs the extended Euclidean algorithm on `p`, `q` with `deg p > deg q`,
/// recording every row.
pub fn ea_full(p: &Poly, q: &Poly) -> Result<EaTrace> {
    p.same_field(q)?;
    if p.deg() <= q.deg() {
        return Err(invalid!(
            "EA needs deg p > deg q (got {} and {})",
            p.deg(),
            q.deg()
        ));
    }
    let f = p.field();
    let mut rows = vec![
        EaRow {
            s: p.clone(),
            u: Poly::one(f),
            v: Poly::zero(f),
            quotient: None,
        },
        EaRow {
            s: q.clone(),
            u: Poly::zero(f),
            v: Poly::one(f),
            quotient: None,
        },
    ];
    while !rows.last().expect("two initial rows").s.is_zero() {
        let (prev, cur) = (&rows[rows.len() - 2], &rows[rows.len() - 1]);
        let (quo, rem) = prev.s.div_rem(&cur.s)?;
        let u = &prev.u - &(&quo * &cur.u);
        let v = &prev.v - &(&quo * &cur.v);
        rows.push(EaRow {
            s: rem,
            u,
            v,
            quotient: Some(quo),
        });
    }
    Ok(EaTrace {
        p: p.clone(),
        q: q.clone(),
        rows,
    })
}

/// Inverse of `a` modulo `g`.
pub fn mod_inverse(a: &Poly, g: &Poly) -> Result<Poly> {
    a.same_field(g)?;
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let a = a.rem(g)?;
    let (d, s, _) = a.xgcd(g);
    if !d.is_one() {
        return Err(Error::NotInvertible(format!("{a} mod {g}")));
    }
    s.rem(g)
}

/// Square root of `a` in GF(2^m)[x]/(g) for irreducible `g` of degree t,
/// computed as `a^(2^(mt-1)) mod g`.
pub fn mod_sqrt_char2(a: &Poly, g: &Poly) -> Result<Poly> {
    a.same_field(g)?;
    let f = g.field();
    if !f.is_char2() {
        return Err(invalid!("square roots mod g need characteristic 2"));
    }
    let t = g
        .deg()
        .finite()
        .filter(|&t| t >= 1)
        .ok_or_else(|| invalid!("modulus must have positive degree"))?;
    let a = a.rem(g)?;
    let squarings = f.degree() as usize * t - 1;
    let mut r = a.clone();
    for _ in 0..squarings {
        r = r.mul_mod(&r, g)?;
    }
    if r.mul_mod(&r, g)? != a {
        return Err(Error::NotInvertible(format!(
            "{a} has no square root modulo {g}; is g irreducible?"
        )));
    }
    Ok(r)
}
