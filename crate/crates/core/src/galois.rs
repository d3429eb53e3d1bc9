//! Exact arithmetic in GF(p) and GF(p^m).
//!
//! A [`Field`] is an immutable, cheaply clonable handle. Elements are plain
//! [`Elem`] values holding the integer encoding of the element: for GF(p) the
//! residue itself, for GF(p^m) the base-p number whose digits are the
//! coefficients of the representing polynomial (constant term least
//! significant). In characteristic 2 this is the usual bit-vector encoding,
//! so `0b011` is `α + 1`.
//!
//! Multiplication goes through log/antilog tables, so field orders are capped
//! at [`MAX_ORDER`].

use std::fmt;
use std::sync::Arc;

use crate::error::{invalid, Error, Result};
use crate::poly::Poly;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

/// Primitive polynomials over GF(2) for m = 1..=12, bit i = coefficient of x^i.
const BINARY_DEFAULT_MODULI: [u32; 12] = [
    0b11, 0x7, 0xB, 0x13, 0x25, 0x43, 0x89, 0x11D, 0x211, 0x409, 0x805, 0x1053,
];

/// An element of some [`Field`], by its integer encoding.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    /// The integer encoding of this element.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Characteristic, extension degree and modulus of a finite field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u32,
    m: u32,
    /// Coefficients over GF(p), constant term first, monic, length m + 1.
    modulus: Vec<u32>,
}

impl FieldSpec {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(2^m) with the shipped default modulus.
    pub fn binary(m: u32) -> Result<Self> {
        Self::new(2, m, None)
    }

    /// GF(2^m) with the modulus given as a bit pattern (bit i = coefficient of x^i).
    pub fn binary_with_modulus(m: u32, modulus_bits: u32) -> Result<Self> {
        let coeffs = (0..=m).map(|i| (modulus_bits >> i) & 1).collect();
        Self::new(2, m, Some(coeffs))
    }

    /// Validates `p`, `m` and the modulus. When `modulus` is `None` a default
    /// is used: the standard primitive polynomial for p = 2 and m <= 12, and
    /// otherwise the first monic irreducible polynomial in lexicographic order.
    pub fn new(p: u32, m: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(invalid!("characteristic {p} is not prime"));
        }
        if m == 0 {
            return Err(invalid!("extension degree must be positive"));
        }
        let order = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        if order.is_none() {
            return Err(invalid!("field order {p}^{m} exceeds {MAX_ORDER}"));
        }
        let modulus = match modulus {
            Some(c) => {
                if c.len() != m as usize + 1 {
                    return Err(invalid!(
                        "modulus must have {} coefficients, got {}",
                        m + 1,
                        c.len()
                    ));
                }
                if c.iter().any(|&x| x >= p) {
                    return Err(invalid!("modulus coefficient out of range for p = {p}"));
                }
                if c[m as usize] != 1 {
                    return Err(invalid!("modulus must be monic"));
                }
                if m > 1 && !is_irreducible_over_prime(p, &c)? {
                    return Err(invalid!("modulus {c:?} is reducible over GF({p})"));
                }
                c
            }
            None if m == 1 => vec![0, 1],
            None if p == 2 && m <= 12 => {
                let bits = BINARY_DEFAULT_MODULI[m as usize - 1];
                (0..=m).map(|i| (bits >> i) & 1).collect()
            }
            None => first_irreducible(p, m)?,
        };
        Ok(FieldSpec { p, m, modulus })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn order(&self) -> u32 {
        self.p.pow(self.m)
    }
}

struct Tables {
    spec: FieldSpec,
    order: u32,
    /// exp[i] = g^i for a primitive g, doubled in length to skip a reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field GF(p^m).
#[derive(Clone)]
pub struct Field {
    t: Arc<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{})", self.t.spec.p, self.t.spec.m)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.t, &other.t) || self.t.spec == other.t.spec
    }
}
impl Eq for Field {}

impl Field {
    pub fn new(spec: FieldSpec) -> Field {
        let order = spec.order();
        let slow = SlowArith { spec: &spec };
        let generator = slow.find_generator();
        let n = (order - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; order as usize];
        let mut acc = 1u32;
        for i in 0..n {
            exp[i] = acc;
            exp[i + n] = acc;
            log[acc as usize] = i as u32;
            acc = slow.mul(acc, generator);
        }
        debug_assert_eq!(acc, 1);
        Field {
            t: Arc::new(Tables {
                spec,
                order,
                exp,
                log,
            }),
        }
    }

    /// Shorthand for `Field::new(FieldSpec::prime(p)?)`.
    pub fn prime(p: u32) -> Result<Field> {
        Ok(Field::new(FieldSpec::prime(p)?))
    }

    /// Shorthand for GF(2^m) under the default modulus.
    pub fn binary(m: u32) -> Result<Field> {
        Ok(Field::new(FieldSpec::binary(m)?))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.t.spec
    }

    pub fn order(&self) -> u32 {
        self.t.order
    }

    pub fn characteristic(&self) -> u32 {
        self.t.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.t.spec.m
    }

    pub fn is_char2(&self) -> bool {
        self.t.spec.p == 2
    }

    /// Validates an integer encoding.
    pub fn elem(&self, value: u32) -> Result<Elem> {
        if value < self.t.order {
            Ok(Elem(value))
        } else {
            Err(invalid!("{value} is not an element of {self:?}"))
        }
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        let p = self.t.spec.p as i64;
        Elem(n.rem_euclid(p) as u32)
    }

    /// A fixed primitive element (generator of the multiplicative group).
    pub fn primitive(&self) -> Elem {
        if self.t.order == 2 {
            Elem::ONE
        } else {
            Elem(self.t.exp[1])
        }
    }

    /// All elements, in increasing order of their encoding (zero first).
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.t.order).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let spec = &self.t.spec;
        if spec.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        if spec.m == 1 {
            let s = a.0 + b.0;
            return Elem(if s >= spec.p { s - spec.p } else { s });
        }
        Elem(digitwise(spec.p, a.0, b.0, |x, y| (x + y) % spec.p))
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let spec = &self.t.spec;
        if spec.p == 2 || a.0 == 0 {
            return a;
        }
        if spec.m == 1 {
            return Elem(spec.p - a.0);
        }
        Elem(digitwise(spec.p, a.0, 0, |x, _| (spec.p - x) % spec.p))
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.t.spec.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let t = &*self.t;
        Elem(t.exp[(t.log[a.0 as usize] + t.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &*self.t;
        let n = t.order - 1;
        Ok(Elem(t.exp[((n - t.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.0 == 0 {
            return Elem::ZERO;
        }
        let t = &*self.t;
        let n = (t.order - 1) as u64;
        let l = (t.log[a.0 as usize] as u64 * (e % n)) % n;
        Elem(t.exp[l as usize])
    }

    /// The unique square root in characteristic 2, `a^(2^(m-1))`.
    pub fn sqrt_char2(&self, a: Elem) -> Result<Elem> {
        if !self.is_char2() {
            return Err(invalid!("square roots are only provided in characteristic 2"));
        }
        let mut r = a;
        for _ in 1..self.degree() {
            r = self.mul(r, r);
        }
        Ok(r)
    }
}

fn digitwise(p: u32, mut a: u32, mut b: u32, op: impl Fn(u32, u32) -> u32) -> u32 {
    let mut out = 0;
    let mut scale = 1;
    while a > 0 || b > 0 {
        out += op(a % p, b % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    out
}

/// Schoolbook arithmetic on digit vectors, used once to build the tables.
struct SlowArith<'a> {
    spec: &'a FieldSpec,
}

impl SlowArith<'_> {
    fn digits(&self, mut a: u32) -> Vec<u32> {
        let p = self.spec.p;
        let mut d = vec![0; self.spec.m as usize];
        for x in d.iter_mut() {
            *x = a % p;
            a /= p;
        }
        d
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let p = self.spec.p as u64;
        let m = self.spec.m as usize;
        if m == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * m - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let modulus = &self.spec.modulus;
        for k in (m..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (i, &mc) in modulus.iter().enumerate().take(m) {
                let idx = k - m + i;
                prod[idx] = (prod[idx] + (p - c) * mc as u64) % p;
            }
            prod[k] = 0;
        }
        prod[..m]
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * p + d) as u32
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> u32 {
        let q = self.spec.order();
        if q == 2 {
            return 1;
        }
        let n = (q - 1) as u64;
        let factors = prime_factors(n);
        (2..q)
            .find(|&g| factors.iter().all(|&r| self.pow(g, n / r) != 1))
            .expect("multiplicative group of a finite field is cyclic")
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducibility over GF(p): no factor of degree <= m/2, tested by
/// gcd(x^(p^i) - x, f) = 1 for i = 1..=m/2.
fn is_irreducible_over_prime(p: u32, coeffs: &[u32]) -> Result<bool> {
    let fp = Field::prime(p)?;
    let f = Poly::new(&fp, coeffs.iter().map(|&c| Elem(c)).collect());
    Ok(f.is_irreducible())
}

fn first_irreducible(p: u32, m: u32) -> Result<Vec<u32>> {
    let fp = Field::prime(p)?;
    let count = p.pow(m);
    for low in 1..count {
        let mut coeffs: Vec<u32> = (0..m).map(|i| (low / p.pow(i)) % p).collect();
        coeffs.push(1);
        let f = Poly::new(&fp, coeffs.iter().map(|&c| Elem(c)).collect());
        if f.is_irreducible() {
            return Ok(coeffs);
        }
    }
    Err(Error::Internal(format!(
        "no irreducible polynomial of degree {m} over GF({p})"
    )))
}
