//! Brute-force references for testing: full codebooks and exhaustive factor
//! search. Both refuse to run past an explicit size cap.

use crate::error::{Error, Result};
use crate::galois::Elem;
use crate::goppa::GoppaCode;
use crate::grs::GrsCode;
use crate::poly::Poly;
use crate::ratinterp::{HalfInt, HomogPoly};

/// Default limit on enumerated objects.
pub const DEFAULT_CAP: u64 = 1 << 20;

/// Every codeword of a small code.
#[derive(Clone, Debug)]
pub struct CodebookOracle {
    words: Vec<Vec<Elem>>,
}

impl CodebookOracle {
    /// All `q^k` codewords, by encoding every message.
    pub fn grs(code: &GrsCode, cap: u64) -> Result<Self> {
        let q = code.field().order() as u64;
        let size = checked_pow(q, code.k()).filter(|&s| s <= cap).ok_or_else(|| {
            Error::OracleCap(format!("{q}^{} codewords exceed the cap {cap}", code.k()))
        })?;
        let f = code.field();
        let words = (0..size)
            .map(|mut idx| {
                let digits: Vec<Elem> = (0..code.k())
                    .map(|_| {
                        let d = f.elem((idx % q) as u32).expect("digit below q");
                        idx /= q;
                        d
                    })
                    .collect();
                code.encode(&Poly::new(f, digits)).expect("message of degree < k")
            })
            .collect();
        Ok(CodebookOracle { words })
    }

    /// All `2^k` codewords, walking the generator rows in Gray-code order.
    pub fn goppa(code: &GoppaCode, cap: u64) -> Result<Self> {
        let k = code.k();
        let size = checked_pow(2, k).filter(|&s| s <= cap).ok_or_else(|| {
            Error::OracleCap(format!("2^{k} codewords exceed the cap {cap}"))
        })?;
        let mut cur = vec![Elem::ZERO; code.n()];
        let mut words = Vec::with_capacity(size as usize);
        words.push(cur.clone());
        for i in 1..size {
            let row = &code.generator()[i.trailing_zeros() as usize];
            for (c, r) in cur.iter_mut().zip(row) {
                *c = Elem(c.value() ^ r.value());
            }
            words.push(cur.clone());
        }
        Ok(CodebookOracle { words })
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Vec<Elem>] {
        &self.words
    }

    /// `{c : d(r, c) <= τ}`, sorted.
    pub fn list_within(&self, r: &[Elem], tau: usize) -> Vec<Vec<Elem>> {
        let mut out: Vec<Vec<Elem>> = self
            .words
            .iter()
            .filter(|c| c.iter().zip(r).filter(|(a, b)| a != b).count() <= tau)
            .cloned()
            .collect();
        out.sort();
        out
    }
}

fn checked_pow(base: u64, exp: usize) -> Option<u64> {
    u32::try_from(exp).ok().and_then(|e| base.checked_pow(e))
}

/// Whether `y·f1 + z·f2` divides `q`, by long division from the top
/// `y`-degree down; `f1` must be nonzero.
fn divides(q: &HomogPoly, f1: &Poly, f2: &Poly) -> bool {
    let ell = q.ell();
    // Cofactor C = Σ c_j y^j z^(ℓ-1-j): f1·c_(i-1) + f2·c_i = Q_i.
    let mut upper = Poly::zero(q.field());
    for i in (1..=ell).rev() {
        let rhs = &q.coeffs[i] - &(f2 * &upper);
        match rhs.div_rem(f1) {
            Ok((quo, rem)) if rem.is_zero() => upper = quo,
            _ => return false,
        }
    }
    (f2 * &upper) == q.coeffs[0]
}

/// Every coprime normalized `(f1, f2)` with `deg f1 <= w1`, `deg f2 <= w2`
/// and `(y·f1 + z·f2) | Q`, by trial division over all candidates.
pub fn exhaustive_factor_search(
    q: &HomogPoly,
    w1: HalfInt,
    w2: HalfInt,
    cap: u64,
) -> Result<Vec<(Poly, Poly)>> {
    let f = q.field().clone();
    let order = f.order() as u64;
    let budget = (w1.ceil().max(0) + w2.ceil().max(0) + 2) as usize;
    if checked_pow(order, budget).is_none_or(|c| c > cap) {
        return Err(Error::OracleCap(format!("{order}^{budget} candidates exceed the cap {cap}")));
    }
    let mut out = Vec::new();
    if w1.is_negative() || w2.is_negative() || q.is_zero() {
        return Ok(out);
    }
    let (b1, b2) = (w1.floor() as usize, w2.floor() as usize);
    if q.coeffs[q.ell()].is_zero() {
        out.push((Poly::zero(&f), Poly::one(&f)));
    }
    let all = |len: usize| -> Vec<Poly> {
        let count = order.pow(len as u32);
        (0..count)
            .map(|mut idx| {
                let c: Vec<Elem> = (0..len)
                    .map(|_| {
                        let d = Elem((idx % order) as u32);
                        idx /= order;
                        d
                    })
                    .collect();
                Poly::new(&f, c)
            })
            .collect()
    };
    let f2s = all(b2 + 1);
    for d1 in 0..=b1 {
        for low in all(d1) {
            let f1 = &low + &Poly::monomial(&f, Elem::ONE, d1);
            for f2 in &f2s {
                if f1.gcd(f2).is_one() && divides(q, &f1, f2) {
                    out.push((f1.clone(), f2.clone()));
                }
            }
        }
    }
    Ok(out)
}
