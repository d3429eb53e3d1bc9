//! Mulders–Storjohann reduction of a square polynomial matrix to weak Popov
//! form under column-shifted degrees.
//!
//! Weights are passed doubled (as integers), so an entry in column `c`
//! counts with degree `2·deg + weights[c]`; half-integer shifts need no
//! special handling.

use crate::error::{invalid, Error, Result};
use crate::galois::{Elem, Field};
use crate::poly::Poly;

/// Doubled shifted degree of one entry, `None` for zero.
fn entry_degree(p: &Poly, w: i64) -> Option<i64> {
    p.deg().finite().map(|d| 2 * d as i64 + w)
}

/// Doubled shifted row degree; `None` for a zero row.
pub fn row_degree(row: &[Poly], weights: &[i64]) -> Option<i64> {
    row.iter()
        .zip(weights)
        .filter_map(|(p, &w)| entry_degree(p, w))
        .max()
}

/// Rightmost column attaining the row degree, with that degree.
pub fn leading_position(row: &[Poly], weights: &[i64]) -> Option<(usize, i64)> {
    let mut best: Option<(usize, i64)> = None;
    for (c, (p, &w)) in row.iter().zip(weights).enumerate() {
        if let Some(d) = entry_degree(p, w) {
            if best.is_none_or(|(_, bd)| d >= bd) {
                best = Some((c, d));
            }
        }
    }
    best
}

/// Nonzero rows with pairwise distinct leading positions.
pub fn is_weak_popov(rows: &[Vec<Poly>], weights: &[i64]) -> bool {
    let mut seen = vec![false; weights.len()];
    for row in rows {
        match leading_position(row, weights) {
            None => return false,
            Some((c, _)) if seen[c] => return false,
            Some((c, _)) => seen[c] = true,
        }
    }
    true
}

/// Rows of polynomials.
pub type PolyMatrix = Vec<Vec<Poly>>;

/// Reduces `rows` to weak Popov form; the row space is unchanged.
pub fn row_reduce(rows: PolyMatrix, weights: &[i64]) -> Result<PolyMatrix> {
    reduce_impl(rows, weights, None).map(|(r, _)| r)
}

/// As [`row_reduce`], also returning the unimodular `U` with
/// `U · input = output`.
pub fn row_reduce_tracked(
    rows: PolyMatrix,
    weights: &[i64],
) -> Result<(PolyMatrix, PolyMatrix)> {
    let field = rows
        .first()
        .and_then(|r| r.first())
        .map(|p| p.field().clone())
        .ok_or_else(|| invalid!("empty matrix"))?;
    let nu = rows.len();
    let ident = identity(&field, nu);
    reduce_impl(rows, weights, Some(ident)).map(|(r, u)| (r, u.expect("tracked")))
}

fn identity(field: &Field, nu: usize) -> PolyMatrix {
    (0..nu)
        .map(|i| {
            (0..nu)
                .map(|j| if i == j { Poly::one(field) } else { Poly::zero(field) })
                .collect()
        })
        .collect()
}

/// `rows[a] -= c·x^k·rows[b]`.
fn eliminate(rows: &mut [Vec<Poly>], a: usize, b: usize, c: Elem, k: usize) {
    let (dst, src) = if a < b {
        let (lo, hi) = rows.split_at_mut(b);
        (&mut lo[a], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(a);
        (&mut hi[0], &lo[b])
    };
    for (d, s) in dst.iter_mut().zip(src) {
        d.add_scaled_shifted(c, k, s);
    }
}

fn reduce_impl(
    mut rows: PolyMatrix,
    weights: &[i64],
    mut track: Option<PolyMatrix>,
) -> Result<(PolyMatrix, Option<PolyMatrix>)> {
    let nu = rows.len();
    if nu == 0 || rows.iter().any(|r| r.len() != nu) || weights.len() != nu {
        return Err(invalid!("row reduction needs a square matrix and one weight per column"));
    }
    if weights.iter().any(|&w| w < 0) {
        return Err(invalid!("negative column weight"));
    }
    let field = rows[0][0].field().clone();
    let singular = || invalid!("row reduction of a singular matrix");
    let mut owner: Vec<Option<usize>> = vec![None; nu];
    let mut work: Vec<usize> = (0..nu).rev().collect();
    while let Some(r) = work.pop() {
        let (pr, dr) = leading_position(&rows[r], weights).ok_or_else(singular)?;
        let Some(o) = owner[pr] else {
            owner[pr] = Some(r);
            continue;
        };
        let (_, d_o) = leading_position(&rows[o], weights).ok_or_else(singular)?;
        // Reduce the row of larger degree by the other one.
        let (hi, lo, dh, dl) = if d_o > dr { (o, r, d_o, dr) } else { (r, o, dr, d_o) };
        let lc_hi = rows[hi][pr].lc();
        let lc_lo = rows[lo][pr].lc();
        let c = field.neg(field.div(lc_hi, lc_lo)?);
        let k = usize::try_from((dh - dl) / 2)
            .map_err(|_| Error::Internal("negative degree gap".into()))?;
        eliminate(&mut rows, hi, lo, c, k);
        if let Some(u) = track.as_mut() {
            eliminate(u, hi, lo, c, k);
        }
        owner[pr] = Some(lo);
        work.push(hi);
    }
    Ok((rows, track))
}
