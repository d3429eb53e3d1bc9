//! Interpolation by a dense linear system; a slow cross-check for the
//! module-basis route.

use crate::error::{Error, Result};
use crate::galois::{Elem, Field};
use crate::linalg::nullspace;
use crate::poly::Poly;

use super::{check_distinct, column_weight, feasible, HalfInt, HomogPoly, InterpPoint, RatParams};

/// The homogeneous system whose solutions are the `Q` with multiplicity `s`
/// at every point and doubled weighted degree below `bound2`.
#[derive(Clone, Debug)]
pub struct NaiveSystem {
    field: Field,
    /// Number of unknown coefficients of each `Q_i`.
    pub column_lens: Vec<usize>,
    pub rows: Vec<Vec<Elem>>,
}

impl NaiveSystem {
    pub fn new(
        field: &Field,
        points: &[InterpPoint],
        s: usize,
        ell: usize,
        w1: HalfInt,
        w2: HalfInt,
        bound2: i64,
    ) -> Result<Self> {
        check_distinct(points)?;
        let column_lens: Vec<usize> = (0..=ell)
            .map(|i| (bound2 - column_weight(ell, w1, w2, i) + 1).div_euclid(2).max(0) as usize)
            .collect();
        let offsets: Vec<usize> = column_lens
            .iter()
            .scan(0, |acc, &l| {
                let o = *acc;
                *acc += l;
                Some(o)
            })
            .collect();
        let unknowns: usize = column_lens.iter().sum();
        let max_k = column_lens.iter().copied().max().unwrap_or(0);
        let mut rows = Vec::new();
        for pt in points {
            // xs[k] = (x + x0)^k, ys[i] = (y + y0)^i, expanded directly.
            let xs = powers(&Poly::new(field, vec![pt.x, Elem::ONE]), max_k);
            if pt.at_infinity() {
                for c in 0..s.min(ell + 1) {
                    let i = ell - c;
                    for a in 0..s - c {
                        let mut row = vec![Elem::ZERO; unknowns];
                        for k in 0..column_lens[i] {
                            row[offsets[i] + k] = xs[k].coeff(a);
                        }
                        rows.push(row);
                    }
                }
            } else {
                let ys = powers(&Poly::new(field, vec![pt.y, Elem::ONE]), ell);
                for a in 0..s {
                    for b in 0..s - a {
                        let mut row = vec![Elem::ZERO; unknowns];
                        for i in 0..=ell {
                            let yb = ys[i].coeff(b);
                            if yb.is_zero() {
                                continue;
                            }
                            for k in 0..column_lens[i] {
                                row[offsets[i] + k] = field.mul(xs[k].coeff(a), yb);
                            }
                        }
                        rows.push(row);
                    }
                }
            }
        }
        Ok(NaiveSystem {
            field: field.clone(),
            column_lens,
            rows,
        })
    }

    pub fn constraint_count(&self) -> usize {
        self.rows.len()
    }

    pub fn unknown_count(&self) -> usize {
        self.column_lens.iter().sum()
    }

    fn to_form(&self, v: &[Elem]) -> HomogPoly {
        let mut it = v.iter().copied();
        HomogPoly::new(
            self.column_lens
                .iter()
                .map(|&l| Poly::new(&self.field, it.by_ref().take(l).collect()))
                .collect(),
        )
    }

    /// A basis of the solution space.
    pub fn solutions(&self) -> Vec<HomogPoly> {
        nullspace(&self.field, &self.rows, self.unknown_count())
            .iter()
            .map(|v| self.to_form(v))
            .collect()
    }

    pub fn solve(&self) -> Option<HomogPoly> {
        self.solutions().into_iter().next()
    }
}

fn powers(base: &Poly, max: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one(base.field())];
    for _ in 0..max {
        let next = out.last().expect("nonempty") * base;
        out.push(next);
    }
    out
}

/// Some nonzero `Q` with multiplicity `s` everywhere and weighted degree
/// below `s·τ`.
pub fn naive_interpolate(field: &Field, points: &[InterpPoint], params: &RatParams) -> Result<HomogPoly> {
    if !feasible(params) {
        return Err(Error::Infeasible(format!("{params:?}")));
    }
    let bound2 = 2 * (params.s * params.tau) as i64;
    NaiveSystem::new(field, points, params.s, params.ell, params.w1, params.w2, bound2)?
        .solve()
        .ok_or_else(|| Error::Internal("feasible system without a solution".into()))
}

/// The smallest weighted degree of a nonzero `Q` with multiplicity `s` at
/// every point, with one such `Q`.
pub fn naive_minimal(
    field: &Field,
    points: &[InterpPoint],
    s: usize,
    ell: usize,
    w1: HalfInt,
    w2: HalfInt,
) -> Result<(HalfInt, HomogPoly)> {
    let cap = 2 * (s * (points.len() + 1)) as i64 + (ell as i64 + 1) * (w1 + w2).twice() + 4;
    let start = (0..=ell).map(|i| column_weight(ell, w1, w2, i)).min().unwrap_or(0) + 1;
    for bound2 in start..=cap {
        let sys = NaiveSystem::new(field, points, s, ell, w1, w2, bound2)?;
        if let Some(q) = sys.solve() {
            let w = q.wdeg(w1, w2).expect("nonzero solution");
            return Ok((w, q));
        }
    }
    Err(Error::Internal("no interpolation polynomial below the degree cap".into()))
}
