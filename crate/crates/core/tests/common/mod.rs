#![allow(dead_code)]

use proptest::prelude::*;
use rand::Rng;
use ratdec::{Elem, Field, FieldSpec, Poly};

pub fn gf(p: u32, m: u32) -> Field {
    Field::new(FieldSpec::new(p, m, None).unwrap())
}

/// Small fields of both characteristics.
pub fn fields() -> Vec<Field> {
    vec![gf(2, 1), gf(5, 1), gf(13, 1), gf(2, 3), gf(2, 4), gf(3, 2), gf(2, 6)]
}

pub fn field_strategy() -> impl Strategy<Value = Field> {
    proptest::sample::select(fields())
}

pub fn elem(f: &Field, v: u32) -> Elem {
    f.elem(v % f.order()).unwrap()
}

pub fn poly_from(f: &Field, raw: &[u32]) -> Poly {
    Poly::new(f, raw.iter().map(|&v| elem(f, v)).collect())
}

pub fn rand_elem(f: &Field, rng: &mut impl Rng) -> Elem {
    f.elem(rng.random_range(0..f.order())).unwrap()
}

pub fn rand_nonzero(f: &Field, rng: &mut impl Rng) -> Elem {
    f.elem(rng.random_range(1..f.order())).unwrap()
}

/// Uniform polynomial with `len` coefficients (degree below `len`).
pub fn rand_poly(f: &Field, len: usize, rng: &mut impl Rng) -> Poly {
    Poly::new(f, (0..len).map(|_| rand_elem(f, rng)).collect())
}

/// Polynomial of degree exactly `deg`.
pub fn rand_poly_deg(f: &Field, deg: usize, rng: &mut impl Rng) -> Poly {
    let mut c: Vec<Elem> = (0..deg).map(|_| rand_elem(f, rng)).collect();
    c.push(rand_nonzero(f, rng));
    Poly::new(f, c)
}

pub fn rand_monic_irreducible(f: &Field, deg: usize, rng: &mut impl Rng) -> Poly {
    loop {
        let g = rand_poly_deg(f, deg, rng).monic();
        if g.is_irreducible() {
            return g;
        }
    }
}

pub fn distinct_elems(f: &Field, k: usize, rng: &mut impl Rng) -> Vec<Elem> {
    let mut all: Vec<Elem> = f.elements().collect();
    for i in 0..k {
        let j = rng.random_range(i..all.len());
        all.swap(i, j);
    }
    all.truncate(k);
    all
}

pub mod keyeq_checks {
    use ratdec::keyeq::{cofactor_bounds, is_groebner_pair, larger_side, solve_key_equation, PairPoly};
    use ratdec::poly::ea_full;
    use ratdec::Poly;

    fn deg(p: &Poly) -> i64 {
        p.deg_i64()
    }

    /// The four EA trace invariants at every row; returns a description of
    /// the first violation.
    pub fn ea_invariants(p: &Poly, q: &Poly) -> Result<(), String> {
        let f = p.field();
        let tr = ea_full(p, q).map_err(|e| e.to_string())?;
        let last = tr.len() - 1;
        if !tr.row(last).s.is_zero() || tr.row(0).s != *p || tr.row(1).s != *q {
            return Err("trace endpoints".into());
        }
        let g = p.gcd(q);
        if tr.row(tr.gcd_index()).s.monic() != g {
            return Err("s_N is not the gcd".into());
        }
        for i in 0..=last {
            let r = tr.row(i);
            if &(&r.u * p) + &(&r.v * q) != r.s {
                return Err(format!("s_{i} != u_i p + v_i q"));
            }
            if i == 0 {
                continue;
            }
            let prev = tr.row(i - 1);
            if i >= 2 && !(r.s.deg() < prev.s.deg()) {
                return Err(format!("deg s_{i} does not decrease"));
            }
            let det = &(&r.u * &prev.v) - &(&prev.u * &r.v);
            let sign = if i % 2 == 0 { Poly::one(f) } else { -&Poly::one(f) };
            if det != sign {
                return Err(format!("u_i v_(i-1) - u_(i-1) v_i != (-1)^{i}"));
            }
            if deg(p) != deg(&r.v) + deg(&prev.s) {
                return Err(format!("deg p != deg v_{i} + deg s_{}", i - 1));
            }
        }
        Ok(())
    }

    /// Gröbner pair checks for `solve_key_equation(p, q, mu)`.
    pub fn pair_invariants(p: &Poly, q: &Poly, mu: usize) -> Result<(), String> {
        let pair = solve_key_equation(p, q, mu).map_err(|e| e.to_string())?;
        if !is_groebner_pair(&pair.h1, &pair.h2, p, q, pair.order)
            || !is_groebner_pair(&pair.h2, &pair.h1, p, q, pair.order)
        {
            return Err("not a Gröbner pair".into());
        }
        let l1 = pair.h1.leading_term(pair.order).ok_or("h1 = 0")?;
        let l2 = pair.h2.leading_term(pair.order).ok_or("h2 = 0")?;
        if (l1.ydeg, l2.ydeg) != (0, 1) {
            return Err("leading y-degrees are not (0, 1)".into());
        }
        if (pair.xdeg1() + pair.xdeg2()) as i64 != deg(p) {
            return Err("deg^x h1 + deg^x h2 != deg p".into());
        }
        let i = pair.stop_index;
        let halts = |j: usize| {
            let r = pair.trace.row(j);
            r.s.deg() < r.v.deg().plus(mu)
        };
        if !halts(i) || (1..i).any(halts) {
            return Err(format!("stop index {i} is not the first halting row"));
        }
        for (h, j) in [(&pair.h1, i - 1), (&pair.h2, i)] {
            let r = pair.trace.row(j);
            if h.module_coordinates(p, q) != Some((r.u.clone(), -&r.v)) {
                return Err(format!("coordinates of row {j} are not (u, -v)"));
            }
        }
        Ok(())
    }

    /// Expands `a·p + b·(y - q)` in the pair and checks the cofactor degree
    /// bounds.
    pub fn division_invariants(p: &Poly, q: &Poly, mu: usize, a: &Poly, b: &Poly) -> Result<(), String> {
        let pair = solve_key_equation(p, q, mu).map_err(|e| e.to_string())?;
        let h = PairPoly::new(&(a * p) - &(b * q), b.clone());
        let (f1, f2, rem) = pair.divide(&h);
        if !rem.is_zero() {
            return Err("module element left a remainder".into());
        }
        if pair.h1.scale_poly(&f1).add(&pair.h2.scale_poly(&f2)) != h {
            return Err("expansion does not reproduce h".into());
        }
        if h.is_zero() {
            return Ok(());
        }
        let (delta, gamma) = (h.c0.clone(), -&h.c1);
        let side = larger_side(&delta, &gamma, pair.order).ok_or("no leading term")?;
        let bd = cofactor_bounds(&pair, deg(&gamma), deg(&delta), side);
        // A zero cofactor meets every upper bound.
        let (d1, d2) = (deg(&f1), deg(&f2));
        if (!f1.is_zero() && d1 > bd.f1) || (!f2.is_zero() && d2 > bd.f2) {
            return Err(format!("cofactor degrees ({d1}, {d2}) exceed bounds {bd:?}"));
        }
        if (bd.f1_exact() && d1 != bd.f1) || (bd.f2_exact() && d2 != bd.f2) {
            return Err(format!("exact bound missed: ({d1}, {d2}) vs {bd:?}"));
        }
        Ok(())
    }
}

pub mod interp_checks {
    use rand::Rng;
    use ratdec::oracles::{exhaustive_factor_search, DEFAULT_CAP};
    use ratdec::ratinterp::{
        build_basis, check_multiplicity, express_in_basis, feasible_counts, find_linear_factors,
        interpolate, interpolate_minimal, naive_interpolate, naive_minimal, HalfInt, HomogPoly,
        InterpPoint, NaiveSystem, RatParams,
    };
    use ratdec::{Elem, Field, Poly};

    use super::{distinct_elems, rand_elem, rand_nonzero, rand_poly};

    /// `n` points with distinct abscissae, about one in five at infinity.
    pub fn rand_points(f: &Field, n: usize, rng: &mut impl Rng) -> Vec<InterpPoint> {
        distinct_elems(f, n, rng)
            .into_iter()
            .map(|x| {
                if rng.random_range(0..5) == 0 {
                    InterpPoint::new(f, x, rand_nonzero(f, rng), Elem::ZERO).unwrap()
                } else {
                    InterpPoint::affine(x, rand_elem(f, rng))
                }
            })
            .collect()
    }

    /// Divisibility of the module elements: `g_z^(j-(ℓ-s))` divides `P_j` for the top
    /// `s` coefficients.
    fn gz_divides(p: &HomogPoly, gz: &Poly, s: usize) -> bool {
        let ell = p.ell();
        (ell + 1 - s.min(ell + 1)..=ell).all(|j| {
            let e = (j + s) as i64 - ell as i64;
            e <= 0 || gz.pow(e as u64).divides(&p.coeffs[j])
        })
    }

    /// One interpolation-basis instance; returns a description of the first
    /// violated property.
    pub fn basis_instance(
        f: &Field,
        points: &[InterpPoint],
        s: usize,
        ell: usize,
        w1: HalfInt,
        w2: HalfInt,
        rng: &mut impl Rng,
    ) -> Result<(), String> {
        let n = points.len();
        let (ctx, basis) = build_basis(f, points, s, ell).map_err(|e| e.to_string())?;
        for (j, b) in basis.iter().enumerate() {
            if b.ell() != ell || b.y_degree() != Some(ell - j) {
                return Err(format!("B^({j}) has the wrong shape"));
            }
            if b.coeffs.iter().any(|c| c.deg().cmp_int((s * n) as i64).is_gt()) {
                return Err(format!("B^({j}) has an entry of degree above s·n"));
            }
            if let Some(pt) = points.iter().find(|pt| !check_multiplicity(b, pt, s)) {
                return Err(format!("B^({j}) misses multiplicity {s} at x = {}", pt.x));
            }
        }
        // Random F[x]-combinations stay in the module.
        let mut combo = HomogPoly::zero(f, ell);
        for b in &basis {
            combo = combo.add(&b.scale_poly(&rand_poly(f, 3, rng))).unwrap();
        }
        if points.iter().any(|pt| !check_multiplicity(&combo, pt, s)) {
            return Err("a combination of basis elements left the module".into());
        }

        let (wmin, _) = naive_minimal(f, points, s, ell, w1, w2).map_err(|e| e.to_string())?;
        let sys = NaiveSystem::new(f, points, s, ell, w1, w2, wmin.twice() + 3).map_err(|e| e.to_string())?;
        for sol in sys.solutions() {
            if points.iter().any(|pt| !check_multiplicity(&sol, pt, s)) {
                return Err("naive solution misses a multiplicity".into());
            }
            if !gz_divides(&sol, &ctx.g_z, s) {
                return Err("g_z power does not divide a naive solution".into());
            }
            match express_in_basis(&sol, &basis) {
                Ok(Some(_)) => {}
                _ => return Err("naive solution outside the span of the basis".into()),
            }
        }

        let q = interpolate_minimal(f, points, s, ell, w1, w2).map_err(|e| e.to_string())?;
        if points.iter().any(|pt| !check_multiplicity(&q, pt, s)) {
            return Err("interpolate_minimal output misses a multiplicity".into());
        }
        match q.wdeg(w1, w2) {
            Some(w) if w <= wmin => {}
            w => return Err(format!("weighted degree {w:?} above the oracle minimum {wmin}")),
        }

        if let Some(tau) = (1..=n).find(|&t| feasible_counts(n, t, s, ell, w1 + w2)) {
            let params = RatParams::new(n, tau, s, ell, w1, w2).unwrap();
            let bound = HalfInt::from_int((s * tau) as i64);
            for (name, res) in [
                ("interpolate", interpolate(f, points, &params)),
                ("naive_interpolate", naive_interpolate(f, points, &params)),
            ] {
                let q = res.map_err(|e| format!("{name}: {e}"))?;
                if points.iter().any(|pt| !check_multiplicity(&q, pt, s))
                    || q.wdeg(w1, w2).is_none_or(|w| w >= bound)
                {
                    return Err(format!("{name} output violates its constraints"));
                }
            }
        }
        Ok(())
    }

    /// Normalizes `(f1, f2)` the way the factor finder does.
    pub fn normalize_pair(f1: &Poly, f2: &Poly) -> (Poly, Poly) {
        let g = f1.gcd(f2);
        let (f1, f2) = (f1.div_exact(&g).unwrap(), f2.div_exact(&g).unwrap());
        let lc = if f1.is_zero() { f2.lc() } else { f1.lc() };
        let inv = f1.field().inv(lc).unwrap();
        (f1.scale(inv), f2.scale(inv))
    }

    /// Plants `y·f1 + z·f2` in a random product and checks it is recovered;
    /// with `oracle`, also compares the full factor set against exhaustive
    /// search.
    pub fn factor_instance(
        f: &Field,
        ell: usize,
        w1: HalfInt,
        w2: HalfInt,
        oracle: bool,
        rng: &mut impl Rng,
    ) -> Result<(), String> {
        let (b1, b2) = (w1.floor() as usize, w2.floor() as usize);
        let (f1, f2) = loop {
            let f1 = rand_poly(f, rng.random_range(0..=b1) + 1, rng);
            let f2 = rand_poly(f, rng.random_range(0..=b2) + 1, rng);
            if !(f1.is_zero() && f2.is_zero()) && f1.gcd(&f2).is_one() {
                break normalize_pair(&f1, &f2);
            }
        };
        let lin = HomogPoly::new(vec![f2.clone(), f1.clone()]);
        let cof = HomogPoly::new((0..ell).map(|_| rand_poly(f, rng.random_range(0..4), rng)).collect());
        if cof.is_zero() {
            return Ok(());
        }
        let q = lin.mul(&cof);
        let mut found = find_linear_factors(&q, w1, w2);
        if !found.contains(&(f1.clone(), f2.clone())) {
            return Err(format!("planted ({f1}, {f2}) not recovered from {q:?}"));
        }
        for (g1, g2) in &found {
            if !q.has_linear_factor(g1, g2) {
                return Err(format!("reported ({g1}, {g2}) does not divide"));
            }
        }
        if oracle {
            let mut expect = exhaustive_factor_search(&q, w1, w2, DEFAULT_CAP).map_err(|e| e.to_string())?;
            expect.sort_by_key(|(a, b)| (a.to_values(), b.to_values()));
            found.sort_by_key(|(a, b)| (a.to_values(), b.to_values()));
            if expect != found {
                return Err(format!("factor sets differ: found {found:?}, oracle {expect:?}"));
            }
        }
        Ok(())
    }
}

/// Determinant of a square polynomial matrix by fraction-free elimination.
pub fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let f = m[0][0].field().clone();
    let mut a: Vec<Vec<Poly>> = m.to_vec();
    let mut prev = Poly::one(&f);
    let mut sign = false;
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Poly::zero(&f);
        };
        if piv != k {
            a.swap(piv, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = Poly::zero(&f);
        }
        prev = a[k][k].clone();
    }
    if sign {
        -&a[n - 1][n - 1]
    } else {
        a[n - 1][n - 1].clone()
    }
}

pub fn mat_mul(a: &[Vec<Poly>], b: &[Vec<Poly>]) -> Vec<Vec<Poly>> {
    let f = a[0][0].field().clone();
    a.iter()
        .map(|row| {
            (0..b[0].len())
                .map(|j| row.iter().zip(b).fold(Poly::zero(&f), |acc, (x, brow)| &acc + &(x * &brow[j])))
                .collect()
        })
        .collect()
}
