//! Generalized Reed–Solomon codes and their list decoder.
//!
//! The code is `{(v_i·η(α_i))_i : deg η < k}` with distinct nonzero `α_i`
//! and nonzero column multipliers `v_i`. Decoding follows the classical
//! route: syndrome, Euclidean algorithm on `(x^(d-1), S)`, and, when the
//! resulting locator candidate fails, rational interpolation through the
//! points `(α_i, h̃1(α_i), h̃2(α_i))`.

use crate::decode::{
    hamming_distance, normalize, Candidate, DecodeOptions, DecodeOutput, DecodePath, ListParams,
};
use crate::error::{invalid, Error, Result};
use crate::galois::{Elem, Field};
use crate::keyeq::solve_key_equation;
use crate::poly::{Degree, Poly};
use crate::radius::{johnson_max_tau, within_johnson};
use crate::ratinterp::{
    choose_params, feasible_counts, find_linear_factors, interpolate, HalfInt, InterpPoint,
    ListConstraint, RatParams,
};

#[derive(Clone, Debug)]
pub struct GrsCode {
    field: Field,
    k: usize,
    alphas: Vec<Elem>,
    mults: Vec<Elem>,
    hat_v: Vec<Elem>,
}

impl GrsCode {
    /// Checks `1 <= k < n <= q - 1`, distinct nonzero `alphas` and nonzero
    /// multipliers.
    pub fn new(field: &Field, k: usize, alphas: Vec<Elem>, mults: Vec<Elem>) -> Result<Self> {
        let n = alphas.len();
        if mults.len() != n {
            return Err(invalid!("{n} evaluation points but {} multipliers", mults.len()));
        }
        if k == 0 || k >= n {
            return Err(invalid!("need 1 <= k < n, got k = {k}, n = {n}"));
        }
        if n as u64 > field.order() as u64 - 1 {
            return Err(invalid!("n = {n} exceeds q - 1 = {}", field.order() - 1));
        }
        for (i, &a) in alphas.iter().enumerate() {
            field.elem(a.value())?;
            if a.is_zero() {
                return Err(invalid!("evaluation point {i} is zero"));
            }
            if alphas[..i].contains(&a) {
                return Err(invalid!("evaluation point {a} repeated"));
            }
        }
        for &v in &mults {
            field.elem(v.value())?;
            if v.is_zero() {
                return Err(invalid!("column multipliers must be nonzero"));
            }
        }
        let hat_v = alphas
            .iter()
            .zip(&mults)
            .enumerate()
            .map(|(j, (&aj, &vj))| {
                let prod = alphas
                    .iter()
                    .enumerate()
                    .filter(|&(h, _)| h != j)
                    .fold(vj, |acc, (_, &ah)| field.mul(acc, field.sub(aj, ah)));
                field.inv(prod)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GrsCode {
            field: field.clone(),
            k,
            alphas,
            mults,
            hat_v,
        })
    }

    /// Evaluation points `1, 2, ..., n` (by encoding) and unit multipliers.
    pub fn standard(field: &Field, n: usize, k: usize) -> Result<Self> {
        if n as u64 >= field.order() as u64 {
            return Err(invalid!("n = {n} exceeds q - 1 = {}", field.order() - 1));
        }
        let alphas = (1..=n as u32).map(Elem).collect();
        GrsCode::new(field, k, alphas, vec![Elem::ONE; n])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Minimum distance `n - k + 1`.
    pub fn d(&self) -> usize {
        self.n() - self.k + 1
    }

    pub fn alphas(&self) -> &[Elem] {
        &self.alphas
    }

    pub fn multipliers(&self) -> &[Elem] {
        &self.mults
    }

    /// `v̂_j = (v_j·Π_{h≠j}(α_j - α_h))^(-1)`.
    pub fn hat_v(&self) -> &[Elem] {
        &self.hat_v
    }

    pub fn encode(&self, message: &Poly) -> Result<Vec<Elem>> {
        if message.field() != &self.field {
            return Err(Error::FieldMismatch);
        }
        if message.deg().cmp_int(self.k as i64).is_ge() {
            return Err(invalid!("message degree {} is not below k = {}", message.deg(), self.k));
        }
        Ok(self
            .alphas
            .iter()
            .zip(&self.mults)
            .map(|(&a, &v)| self.field.mul(v, message.eval(a)))
            .collect())
    }

    fn check_word(&self, r: &[Elem]) -> Result<()> {
        if r.len() != self.n() {
            return Err(invalid!("word of length {} for a code of length {}", r.len(), self.n()));
        }
        for &x in r {
            self.field.elem(x.value())?;
        }
        Ok(())
    }

    /// `S(x) = Σ_{i<d-1} x^i Σ_j r_j v̂_j α_j^(d-2-i)`.
    pub fn syndrome(&self, r: &[Elem]) -> Result<Poly> {
        self.check_word(r)?;
        let f = &self.field;
        let dm1 = self.d() - 1;
        let mut coeffs = vec![Elem::ZERO; dm1];
        for (j, &rj) in r.iter().enumerate() {
            if rj.is_zero() {
                continue;
            }
            // t runs over exponents 0..d-1; exponent t lands at x^(d-2-t).
            let mut term = f.mul(rj, self.hat_v[j]);
            for t in 0..dm1 {
                let i = dm1 - 1 - t;
                coeffs[i] = f.add(coeffs[i], term);
                term = f.mul(term, self.alphas[j]);
            }
        }
        Ok(Poly::new(f, coeffs))
    }

    pub fn is_codeword(&self, r: &[Elem]) -> Result<bool> {
        Ok(self.syndrome(r)?.is_zero())
    }

    /// Error values at the roots of `Λ` among the evaluation points:
    /// `e_i = -Ω(α_i) / (α_i^(d-1)·v̂_i·Λ'(α_i))`.
    pub fn error_values(&self, lambda: &Poly, omega: &Poly) -> Result<Vec<(usize, Elem)>> {
        let f = &self.field;
        let dl = lambda.derivative();
        let mut out = Vec::new();
        for (i, &a) in self.alphas.iter().enumerate() {
            if !lambda.eval(a).is_zero() {
                continue;
            }
            let dla = dl.eval(a);
            if dla.is_zero() {
                return Err(invalid!("locator has a repeated root at {a}"));
            }
            let denom = f.mul(f.mul(f.pow(a, (self.d() - 1) as u64), self.hat_v[i]), dla);
            out.push((i, f.neg(f.div(omega.eval(a), denom)?)));
        }
        Ok(out)
    }

    /// Corrects `r` with the locator `lambda` if it is valid: square-free
    /// with all of its `deg Λ <= max_errors` roots among the evaluation
    /// points, nonzero error values, and a codeword as result.
    fn try_locator(&self, r: &[Elem], syn: &Poly, lambda: &Poly, max_errors: usize) -> Option<Candidate> {
        if lambda.is_zero() {
            return None;
        }
        let lambda = lambda.monic();
        let eps = lambda.deg().finite()?;
        if eps == 0 || eps > max_errors {
            return None;
        }
        let roots = self.alphas.iter().filter(|&&a| lambda.eval(a).is_zero()).count();
        if roots != eps {
            return None;
        }
        let omega = (&lambda * syn).truncate(self.d() - 1);
        let values = self.error_values(&lambda, &omega).ok()?;
        if values.iter().any(|(_, e)| e.is_zero()) {
            return None;
        }
        let mut c = r.to_vec();
        for &(i, e) in &values {
            c[i] = self.field.sub(c[i], e);
        }
        if !self.is_codeword(&c).ok()? {
            return None;
        }
        Some(Candidate {
            codeword: c,
            error_positions: values.iter().map(|&(i, _)| i).collect(),
            error_values: values.iter().map(|&(_, e)| e).collect(),
        })
    }
}

/// `(ℓ, s)` admits list decoding of `τ` errors: the counting bound
/// with `w1 + w2 = 2τ - d`.
pub fn wu_feasible(n: usize, d: usize, tau: usize, s: usize, ell: usize) -> bool {
    feasible_counts(n, tau, s, ell, HalfInt::from_int(2 * tau as i64 - d as i64))
}

/// The Guruswami–Sudan condition with multiplicity `r` and list size `ℓ`:
/// `n·r(r+1)/2 < (ℓ+1)·r·(n-τ) - (k-1)·ℓ(ℓ+1)/2`.
pub fn gsa_feasible(n: usize, k: usize, tau: usize, r: usize, ell: usize) -> bool {
    let (n, k, tau, r, ell) = (n as i128, k as i128, tau as i128, r as i128, ell as i128);
    n * r * (r + 1) < 2 * (ell + 1) * r * (n - tau) - (k - 1) * ell * (ell + 1)
}

/// Largest `τ` strictly inside the Johnson radius.
pub fn grs_max_tau(code: &GrsCode) -> Option<usize> {
    johnson_max_tau(code.n(), code.d())
}

/// Interpolation parameters for radius `τ`, `d/2 <= τ < n - √(n(n-d))`.
pub fn grs_params(code: &GrsCode, tau: usize, opts: &DecodeOptions) -> Result<ListParams> {
    let (n, d) = (code.n(), code.d());
    if 2 * tau < d {
        return Err(invalid!("τ = {tau} is below half the distance {d}; no list decoding needed"));
    }
    if !within_johnson(n, d, tau) {
        return Err(Error::Infeasible(format!(
            "τ = {tau} is not below the Johnson radius {:.4} of an [{n}, {}] code",
            crate::radius::johnson_radius(n, d),
            code.k()
        )));
    }
    let w_total = HalfInt::from_int(2 * tau as i64 - d as i64);
    let (s, ell) = match opts.forced {
        Some((ell, s)) => {
            if s == 0 || ell < s || !feasible_counts(n, tau, s, ell, w_total) {
                return Err(Error::Infeasible(format!("(ℓ, s) = ({ell}, {s}) is not valid for τ = {tau}")));
            }
            (s, ell)
        }
        None => choose_params(n, tau, w_total, opts.ell_max, ListConstraint::AtLeastS).ok_or_else(|| {
            Error::Infeasible(format!("no (ℓ, s) with ℓ <= {} for τ = {tau}", opts.ell_max))
        })?,
    };
    Ok(ListParams { tau, s, ell, w_total })
}

/// All codewords within distance `τ` of `r`, with default options.
pub fn wu_decode(code: &GrsCode, r: &[Elem], tau: usize) -> Result<DecodeOutput> {
    wu_decode_with(code, r, tau, &DecodeOptions::default())
}

pub fn wu_decode_with(code: &GrsCode, r: &[Elem], tau: usize, opts: &DecodeOptions) -> Result<DecodeOutput> {
    code.check_word(r)?;
    let (n, d) = (code.n(), code.d());
    if tau >= n {
        return Err(invalid!("τ = {tau} must be below n = {n}"));
    }
    let list = if 2 * tau >= d {
        Some(grs_params(code, tau, opts)?)
    } else {
        None
    };
    let output = |candidates: Vec<Candidate>, path| DecodeOutput {
        candidates: normalize(candidates),
        tau,
        ell: list.map(|p| p.ell),
        s: list.map(|p| p.s),
        path,
    };
    let syn = code.syndrome(r)?;
    if syn.is_zero() {
        let c = Candidate {
            codeword: r.to_vec(),
            error_positions: vec![],
            error_values: vec![],
        };
        return Ok(output(vec![c], DecodePath::Unique));
    }

    let f = code.field();
    let xd = Poly::monomial(f, Elem::ONE, d - 1);
    let pair = solve_key_equation(&xd, &syn, 0)?;
    let h1t = pair.h1.c1.clone();
    let h2t = pair.h2.c1.clone();

    // Step 3: at most d - τ errors leaves every other codeword at distance
    // at least τ, so only the boundary case needs the list step as well.
    let unique_bound = tau.min(d.saturating_sub(tau));
    let unique = code.try_locator(r, &syn, &h2t, unique_bound);
    let Some(lp) = list else {
        return Ok(output(unique.into_iter().collect(), DecodePath::Unique));
    };
    if let Some(c) = &unique {
        if c.error_positions.len() < d - tau {
            return Ok(output(vec![c.clone()], DecodePath::Unique));
        }
    }

    let xdeg2 = match h2t.deg() {
        Degree::Finite(v) => v as i64,
        Degree::NegInf => return Err(Error::Internal("zero cofactor in the Gröbner pair".into())),
    };
    let (w1, w2) = (tau as i64 - d as i64 + xdeg2, tau as i64 - xdeg2);
    let locators: Vec<Poly> = if w1 < 0 {
        vec![h2t.clone()]
    } else if w2 < 0 {
        vec![h1t.clone()]
    } else {
        let points = code
            .alphas()
            .iter()
            .map(|&a| {
                let (y, z) = (h1t.eval(a), h2t.eval(a));
                InterpPoint::new(f, a, y, z).map_err(|_| {
                    Error::Internal(format!("h̃1 and h̃2 vanish together at {a}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let (w1, w2) = (HalfInt::from_int(w1), HalfInt::from_int(w2));
        let params = RatParams::new(n, tau, lp.s, lp.ell, w1, w2)?;
        let q = interpolate(f, &points, &params)?;
        find_linear_factors(&q, w1, w2)
            .iter()
            .map(|(f1, f2)| &(f1 * &h1t) + &(f2 * &h2t))
            .collect()
    };
    let mut found: Vec<Candidate> = locators
        .iter()
        .filter_map(|lam| code.try_locator(r, &syn, lam, tau))
        .collect();
    found.extend(unique.clone());
    let found = normalize(found);
    for c in &found {
        if hamming_distance(&c.codeword, r) > tau {
            return Err(Error::Internal("candidate outside the decoding radius".into()));
        }
    }
    let path = match &unique {
        Some(u) if found.len() == 1 && found[0].codeword == u.codeword => DecodePath::Unique,
        _ => DecodePath::List,
    };
    Ok(output(found, path))
}
