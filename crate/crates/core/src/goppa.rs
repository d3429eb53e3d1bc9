//! Irreducible binary Goppa codes and their list decoder.
//!
//! `Γ(g, L)` is the set of binary words `c` with `Σ c_i/(x - α_i) ≡ 0 mod g`.
//! Decoding goes through Patterson's rewrite of the key equation,
//! `b·S̃ ≡ a mod g` with `Λ = a² + x·b²`, solved by the Euclidean algorithm;
//! beyond `t = deg g` errors the two Gröbner basis elements feed a rational
//! interpolation through `(α_i, √ĥ1(α_i), √ĥ2(α_i))`.

use crate::decode::{
    hamming_distance, normalize, Candidate, DecodeOptions, DecodeOutput, DecodePath, ListParams,
};
use crate::error::{invalid, Error, Result};
use crate::galois::{Elem, Field};
use crate::keyeq::{solve_key_equation, GrobnerPair};
use crate::linalg::{nullspace, rank};
use crate::poly::{mod_inverse, mod_sqrt_char2, Degree, Poly};
use crate::radius::{binary_johnson_max_tau, binary_johnson_radius, within_binary_johnson};
use crate::ratinterp::{
    choose_params, feasible_counts, find_linear_factors, interpolate, HalfInt, InterpPoint,
    ListConstraint, RatParams,
};

#[derive(Clone, Debug)]
pub struct GoppaCode {
    field: Field,
    g: Poly,
    support: Vec<Elem>,
    /// `(x - α_i)^(-1) mod g`.
    inverses: Vec<Poly>,
    /// Rows spanning the code over GF(2).
    generator: Vec<Vec<Elem>>,
}

impl GoppaCode {
    /// Checks that the field has characteristic 2, `g` is irreducible of
    /// degree `t >= 1` with no root in the support, and the support is
    /// duplicate-free.
    pub fn new(field: &Field, g: Poly, support: Vec<Elem>) -> Result<Self> {
        if !field.is_char2() {
            return Err(invalid!("binary Goppa codes need a field of characteristic 2"));
        }
        if g.field() != field {
            return Err(Error::FieldMismatch);
        }
        if g.deg().cmp_int(1).is_lt() {
            return Err(invalid!("Goppa polynomial must have positive degree"));
        }
        if !g.is_irreducible() {
            return Err(invalid!("Goppa polynomial {g} is not irreducible"));
        }
        let g = g.monic();
        if support.len() < 2 {
            return Err(invalid!("support needs at least two elements"));
        }
        for (i, &a) in support.iter().enumerate() {
            field.elem(a.value())?;
            if support[..i].contains(&a) {
                return Err(invalid!("support element {a} repeated"));
            }
            if g.eval(a).is_zero() {
                return Err(invalid!("Goppa polynomial vanishes at support element {a}"));
            }
        }
        let inverses = support
            .iter()
            .map(|&a| mod_inverse(&Poly::linear(field, a), &g))
            .collect::<Result<Vec<_>>>()?;
        let mut code = GoppaCode {
            field: field.clone(),
            g,
            support,
            inverses,
            generator: Vec::new(),
        };
        let h = code.parity_check();
        let gf2 = Field::prime(2)?;
        code.generator = nullspace(&gf2, &h, code.n());
        Ok(code)
    }

    /// Support `0, 1, ..., n-1` (by encoding).
    pub fn with_first_support(field: &Field, g: Poly, n: usize) -> Result<Self> {
        if n > field.order() as usize {
            return Err(invalid!("support of size {n} exceeds the field order {}", field.order()));
        }
        GoppaCode::new(field, g, (0..n as u32).map(Elem).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn goppa_poly(&self) -> &Poly {
        &self.g
    }

    pub fn support(&self) -> &[Elem] {
        &self.support
    }

    pub fn n(&self) -> usize {
        self.support.len()
    }

    pub fn t(&self) -> usize {
        self.g.deg().finite().expect("positive degree")
    }

    pub fn m(&self) -> usize {
        self.field.degree() as usize
    }

    /// Dimension over GF(2).
    pub fn k(&self) -> usize {
        self.generator.len()
    }

    /// Rows of a GF(2) basis of the code, entries 0 or 1.
    pub fn generator(&self) -> &[Vec<Elem>] {
        &self.generator
    }

    /// The `m·t × n` binary parity-check matrix: column `i` holds the bits
    /// of the coefficients of `(x - α_i)^(-1) mod g`.
    pub fn parity_check(&self) -> Vec<Vec<Elem>> {
        let (m, t, n) = (self.m(), self.t(), self.n());
        let mut h = vec![vec![Elem::ZERO; n]; m * t];
        for (i, inv) in self.inverses.iter().enumerate() {
            for j in 0..t {
                let c = inv.coeff(j).value();
                for b in 0..m {
                    h[j * m + b][i] = Elem((c >> b) & 1);
                }
            }
        }
        h
    }

    /// `n - rank(H)`, computed afresh.
    pub fn dimension_from_rank(&self) -> usize {
        let gf2 = Field::prime(2).expect("GF(2)");
        self.n() - rank(&gf2, &self.parity_check(), self.n())
    }

    fn check_word(&self, r: &[Elem]) -> Result<()> {
        if r.len() != self.n() {
            return Err(invalid!("word of length {} for a code of length {}", r.len(), self.n()));
        }
        if r.iter().any(|x| x.value() > 1) {
            return Err(invalid!("binary word expected"));
        }
        Ok(())
    }

    /// `Σ m_i·G_i` over GF(2).
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.k() {
            return Err(invalid!("message of length {} for dimension {}", message.len(), self.k()));
        }
        let mut c = vec![Elem::ZERO; self.n()];
        for (bit, row) in message.iter().zip(&self.generator) {
            match bit.value() {
                0 => {}
                1 => {
                    for (ci, &ri) in c.iter_mut().zip(row) {
                        *ci = Elem(ci.value() ^ ri.value());
                    }
                }
                _ => return Err(invalid!("binary message expected")),
            }
        }
        Ok(c)
    }

    /// `S(x) = Σ r_i/(x - α_i) mod g`.
    pub fn syndrome(&self, r: &[Elem]) -> Result<Poly> {
        self.check_word(r)?;
        Ok(r
            .iter()
            .zip(&self.inverses)
            .filter(|(b, _)| b.value() == 1)
            .fold(Poly::zero(&self.field), |acc, (_, inv)| &acc + inv))
    }

    pub fn is_member(&self, r: &[Elem]) -> Result<bool> {
        Ok(self.syndrome(r)?.is_zero())
    }

    /// Flips `r` at the roots of `Λ` if it is a valid locator: square-free
    /// with all of its `deg Λ <= max_errors` roots in the support, giving a
    /// codeword.
    fn try_locator(&self, r: &[Elem], lambda: &Poly, max_errors: usize) -> Option<Candidate> {
        if lambda.is_zero() {
            return None;
        }
        let eps = lambda.deg().finite()?;
        if eps == 0 || eps > max_errors {
            return None;
        }
        let positions: Vec<usize> = (0..self.n())
            .filter(|&i| lambda.eval(self.support[i]).is_zero())
            .collect();
        if positions.len() != eps {
            return None;
        }
        let mut c = r.to_vec();
        for &i in &positions {
            c[i] = Elem(c[i].value() ^ 1);
        }
        if !self.is_member(&c).ok()? {
            return None;
        }
        Some(Candidate {
            codeword: c,
            error_values: vec![Elem::ONE; positions.len()],
            error_positions: positions,
        })
    }
}

/// A random monic irreducible polynomial of degree `t`, drawing coefficients
/// from `next`.
pub fn random_irreducible(field: &Field, t: usize, next: &mut dyn FnMut() -> u64) -> Poly {
    let q = field.order() as u64;
    loop {
        let mut c: Vec<Elem> = (0..t).map(|_| Elem((next() % q) as u32)).collect();
        c.push(Elem::ONE);
        let g = Poly::new(field, c);
        if g.is_irreducible() {
            return g;
        }
    }
}

/// Intermediate quantities of Patterson's reduction.
#[derive(Clone, Debug)]
pub struct PattersonState {
    pub syndrome: Poly,
    pub syndrome_inv: Poly,
    /// `S̃² ≡ x + S^(-1) mod g`.
    pub s_tilde: Poly,
    /// Gröbner pair of `[g, y - S̃]` under the `(1, 1)`-weighted order.
    pub pair: GrobnerPair,
    /// `ĥ_k = h_k0² + x·h_k1²`.
    pub hat_h1: Poly,
    pub hat_h2: Poly,
}

#[derive(Clone, Debug)]
pub enum PattersonOutcome {
    /// `S^(-1) ≡ x` and position `i` holds `0`: the only locator is `x`.
    FlipZero(usize),
    /// `S^(-1) ≡ x` but `0` is not in the support.
    Fail,
    State(Box<PattersonState>),
}

pub fn patterson_reduce(code: &GoppaCode, syndrome: &Poly) -> Result<PattersonOutcome> {
    if syndrome.is_zero() {
        return Err(invalid!("zero syndrome: the word is already a codeword"));
    }
    let f = code.field();
    let g = code.goppa_poly();
    let s_inv = mod_inverse(syndrome, g)?;
    let x = Poly::x(f).rem(g)?;
    if s_inv == x {
        return Ok(match code.support().iter().position(|a| a.is_zero()) {
            Some(i) => PattersonOutcome::FlipZero(i),
            None => PattersonOutcome::Fail,
        });
    }
    let s_tilde = mod_sqrt_char2(&(&x + &s_inv), g)?;
    let pair = solve_key_equation(g, &s_tilde, 1)?;
    let hat = |c0: &Poly, c1: &Poly| &c0.square() + &c1.square().shift(1);
    let hat_h1 = hat(&pair.h1.c0, &pair.h1.c1);
    let hat_h2 = hat(&pair.h2.c0, &pair.h2.c1);
    Ok(PattersonOutcome::State(Box::new(PattersonState {
        syndrome: syndrome.clone(),
        syndrome_inv: s_inv,
        s_tilde,
        pair,
        hat_h1,
        hat_h2,
    })))
}

/// Largest `τ` strictly inside the binary Johnson radius.
pub fn goppa_max_tau(code: &GoppaCode) -> Option<usize> {
    binary_johnson_max_tau(code.n(), code.t())
}

/// Interpolation parameters for `t < τ < n/2 - ½√(n(n-4t-2))`, with
/// `ℓ > 2s`.
pub fn goppa_params(code: &GoppaCode, tau: usize, opts: &DecodeOptions) -> Result<ListParams> {
    let (n, t) = (code.n(), code.t());
    if tau <= t {
        return Err(invalid!("τ = {tau} does not exceed t = {t}; no list decoding needed"));
    }
    if !within_binary_johnson(n, t, tau) {
        return Err(Error::Infeasible(format!(
            "τ = {tau} is not below the binary Johnson radius {:.4} for n = {n}, t = {t}",
            binary_johnson_radius(n, t)
        )));
    }
    let w_total = HalfInt::from_halves(2 * tau as i64 - 2 * t as i64 - 1);
    let (s, ell) = match opts.forced {
        Some((ell, s)) => {
            if s == 0 || ell <= 2 * s || !feasible_counts(n, tau, s, ell, w_total) {
                return Err(Error::Infeasible(format!("(ℓ, s) = ({ell}, {s}) is not valid for τ = {tau}")));
            }
            (s, ell)
        }
        None => choose_params(n, tau, w_total, opts.ell_max, ListConstraint::AboveTwiceS).ok_or_else(|| {
            Error::Infeasible(format!("no (ℓ, s) with ℓ <= {} for τ = {tau}", opts.ell_max))
        })?,
    };
    Ok(ListParams { tau, s, ell, w_total })
}

/// All codewords within distance `τ` of `r`, with default options.
pub fn wu_decode_goppa(code: &GoppaCode, r: &[Elem], tau: usize) -> Result<DecodeOutput> {
    wu_decode_goppa_with(code, r, tau, &DecodeOptions::default())
}

pub fn wu_decode_goppa_with(
    code: &GoppaCode,
    r: &[Elem],
    tau: usize,
    opts: &DecodeOptions,
) -> Result<DecodeOutput> {
    code.check_word(r)?;
    let (n, t) = (code.n(), code.t());
    if tau >= n {
        return Err(invalid!("τ = {tau} must be below n = {n}"));
    }
    let list = if tau > t {
        Some(goppa_params(code, tau, opts)?)
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
    let st = match patterson_reduce(code, &syn)? {
        PattersonOutcome::FlipZero(i) => {
            let found = code.try_locator(r, &Poly::x(code.field()), tau);
            debug_assert!(found.as_ref().is_none_or(|c| c.error_positions == [i]));
            return Ok(output(found.into_iter().collect(), DecodePath::Unique));
        }
        PattersonOutcome::Fail => return Ok(output(vec![], DecodePath::Unique)),
        PattersonOutcome::State(st) => st,
    };

    // Any other codeword is at distance >= 2t + 1 - ε > τ from r.
    let unique_bound = tau.min((2 * t).saturating_sub(tau));
    for h in [&st.hat_h1, &st.hat_h2] {
        if let Some(c) = code.try_locator(r, h, unique_bound) {
            return Ok(output(vec![c], DecodePath::Unique));
        }
    }
    let Some(lp) = list else {
        return Ok(output(vec![], DecodePath::Unique));
    };

    let xdeg2 = match st.pair.h2.c1.deg() {
        Degree::Finite(v) => v as i64,
        Degree::NegInf => return Err(Error::Internal("zero cofactor in the Gröbner pair".into())),
    };
    let (tau_i, t_i) = (tau as i64, t as i64);
    let w1 = HalfInt::from_halves(tau_i - 2 * t_i + 2 * xdeg2);
    let w2 = HalfInt::from_halves(tau_i - 1 - 2 * xdeg2);
    let locators: Vec<Poly> = if w1.is_negative() {
        vec![st.hat_h2.clone()]
    } else if w2.is_negative() {
        vec![st.hat_h1.clone()]
    } else {
        let f = code.field();
        let points = code
            .support()
            .iter()
            .map(|&a| {
                let y = f.sqrt_char2(st.hat_h1.eval(a))?;
                let z = f.sqrt_char2(st.hat_h2.eval(a))?;
                InterpPoint::new(f, a, y, z)
                    .map_err(|_| Error::Internal(format!("ĥ1 and ĥ2 vanish together at {a}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let params = RatParams::new(n, tau, lp.s, lp.ell, w1, w2)?;
        let q = interpolate(f, &points, &params)?;
        find_linear_factors(&q, w1, w2)
            .iter()
            .map(|(f1, f2)| &(&f1.square() * &st.hat_h1) + &(&f2.square() * &st.hat_h2))
            .collect()
    };
    let found: Vec<Candidate> = locators
        .iter()
        .filter_map(|lam| code.try_locator(r, &lam.monic(), tau))
        .collect();
    for c in &found {
        if hamming_distance(&c.codeword, r) > tau {
            return Err(Error::Internal("candidate outside the decoding radius".into()));
        }
    }
    Ok(output(found, DecodePath::List))
}
