//! Types shared by the GRS and Goppa decoders.

use crate::galois::Elem;
use crate::ratinterp::HalfInt;

/// One decoded word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub codeword: Vec<Elem>,
    /// Sorted positions where the received word was changed.
    pub error_positions: Vec<usize>,
    /// `received - codeword` at each error position.
    pub error_values: Vec<Elem>,
}

/// Which part of the decoder produced the result.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DecodePath {
    /// The key-equation step alone (Sugiyama or Patterson).
    Unique,
    /// Rational interpolation.
    List,
}

impl DecodePath {
    pub fn as_str(self) -> &'static str {
        match self {
            DecodePath::Unique => "unique",
            DecodePath::List => "list",
        }
    }
}

/// Result of a list decoder call; an empty candidate list means failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutput {
    /// Sorted by codeword.
    pub candidates: Vec<Candidate>,
    pub tau: usize,
    /// List size and multiplicity, when the radius calls for interpolation.
    pub ell: Option<usize>,
    pub s: Option<usize>,
    pub path: DecodePath,
}

impl DecodeOutput {
    pub fn codewords(&self) -> Vec<Vec<Elem>> {
        self.candidates.iter().map(|c| c.codeword.clone()).collect()
    }

    pub fn is_failure(&self) -> bool {
        self.candidates.is_empty()
    }
}

/// Interpolation parameters for a given radius.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ListParams {
    pub tau: usize,
    pub s: usize,
    pub ell: usize,
    /// `w1 + w2`; the split depends on the received word.
    pub w_total: HalfInt,
}

/// Knobs for the list decoders.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct DecodeOptions {
    /// Largest list size tried by the parameter search.
    pub ell_max: usize,
    /// Use this `(ℓ, s)` instead of searching.
    pub forced: Option<(usize, usize)>,
}

impl Default for DecodeOptions {
    fn default() -> Self {
        DecodeOptions {
            ell_max: 64,
            forced: None,
        }
    }
}

/// Number of positions where `a` and `b` differ.
pub fn hamming_distance(a: &[Elem], b: &[Elem]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Sorts and dedups candidates by codeword.
pub(crate) fn normalize(mut c: Vec<Candidate>) -> Vec<Candidate> {
    c.sort_by(|a, b| a.codeword.cmp(&b.codeword));
    c.dedup_by(|a, b| a.codeword == b.codeword);
    c
}
