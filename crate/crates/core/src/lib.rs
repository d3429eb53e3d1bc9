//! List decoding of Reed–Solomon (GRS) and binary Goppa codes by rational
//! interpolation.
//!
//! The decoders run the classical key-equation step first (Sugiyama for GRS,
//! Patterson for Goppa) and only fall back to interpolation when the error
//! count exceeds what that step can correct. The building blocks are public:
//!
//! - [`galois`]: prime-power fields with table arithmetic,
//! - [`poly`]: univariate polynomials and the extended Euclidean algorithm,
//! - [`keyeq`]: Gröbner bases of the key-equation module,
//! - [`ratinterp`]: rational interpolation,
//! - [`grs`] and [`goppa`]: the codes and their decoders,
//! - [`oracles`]: brute-force references for testing.

pub mod decode;
pub mod error;
pub mod galois;
pub mod goppa;
pub mod grs;
pub mod keyeq;
pub mod linalg;
pub mod oracles;
pub mod poly;
pub mod radius;
pub mod ratinterp;

pub use error::{Error, Result};
pub use galois::{Elem, Field, FieldSpec};
pub use poly::{Degree, Poly};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/fields.md")]
    mod fields {}
    #[doc = include_str!("../../../book/src/key-equation.md")]
    mod key_equation {}
    #[doc = include_str!("../../../book/src/interpolation.md")]
    mod interpolation {}
    #[doc = include_str!("../../../book/src/grs.md")]
    mod grs {}
    #[doc = include_str!("../../../book/src/goppa.md")]
    mod goppa {}
    #[doc = include_str!("../../../book/src/radius.md")]
    mod radius {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}
