//! Polynomial functions over `Z/nZ`.
//!
//! * [`arith`]: factorizations, factorial valuations and exact counts.
//! * [`smarandache`]: the Smarandache function and the basis degree data.
//! * [`polynomial`]: dense univariate polynomials over `Z_n`.
//! * [`polyfun`]: null-polynomial decomposition, canonical forms, counting,
//!   group, unit and ring structure, plus brute-force oracles.
//! * [`multivar`]: the same questions in several variables.

pub mod arith;
pub mod error;
pub mod multivar;
pub mod polyfun;
pub mod polynomial;
pub mod smarandache;

pub use arith::{FactoredCount, Factorization};
pub use error::{Error, Result};
pub use multivar::MultiPoly;
pub use polynomial::Poly;
pub use smarandache::{BasisSpec, MultiIndex};
