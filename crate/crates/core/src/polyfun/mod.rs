//! Polyfunctions over `Z_n` in one variable.
//!
//! The formula side (basis, decomposition, counting, group and ring
//! structure) lives in the topical submodules; [`oracle`] holds the
//! exhaustive enumerations the formulas are checked against.

mod canonical;
mod count;
mod group;
mod null;
pub mod oracle;
mod ring;
mod units;

pub use canonical::{canonicalize, equal_as_functions, CanonicalPolyfunction};
pub use count::{canonical_count, null_count, psi, psi_by_crt, psi_prime_power};
pub use group::{group_structure, group_structure_prime_power, invariant_factors, GroupDecomposition};
pub use null::{
    basic_null_poly, basic_null_polys, decompose_null, random_null_poly, recompose,
    NullDecomposition,
};
pub use ring::{ideal_basis_star, idempotents, in_ideal_ipm, annihilated_by_factorial};
pub use units::{is_unit, unit_count_3k};
