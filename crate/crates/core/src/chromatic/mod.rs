//! Proper compositions, chromatic quasisymmetric class functions, their
//! orbital and polynomial specializations, and the brute-force oracle.

mod enumerate;
mod flawless;
mod oracle;
mod polynomial;
mod qsym;

pub use enumerate::{proper_compositions, proper_compositions_with, Options};
pub use flawless::{
    verify_flawless, verify_flawless_effective, verify_flawless_effective_with, verify_flawless_poly, FlawlessReport,
    Inequality, InequalityResult,
};
pub use oracle::{coloring_oracle, coloring_oracle_capped, ColoringOracle, OracleCap};
pub use polynomial::{binomial, binomial_monomials, ClassPolynomial, IntPolynomial};
pub use qsym::{orbital_polynomial, orbital_psi, psi, psi_polynomial, psi_with, ClassQSym, OrbitalQSym};

pub(crate) use enumerate::{check_instance, fold_proper};
pub(crate) use qsym::check_group;
