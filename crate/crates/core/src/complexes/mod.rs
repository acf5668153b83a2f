//! Balanced relative simplicial complexes, coloring complexes, flag
//! quasisymmetric class functions and θ-map certificates.

mod complex;
mod rank;
mod theta;

pub use complex::{
    coloring_complex, coloring_complex_with, hilb, verify_psi_equals_hilb, verify_psi_equals_hilb_with,
    BalancedRelativeComplex, PsiHilbReport, CONVEXITY_SCAN_MAX,
};
pub use rank::{exact_rank, exact_rank_dense, SparseRow};
pub use theta::{
    comparable_pairs, covering_pairs, theta_certificate, verify_m_increasing, CharacterComparison, EmbeddingCertificate,
    MIncreasingReport,
};
