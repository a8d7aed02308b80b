//! τ-tilting theory on top of the module and homological layers.

pub mod approx;
pub mod enumerate;
pub mod predicates;
pub mod suite;

pub use approx::{
    add_t_resolution, approximation_kernel_check, minimal_right_add_approximation, summand_types, AddApproximation,
    AddResolution,
};
pub use enumerate::{enumerate_indecomposables, enumerate_support_tau_tilting, SupportTauTiltingModule};
pub use predicates::{
    is_partial_tilting, is_support_tau_tilting, is_tau_rigid, is_tau_tilting, is_tilting, is_tilting_via_fac_criterion,
    self_orthogonal, support_tau_tilting_witness, torsion_decomposition, Bounds, FacCriterion, FacVerdict, FacWitness,
    TorsionDecomposition, Tri,
};
pub use suite::{verify_theorem_suite, CheckResult, CheckStatus, VerificationReport};
