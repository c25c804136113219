//! Exceptional Laguerre and Jacobi orthogonal polynomials: construction,
//! zeros, and checks of their zero-distribution laws.

mod classify;
mod dd;
mod family;
mod poly;
mod roots;
mod verify;
mod zeros;

pub mod asymptotics;
pub mod classical;

pub use asymptotics::{
    factorized_limit, jacobi_asymptotic, laguerre_perron, zero_set_distance, AsymptoticEstimate,
    Regime,
};
pub use classify::{
    classify_zeros, structure_signature, ClassifiedZeros, ClassifyConfig, Domain, Sides,
    StructureSignature,
};
pub use dd::{Dd, DdComplex};
pub use family::{
    deforming_poly, exceptional_poly, exceptional_value, mirror_map, Family, FamilySpec,
};
pub use poly::DensePoly;
pub use roots::{find_roots, Precision, RootConfig, RootSet};
pub use verify::{
    golden_specs, run_suite, verify_counts, verify_ell_flow, verify_extra_flow,
    verify_h_clustering, verify_interlacing, verify_large_param, verify_structure_rules,
    VerificationReport,
};
pub use zeros::{
    extra_zero_flow, extra_zeros, newton_residual, ordinary_zero_count, ordinary_zeros, ExtraFlow,
};

use thiserror::Error as ThisError;

/// Crate-wide error type.
#[derive(Debug, Clone, ThisError)]
pub enum Error {
    /// A parameter fell outside its validity region.
    #[error("parameter violation: {0}")]
    ParameterViolation(String),

    /// A leading coefficient vanished, so the result has lower degree than
    /// requested. The reduced-degree polynomial is carried along; the caller
    /// decides whether to accept it.
    #[error("degenerate degree: expected {expected}, leading coefficient vanished")]
    DegenerateDegree { expected: usize, poly: DensePoly },

    /// Root finding was asked for a polynomial with no roots.
    #[error("cannot find roots of a degree-{degree:?} polynomial")]
    DegreeZero { degree: Option<usize> },

    /// The iteration budget ran out before every root met the residual
    /// target; the best result so far is carried along.
    #[error("root finding stalled at residual {worst_residual:.3e} after {iterations} sweeps")]
    NonConvergence {
        worst_residual: f64,
        iterations: usize,
        partial: Box<RootSet>,
    },

    /// A zero set violated an expected count or fell on a domain boundary
    /// where its class is ambiguous.
    #[error("count mismatch: {0}")]
    CountMismatch(String),

    /// An asymptotic formula was evaluated on its branch cut.
    #[error("branch cut: {0}")]
    BranchCut(String),
}
