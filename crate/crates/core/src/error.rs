//! Error types shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A point or matrix was supplied in the wrong ambient dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A scalar parameter is outside its documented domain.
    #[error("invalid parameter {name}: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// A body description violates a construction invariant.
    #[error("invalid body: {0}")]
    InvalidBody(String),

    /// The described region has zero volume and cannot serve as a body.
    #[error("empty body: {0}")]
    EmptyBody(String),

    /// A computed volume over- or underflowed the f64 range.
    #[error("volume out of range: computed {value}")]
    VolumeOutOfRange { value: f64 },

    /// An affine map is too close to singular to trust its volume factor.
    #[error("ill-conditioned transform: condition estimate {cond:.3e} exceeds {limit:.1e}")]
    IllConditioned { cond: f64, limit: f64 },

    /// The declared oracle error ratios cannot support the requested
    /// approximation ratio: eps must exceed
    /// eps_v + 2(1+eps_v)*sqrt(2(C-1)n).
    #[error(
        "infeasible error budget: requires eps > {min_eps:.6e} for n={n} \
         with the declared oracle errors, got eps = {eps}"
    )]
    InfeasibleBudget { n: usize, eps: f64, min_eps: f64 },

    /// A Hoeffding sample budget came out absurdly large (or non-finite).
    #[error("sample budget exceeded: {required:.3e} samples would be needed")]
    SampleBudgetExceeded { required: f64 },

    /// Rejection sampling gave up after the configured number of tries.
    #[error("sampling timed out after {tries} consecutive rejections")]
    SamplingTimeout { tries: u64 },

    /// Brute-force assignment enumeration refused to run.
    #[error("enumeration guard: d={d} exceeds the limit of {limit} variables")]
    EnumerationGuard { d: usize, limit: usize },

    /// The coordinate-compression grid would have too many cells.
    #[error("cell budget exceeded: grid has {cells} cells, limit {limit}; use a Monte Carlo reference instead")]
    CellBudgetExceeded { cells: u128, limit: u64 },

    /// The step budget ran out before a single trial completed.
    #[error("no trial completed within the step budget")]
    NoCompletedTrial,

    /// Too many amplification runs failed for the median to be meaningful.
    #[error("amplification failed: {failed} of {runs} runs returned no estimate")]
    AmplificationFailed { failed: u64, runs: u64 },
}
