use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed pattern text (ragged rows, illegal characters, empty input).
    #[error("invalid pattern text: {0}")]
    PatternFormat(String),

    /// Matrix dimensions outside the range a routine supports.
    #[error("parameters out of range: {0}")]
    OutOfRange(String),

    /// Graph too large for canonical forms or enumeration.
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// A numeric rank decision could not be certified (small singular value
    /// gap, or independently sampled points disagree).
    #[error("rank decision uncertain: {0}")]
    RankUncertain(String),

    /// Newton retraction onto the variety did not converge.
    #[error("retraction failed to converge after {retries} seeds")]
    RetractionFailed { retries: usize },

    /// The system handed to the path tracker is not square.
    #[error("system is not square: {equations} equations, {variables} variables")]
    NonSquareSystem { equations: usize, variables: usize },

    /// No non-constant column equation left to drop.
    #[error("no non-constant column-norm equation to drop")]
    NoRedundantEquation,

    /// Substituted data is incompatible with a constant equation.
    #[error("substitution leaves an unsatisfiable constant equation ({0})")]
    InfeasibleSubstitution(String),

    /// Started paths were lost or mis-accounted during tracking.
    #[error("path accounting failure: {0}")]
    PathAccounting(String),

    /// Independent solver runs produced different solution counts.
    #[error("solution counts disagree across runs: {0:?}")]
    CountDisagreement(Vec<usize>),

    /// A counted solution fails the residual check on the full system.
    #[error("solution residual {residual:.3e} exceeds {limit:.3e}")]
    ResidualCheck { residual: f64, limit: f64 },

    /// 2-core absent from the classification table.
    #[error("core not found in table: {0}")]
    CoreNotFound(String),

    /// Table file malformed or written by an incompatible version.
    #[error("bad table file: {0}")]
    TableFormat(String),

    /// Wrong graph shape for the rank-3 certificate.
    #[error("certificate precondition violated: {0}")]
    ShapePrecondition(String),

    /// A certain combinatorial verdict conflicts with a numeric one; this can
    /// only mean a numerical rank error.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
