//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by norm evaluation, weight machinery and the
/// verification harness.
#[derive(Debug, Error)]
pub enum Error {
    /// A one-dimensional maximization/bracketing search ran out of room.
    #[error("bracket failure: {0}")]
    BracketFailure(String),

    /// A weight integrated to zero over some interval.
    #[error("degenerate weight: {0}")]
    DegenerateWeight(String),

    /// An operation requiring p(phi) > 1 was called with p(phi) = 1.
    #[error("indice p(phi) = 1: {0}")]
    IndiceOne(String),

    /// The quasiconvexity certificate is non-monotone in the exponent, so
    /// the indice cannot be bisected.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A modular evaluation hit the +inf sentinel of the Young function.
    #[error("modular saturated: {0}")]
    Saturated(String),

    /// A multiplier sequence violates its declared Marcinkiewicz bound.
    #[error("multiplier variation bound violated: {0}")]
    VariationBoundViolated(String),

    /// The Y[p,q] certificate required by a refined inequality fails.
    #[error("Y[p,q] certificate violated: {0}")]
    YClassViolated(String),

    /// A context does not satisfy the standing hypotheses of a check.
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    /// Marchaud-type check called with k >= l.
    #[error("bad order: {0}")]
    BadOrder(String),

    /// The best-approximation optimizer exhausted its iteration budget.
    #[error("optimizer did not converge: {0}")]
    NonConvergence(String),

    /// A suite configuration file could not be parsed or is inconsistent.
    #[error("config error: {0}")]
    ConfigError(String),

    /// Malformed input data (CSV tables, sample vectors, grid mismatch).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
