use thiserror::Error;

/// Errors surfaced by the library.
///
/// `Input` covers malformed data (bad dimensions, unparsable rationals,
/// invalid gauges); `Precondition` covers calls whose mathematical
/// hypotheses do not hold for the given space(s). The CLI maps these to
/// exit codes 1 and 2 respectively.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("input error: {0}")]
    Input(String),

    #[error("invalid gauge: {0}")]
    InvalidGauge(#[from] GaugeDefect),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

/// Which gauge axiom failed at construction, with a witness point.
#[derive(Debug, Error)]
pub enum GaugeDefect {
    /// The max of the generators is negative somewhere: 0 is not in their
    /// convex hull.
    #[error("not nonnegative: max_i <a_i, x> < 0 at x = {witness}")]
    NotNonnegative { witness: String },

    /// The generators do not span the space, so some nonzero x has
    /// ‖x| = ‖-x| = 0.
    #[error("degenerate: nonzero x with ‖x| = ‖-x| = 0, e.g. x = {witness}")]
    Degenerate { witness: String },

    #[error("a gauge needs at least one generator")]
    NoGenerators,

    #[error("gauge dimension must be at least 1")]
    ZeroDimension,
}

pub type Result<T> = std::result::Result<T, Error>;
