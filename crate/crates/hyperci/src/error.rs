use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("hyperedge at line {line} is empty")]
    EmptyHyperedge { line: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown node id {0}")]
    UnknownNode(usize),

    #[error("operation requires a non-empty hypergraph")]
    EmptyHypergraph,

    #[error("radius L must be >= 1, got {0}")]
    InvalidRadius(usize),

    #[error("original node count must be positive")]
    InvalidOriginalCount,

    #[error("batch fraction must be in (0, 1], got {0}")]
    InvalidBatchFraction(f64),

    #[error("stop threshold must be in [0, 1], got {0}")]
    InvalidStopThreshold(f64),

    #[error("initial connectivity is zero")]
    ZeroInitialConnectivity,

    #[error("trajectory has no batches")]
    EmptyTrajectory,

    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),

    #[error("curve {label:?} has fewer than 2 points")]
    ShortCurve { label: String },

    #[error("no curves to render")]
    NoCurves,

    #[error("trajectory schema error: {0}")]
    Schema(String),

    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}
