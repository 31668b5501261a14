use thiserror::Error;

pub type Result<T> = std::result::Result<T, BikeError>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BikeError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("bike length must be positive and finite, got {0}")]
    InvalidLength(f64),

    #[error("path is not horizontal: residual {residual:e} at segment {index} exceeds {tolerance:e}")]
    HorizontalityViolation {
        index: usize,
        residual: f64,
        tolerance: f64,
    },

    #[error("state is not unit speed: H = {hamiltonian}, expected 0.5")]
    NotUnitSpeed { hamiltonian: f64 },

    #[error("integration diverged at t = {t}")]
    Divergence { t: f64 },

    #[error("front track is not immersed at t = {t}")]
    Immersion { t: f64 },

    #[error("path extent {extent} is shorter than one curvature period")]
    InsufficientExtent { extent: f64 },

    #[error("front track is a straight line and has no directrix")]
    NoDirectrix,

    #[error("exceptional elastica has no curvature period")]
    NoPeriod,

    #[error("invalid period: advance {advance} must satisfy 0 < L < T = {period}")]
    InvalidPeriod { period: f64, advance: f64 },

    #[error("rank-deficient fit: {0}")]
    RankDeficient(String),

    #[error("shortcut endpoint misses the geodesic endpoint by {error:e}")]
    ConstructionMismatch { error: f64 },

    #[error("start configuration is not a canonical curvature-maximum vertex: {0}")]
    NotCanonical(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for BikeError {
    fn from(err: std::io::Error) -> Self {
        BikeError::Io(err.to_string())
    }
}
