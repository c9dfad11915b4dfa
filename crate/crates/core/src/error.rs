use thiserror::Error;

/// Everything that can go wrong inside the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty point set")]
    EmptyPointSet,
    #[error("non-finite coordinate at index {0}")]
    NonFinite(usize),
    #[error("need at least {need} points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("hulls intersect")]
    HullsIntersect,
    #[error("width must be non-negative, got {0}")]
    NegativeWidth(f64),
    #[error("interval endpoints out of order: [{0}, {1}]")]
    InvalidInterval(f64, f64),
    #[error("the two anchor points coincide")]
    IdenticalPoints,
    #[error("optimal width is zero; run degeneracy check first")]
    Degenerate,
    #[error("orientations coincide; use parallel solver")]
    UseParallelSolver,
    #[error("window discipline violated: {0}")]
    WindowDiscipline(&'static str),
    #[error("instance of size {n} exceeds oracle cap {cap}")]
    OracleCap { n: usize, cap: usize },
    #[error("slabs are not parallel")]
    NotParallel,
    #[error("sketch is empty")]
    EmptySketch,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
