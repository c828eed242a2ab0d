use thiserror::Error;

/// Errors raised by the numerical routines and the file readers.
#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite value {0} rejected")]
    NonFinite(String),

    #[error("binomial coefficient C({k}, {m}) exceeds 1e300")]
    BinomialOverflow { k: usize, m: usize },

    #[error("order m must be at least 1 (got {0})")]
    InvalidOrder(usize),

    #[error("point mass must be strictly positive and finite (got {0})")]
    NonPositiveMass(f64),

    #[error("points {0} and {1} coincide within {tol:e} rad", tol = crate::coefficients::POINT_TOLERANCE)]
    DuplicatePoints(usize, usize),

    #[error("measure must be a finite combination of point masses")]
    NotPointMasses,

    #[error("weight array variant mismatch: expected {expected}, got {got}")]
    VariantMismatch {
        expected: &'static str,
        got: &'static str,
    },

    #[error("weight array was built for order {array}, called with order {requested}")]
    OrderMismatch { array: usize, requested: usize },

    #[error("invalid support: {0}")]
    InvalidSupport(String),

    #[error("validation scan needs n_max >= 4 (got {0})")]
    ScanTooSmall(usize),

    #[error("singular system: pivot magnitude {0:e} below 1e-13")]
    SingularSystem(f64),

    #[error("at most {max} points supported (got {got})")]
    TooManyPoints { got: usize, max: usize },

    #[error("index n = {n} must be at least the number of points s = {s}")]
    IndexTooSmall { n: usize, s: usize },

    #[error("point {0} lies outside the open unit disk")]
    OutsideDisk(String),

    #[error("quadrature grid too coarse: {0}")]
    GridTooCoarse(String),

    #[error("quadrature did not converge: coarse {coarse}, fine {fine}")]
    NonConvergent { coarse: f64, fine: f64 },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
