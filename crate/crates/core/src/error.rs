use num_rational::BigRational;
use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain spec has no factors")]
    EmptySpec,

    #[error("linear form has both coefficients zero")]
    ZeroForm,

    #[error("factor weight must be positive, got {0}")]
    NonPositiveWeight(BigRational),

    #[error("factor weights sum to {0}, expected 1")]
    WeightSum(BigRational),

    #[error("blend parameter must lie in [0, 1], got {0}")]
    BlendOutOfRange(BigRational),

    #[error("polynomial is identically zero")]
    ZeroPolynomial,

    #[error("polynomial of degree {degree} needs {expected} coefficients, got {actual}")]
    CoefficientCount {
        degree: usize,
        expected: usize,
        actual: usize,
    },

    #[error("projective point has both coordinates zero")]
    ZeroPoint,

    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },

    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("no square-integrable polynomial of degree <= {bound} despite {support} support points")]
    WitnessSearchExhausted { bound: u32, support: usize },

    #[error("approximant needs at least one point")]
    EmptyApproximant,

    #[error("weight schedule produced a non-positive weight at index {0}")]
    BadSchedule(usize),

    #[error("target regime {target} unreachable: achieved max Lelong number {achieved}")]
    UnreachableTarget { target: String, achieved: BigRational },

    #[error("annulus ladder around {center} is degenerate (all masses zero or infinite)")]
    DegenerateLadder { center: String },

    #[error("oracle rejected basis polynomial of degree {degree}: {verdict}")]
    BasisVerdict { degree: u32, verdict: String },

    #[error("direction lies in the zero set of h; it cannot be normalized")]
    DirectionInZeroSet,

    #[error("point is outside the domain (h = {0} >= 1)")]
    OutsideDomain(f64),

    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
