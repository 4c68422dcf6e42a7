use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("denominator is not palindromic")]
    NotSymmetric,

    #[error("denominator has odd half-degree {0}; the reduction needs an even one")]
    OddHalfDegree(usize),

    #[error("exponent {n} lies outside the convergence range 0..={max}")]
    OutOfConvergenceRange { n: usize, max: usize },

    #[error("fractional power of a negative base: {subtree}")]
    NegativeBaseFractionalPower { subtree: String },

    #[error("integrand is not normalized (a0 = ap = 1 required)")]
    NotNormalized,

    #[error("denominator power {0} is not supported here (only power 1)")]
    UnsupportedPower(u32),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("scale parameters must be positive")]
    NonPositiveScale,

    #[error("integrand does not converge on [0, inf): {0}")]
    NonConvergentIntegrand(String),

    #[error("requested precision not reached (best estimate {best}, bound {bound})")]
    PrecisionNotReached { best: String, bound: String },

    #[error("argument out of range: {0}")]
    RangeViolation(String),

    #[error("iteration left the positive orthant at step {0}")]
    DomainExit(usize),

    #[error("invalid integrand: {0}")]
    InvalidIntegrand(String),

    #[error("parameter must be positive: {0}")]
    NonPositiveParameter(String),

    #[error("linear system is singular")]
    Singular,

    #[error("unsupported degree: {0}")]
    UnsupportedDegree(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
