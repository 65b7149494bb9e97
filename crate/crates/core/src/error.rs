use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series must have at least one coefficient")]
    EmptySeries,
    #[error("coefficient {index} is not finite")]
    NonFiniteCoefficient { index: usize },
    #[error("order {order} exceeds the configured maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("order {order} is too low, need at least {needed}")]
    OrderTooLow { order: usize, needed: usize },
    #[error("constant term {value} is too close to zero for a reciprocal")]
    NearZeroConstantTerm { value: Complex64 },
    #[error("constant term must be 1, found {value}")]
    ConstantTermNotOne { value: Complex64 },
    #[error("constant term must be 0, found {value}")]
    ConstantTermNotZero { value: Complex64 },
    #[error("inner series of a composition must vanish at the origin, found {value}")]
    InnerConstantNonzero { value: Complex64 },
    #[error("point with modulus {modulus} is outside the open unit disc")]
    OutsideDisc { modulus: f64 },
    #[error("parameter {name} = {value} is out of range {range}")]
    ParamOutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("series at r = {r} did not converge: tail estimate {tail:e} after {terms} terms")]
    TailNotConverged { r: f64, tail: f64, terms: usize },
    #[error("argument of zero is undefined")]
    ZeroArgument,
    #[error("function is not normalized (need f(0) = 0 and f'(0) = 1)")]
    NotNormalized,
    #[error("f vanishes at sample point {z}")]
    ZeroOfF { z: Complex64 },
    #[error("f' vanishes at sample point {z}")]
    ZeroOfFPrime { z: Complex64 },
    #[error("evaluation failed: {0}")]
    EvaluationFailure(String),
    #[error("radius {r} is outside the admissible range (max {max})")]
    RadiusOutOfRange { r: f64, max: f64 },
    #[error("invalid sample grid: {0}")]
    InvalidGrid(String),
    #[error("invalid series data: {0}")]
    InvalidSeriesData(String),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}
