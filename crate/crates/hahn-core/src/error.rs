use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0}")]
    Parse(String),
    #[error("hypergeometric series does not terminate: no numerator is a nonpositive integer")]
    NonTerminating,
    #[error("denominator parameter {0} vanishes inside the summation range")]
    VanishingDenominator(String),
    #[error("parameter {name} = {value} must exceed -1")]
    Parameter { name: String, value: String },
    #[error("{0} is outside the simplex")]
    OffSimplex(String),
    #[error("degree {n} exceeds level {level}")]
    DegreeOutOfRange { n: usize, level: usize },
    #[error("unknown identifier '{0}'")]
    UnknownCheck(String),
    #[error("radicand {0} is negative")]
    NegativeRadicand(String),
    #[error("{0}")]
    Degenerate(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
