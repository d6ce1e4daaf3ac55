use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("not an integer: {0:?}")]
    BadToken(String),
    #[error("value {0} appears more than once")]
    DuplicateValue(usize),
    #[error("value {value} is outside 1..={n}")]
    OutOfRange { value: usize, n: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatError {
    #[error("{name} is only defined under the {required} boundary convention")]
    UndefinedUnderConvention { name: &'static str, required: &'static str },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("polynomial is not palindromic about the requested centre")]
    NotSymmetric,
    #[error("polynomial has degree {degree} in t, above the requested bound {bound}")]
    DegreeTooHigh { degree: u32, bound: u32 },
    #[error("specialising q to {0} in a Laurent polynomial does not give an integer polynomial")]
    NonIntegralSpecialization(String),
    #[error("series constant term must be a unit (+1 or -1)")]
    NonUnitConstant,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("weight scheme {scheme} does not apply to a {flavor} history")]
    FlavorMismatch { scheme: &'static str, flavor: &'static str },
    #[error("not a Motzkin path: {0}")]
    InvalidPath(String),
    #[error("choice p_{step} = {choice} exceeds the bound {bound} at that step")]
    ChoiceOutOfRange { step: usize, choice: u32, bound: i64 },
    #[error("history lookup is tabulated only for n <= {bound}, got n = {n}")]
    CacheBoundExceeded { n: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    #[error("letter {letter} asks for {embracing} neighbours but only {available} are placed")]
    EmbracingOutOfRange { letter: usize, embracing: usize, available: usize },
    #[error("inverse lookup is cached only for n <= {bound}, got n = {n}")]
    CacheBoundExceeded { n: usize, bound: usize },
    #[error("internal assertion failed: {0}")]
    InternalAssertion(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown check id {0:?}")]
    UnknownCheckId(String),
    #[error("{check} is bounded to n <= {bound}, got n = {n}")]
    BoundExceeded { check: &'static str, n: usize, bound: usize },
    #[error("{check} is stated for n >= {min}, got n = {n}")]
    BelowMinimum { check: &'static str, n: usize, min: usize },
}
