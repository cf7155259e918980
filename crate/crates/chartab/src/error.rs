//! Error types shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CycError {
    #[error("conductor must be positive, got {0}")]
    BadConductor(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("galois exponent {k} is not coprime to conductor {conductor}")]
    GaloisNotCoprime { k: u64, conductor: u64 },
    #[error("gauss sum needs a prime p = 3 mod 4, got {0}")]
    BadGaussPrime(u64),
    #[error("cannot parse cyclotomic literal: {0}")]
    Parse(String),
}

#[derive(Debug, Error)]
pub enum PermError {
    #[error("malformed cycle notation: {0}")]
    Parse(String),
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("point {0} repeated in cycle notation")]
    RepeatedPoint(usize),
    #[error("generators act on different degrees")]
    MixedDegrees,
    #[error("group closure exceeded cap of {0} elements")]
    CapExceeded(usize),
    #[error("element does not belong to the group")]
    NotInGroup,
    #[error("{0} does not divide the group order")]
    PrimeDoesNotDivide(u64),
    #[error("malformed fixture file: {0}")]
    Fixture(String),
}

#[derive(Debug, Error)]
pub enum ClassFunError {
    #[error("class functions live on different groups")]
    FrameMismatch,
    #[error("permutation character has norm {0}, action is not 2-transitive")]
    NotTwoTransitive(String),
    #[error("multiplicity of {name} is {value}, not a nonnegative integer")]
    BadMultiplicity { name: String, value: String },
    #[error("power map for k={0} unavailable")]
    MissingPowerMap(u64),
    #[error(transparent)]
    Cyc(#[from] CycError),
}

#[derive(Debug, Error)]
pub enum IndResError {
    #[error("partition weights differ: {0} vs {1}")]
    WeightMismatch(u32, u32),
    #[error("inconsistent fusion data: {0}")]
    BadFusion(String),
    #[error(transparent)]
    ClassFun(#[from] ClassFunError),
}

#[derive(Debug, Error)]
pub enum DerivationError {
    #[error("step {step}: {message}")]
    Check { step: String, message: String },
    #[error("degree equation has {found} representations, expected exactly one")]
    DegreeEquation { found: usize },
    #[error("column {column}: {message}")]
    ColumnSolve { column: String, message: String },
    #[error("overlap system: {0}")]
    Overlap(String),
    #[error("fixture invalid: {0}")]
    Fixture(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    ClassFun(#[from] ClassFunError),
    #[error(transparent)]
    IndRes(#[from] IndResError),
    #[error(transparent)]
    Cyc(#[from] CycError),
}
