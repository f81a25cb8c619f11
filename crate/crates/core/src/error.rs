use thiserror::Error;

use crate::superalg::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("p must be an odd prime (got {0})")]
    InvalidModulus(u32),

    #[error("objects over different fields: GF({0}) vs GF({1})")]
    ModulusMismatch(u32, u32),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("linear system has no solution")]
    NoSolution,

    #[error("cochain is not a cocycle: {0}")]
    NotACocycle(String),

    #[error("product exceeds the truncation degree {0}")]
    DegreeOverflow(usize),

    #[error("element is not in the ideal generated by the module: {0}")]
    NotInIdeal(String),

    #[error("semilinear map value leaves the invariant subspace M_0^g (basis index {0})")]
    ValueNotInvariant(usize),

    #[error("extensions have different underlying brackets")]
    DifferentUnderlying,

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("validation failed:\n{0}")]
    Validation(ValidationReport),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
