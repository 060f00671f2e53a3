use thiserror::Error;

use crate::fock::FockKet;
use crate::radical::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("square root of a non-positive rational: {0}")]
    NonPositiveRadicand(Rational),

    #[error("radicand {0} exceeds the supported bound of 2^63-1")]
    RadicandOverflow(String),

    #[error("exponent {exponent} exceeds the degree bound {limit}")]
    DegreeOverflow { exponent: u64, limit: u32 },

    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    #[error("invalid parameter set: {0}")]
    InvalidParameters(&'static str),

    #[error("ket {0} is not an eigenstate of the Casimir operator")]
    NotEigenstate(FockKet),

    #[error("ladder amplitude mismatch at {ket}: {detail}")]
    FormulaMismatch { ket: FockKet, detail: String },

    #[error("truncation {truncation} is smaller than the operator's creation degree {degree}")]
    TruncationTooSmall { truncation: u32, degree: u32 },

    #[error("matrix entry ({row}, {col}) is off-diagonal and nonzero")]
    NonDiagonal { row: usize, col: usize },

    #[error("Landau level {level} does not fit inside truncation {truncation}")]
    LevelOutsideTruncation { level: u32, truncation: u32 },
}
