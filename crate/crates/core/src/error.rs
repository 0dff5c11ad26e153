use thiserror::Error;

use crate::classify::Verdict;

#[derive(Debug, Error)]
pub enum Error {
    #[error("extension degree {0} is outside 1..=8")]
    DegreeOutOfRange(u32),
    #[error("modulus {modulus:#b} does not have degree {degree}")]
    ModulusDegree { modulus: u16, degree: u32 },
    #[error("modulus {0:#b} is reducible over GF(2)")]
    ReducibleModulus(u16),
    #[error("element value {value} does not fit in GF(2^{degree})")]
    ElementOutOfRange { value: u32, degree: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("unknown element symbol {0:?}")]
    UnknownSymbol(String),

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("matrix is not symmetric at ({row}, {col})")]
    Asymmetric { row: usize, col: usize },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("index {index} is out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("index set must be strictly increasing")]
    UnsortedIndexSet,
    #[error("row set has {rows} indices but column set has {cols}")]
    SizeMismatch { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("principal submatrix on {0} is singular")]
    SingularPivot(String),
    #[error("bad parameters for {kind}: {reason}")]
    BadParameters { kind: String, reason: String },
    #[error("matrix order {order} exceeds the limit {limit}")]
    OrderTooLarge { order: usize, limit: usize },
    #[error("empty matrix has no sequence")]
    EmptyMatrix,

    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("bad sequence {text:?}: {msg}")]
    BadSequence { text: String, msg: String },

    #[error("{}", .0.render())]
    NotAttainable(Box<Verdict>),
    #[error("recipe for {form} produced {got}, expected {expected}")]
    InternalMismatch {
        form: String,
        expected: String,
        got: String,
    },
    #[error("{what} is limited to {limit} without an explicit override (asked for {asked})")]
    BoundExceeded {
        what: &'static str,
        limit: usize,
        asked: usize,
    },
    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
