use thiserror::Error;

use crate::array::Cell;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeffterError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("array is {got_m}x{got_n} but parameters describe {want_m}x{want_n}")]
    DimensionMismatch {
        got_m: usize,
        got_n: usize,
        want_m: usize,
        want_n: usize,
    },

    #[error("cell ({}, {}) lies outside a {m}x{n} array", .cell.0, .cell.1)]
    OutOfRange { cell: Cell, m: usize, n: usize },

    #[error("cell ({}, {}) is already filled", .cell.0, .cell.1)]
    Collision { cell: Cell },

    #[error("operation requires a square array, got {m}x{n}")]
    NotSquare { m: usize, n: usize },

    #[error("diagonal index {index} out of range 1..={n}")]
    DiagonalIndex { index: usize, n: usize },

    #[error("{what}: n = {n} is not in the supported congruence class")]
    BadCongruence { what: &'static str, n: usize },

    #[error("target {target} outside [1, {max}]")]
    TargetOutOfRange { target: u64, max: u64 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("ordering of {line} is not simple")]
    NotSimple { line: String },

    #[error("orderings are not compatible")]
    Incompatible,

    #[error("inconsistent face structure: {0}")]
    Topology(String),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, HeffterError>;
