use thiserror::Error;

/// Errors raised by constructions, correlation routines and checkers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus q = {0} must be even and at least 2")]
    InvalidModulus(u32),

    #[error("number of variables {0} is outside 1..={max}", max = crate::gbf::MAX_VARS)]
    InvalidVarCount(usize),

    #[error("variable x{index} is out of range for a function in {num_vars} variables")]
    VariableOutOfRange { index: usize, num_vars: usize },

    #[error("index {index} is out of range for {width}-bit vectors")]
    IndexOutOfRange { index: u64, width: usize },

    #[error("truncation length {trim} leaves nothing of a length-{len} sequence")]
    TruncationTooLarge { trim: usize, len: usize },

    #[error("phase {phase} is not a residue modulo {q}")]
    PhaseOutOfRange { phase: u32, q: u32 },

    #[error("sequence must contain at least one phase")]
    EmptySequence,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("ZCZ width {z} is outside the allowed range 1..={max}")]
    ZoneOutOfRange { z: usize, max: usize },

    #[error("cannot parse Boolean function at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
