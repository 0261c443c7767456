use algebra_core::{AlgebraError, Symbol};
use thiserror::Error;

use crate::key::MAX_EXPONENT;

/// Errors raised by key validation and the encryption/decryption streams.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CipherError {
    #[error("symbol {symbol} at position {position} out of range for alphabet of order {order}")]
    SymbolOutOfRange {
        position: u64,
        symbol: Symbol,
        order: usize,
    },
    #[error("leader {index} is {symbol}, out of range for alphabet of order {order}")]
    LeaderOutOfRange {
        index: usize,
        symbol: Symbol,
        order: usize,
    },
    #[error("arity {arity} requires {expected} leaders, got {actual}")]
    BadLeaderCount {
        arity: usize,
        expected: usize,
        actual: usize,
    },
    #[error("exponent schedule is empty")]
    EmptySchedule,
    #[error("exponent at index {index} is zero")]
    ZeroExponent { index: usize },
    #[error("exponent {value} at index {index} exceeds the cap of {MAX_EXPONENT}")]
    ExponentTooLarge { index: usize, value: u32 },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
