use algebra_core::AlgebraError;
use markovski_cipher::CipherError;
use thiserror::Error;

/// Errors from key parsing, generation, and the census.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KeyError {
    #[error("not a key file: expected magic 'GCK1', found {found:?}")]
    BadMagic { found: String },
    #[error("key file must be ASCII text with '\\n' line terminators")]
    NotAscii,
    #[error("line {line}: missing, expected {expected}")]
    MissingLine { line: usize, expected: &'static str },
    #[error("line {line}: {detail}")]
    Malformed { line: usize, detail: String },
    #[error("line {line}: expected {expected} {what}, found {actual}")]
    WrongCount {
        line: usize,
        what: &'static str,
        expected: usize,
        actual: usize,
    },
    #[error("line {line}: unexpected trailing content")]
    TrailingGarbage { line: usize },
    #[error("cipher keys must be invertible at the last place: i = {place} but n = {arity}")]
    PlaceNotLast { place: usize, arity: usize },
    #[error("key generation requires an alphabet of order at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("schedule length must be at least 1")]
    EmptyScheduleRequest,
    #[error("census infeasible: {0}")]
    CensusInfeasible(String),
    #[error(transparent)]
    Cipher(#[from] CipherError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
