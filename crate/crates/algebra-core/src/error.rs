use std::fmt;

use thiserror::Error;

use crate::{Symbol, MAX_ARITY, MAX_CELLS};

/// A collision certifying that a table is *not* invertible at a place: with
/// the other arguments pinned to `fixed`, both `first` and `second` map to
/// `value`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonInvertibleWitness {
    /// The tested place, 1-based.
    pub place: usize,
    /// The n−1 fixed arguments, in argument order.
    pub fixed: Vec<Symbol>,
    /// First colliding symbol at the tested place.
    pub first: Symbol,
    /// Second colliding symbol, distinct from `first`.
    pub second: Symbol,
    /// The shared image of `first` and `second`.
    pub value: Symbol,
}

impl fmt::Display for NonInvertibleWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fixed: Vec<String> = self.fixed.iter().map(|s| s.to_string()).collect();
        write!(
            f,
            "place {} with fixed arguments ({}): symbols {} and {} both map to {}",
            self.place,
            fixed.join(", "),
            self.first,
            self.second,
            self.value
        )
    }
}

/// Errors raised by table construction and the algebraic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("arity must be in 2..={MAX_ARITY}, got {0}")]
    BadArity(usize),
    #[error("alphabet order must be at least 1")]
    ZeroOrder,
    #[error("table with q = {order} and n = {arity} exceeds the {MAX_CELLS}-cell cap")]
    TableTooLarge { order: usize, arity: usize },
    #[error("table has {actual} entries, expected q^n = {expected}")]
    WrongEntryCount { expected: usize, actual: usize },
    #[error("unary map {index} has {actual} values, expected {expected}")]
    BadMapLength {
        index: usize,
        expected: usize,
        actual: usize,
    },
    #[error("symbol {symbol} out of range for alphabet of order {order}")]
    SymbolOutOfRange { symbol: Symbol, order: usize },
    #[error("expected {expected} arguments, got {actual}")]
    ArityMismatch { expected: usize, actual: usize },
    #[error("place index must be at least 1")]
    ZeroPlace,
    #[error("place {place} out of range for arity {arity}")]
    PlaceOutOfRange { place: usize, arity: usize },
    #[error("not invertible at {0}")]
    NotInvertible(NonInvertibleWitness),
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error(
        "tables differ in shape: n = {arity_a}, q = {order_a} vs n = {arity_b}, q = {order_b}"
    )]
    TableMismatch {
        arity_a: usize,
        order_a: usize,
        arity_b: usize,
        order_b: usize,
    },
}
