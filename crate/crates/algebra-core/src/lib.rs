//! Finite n-ary groupoids presented as flat operation tables.
//!
//! An n-ary groupoid is a set `Q = {0, …, q−1}` together with one total
//! operation `f: Qⁿ → Q`, with no further axioms. This crate stores `f` as a
//! flat table ([`GroupoidTable`]) and provides:
//!
//! * invertibility testing at a chosen argument place (fixing the other
//!   arguments must induce a bijection of `Q`),
//! * derivation of the inverse operation at an invertible place,
//! * translations ([`Translation`]): the unary maps obtained by fixing all
//!   but one argument, which are permutations of `Q` exactly when the table
//!   is invertible at that place,
//! * the affine constructor `f(x₁, …, xₙ) = g₁(x₁) + ⋯ + g_{n−1}(x_{n−1}) + xₙ
//!   (mod q)`, which is invertible at the last place for arbitrary pointwise
//!   unary maps `gⱼ`.
//!
//! The alphabet is always canonicalized to `0..q−1`; callers that work with
//! other alphabets are expected to translate at the edges.

mod affine;
mod error;
pub mod perm;
mod table;
mod translation;

pub use affine::affine_groupoid;
pub use error::{AlgebraError, NonInvertibleWitness};
pub use table::{GroupoidTable, Place};
pub use translation::Translation;

/// A symbol of the alphabet `{0, …, q−1}`.
///
/// With the [`MAX_CELLS`] cap and arity ≥ 2, orders never exceed 2¹², so
/// `u16` always suffices.
pub type Symbol = u16;

/// Hard cap on table size: `qⁿ` cells. Inverse tables are materialized
/// eagerly, so this bounds the memory a single key may claim.
pub const MAX_CELLS: usize = 1 << 24;

/// Hard cap on arity. For `q ≥ 2` this already follows from [`MAX_CELLS`];
/// it is enforced uniformly so that `q = 1` cannot smuggle in huge arities.
pub const MAX_ARITY: usize = 24;
