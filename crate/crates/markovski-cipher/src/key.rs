use algebra_core::{GroupoidTable, Place, Symbol};

use crate::error::CipherError;
use crate::stream::{Decryptor, Encryptor};

/// Per-step exponent cap. Exponents beyond a translation's permutation
/// order are redundant, so the cap bounds per-symbol cost without
/// restricting what keys can express.
pub const MAX_EXPONENT: u32 = 1 << 16;

/// A complete cipher key: a groupoid invertible at its last place, the
/// eagerly derived inverse table, `(n²−n)/2` leader symbols, and a nonempty
/// schedule of positive exponents that is cycled per step.
///
/// Keys are immutable and freely shareable; every stream owns its own state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherKey {
    forward: GroupoidTable,
    inverse: GroupoidTable,
    leaders: Vec<Symbol>,
    exponents: Vec<u32>,
}

impl CipherKey {
    /// Number of leaders a key of this arity carries: `(n²−n)/2`.
    pub fn leader_count(arity: usize) -> usize {
        arity * (arity - 1) / 2
    }

    /// Validates the parts and derives the inverse table at the last place.
    ///
    /// Fails with a collision witness when `forward` is not invertible at
    /// place `n`.
    pub fn new(
        forward: GroupoidTable,
        leaders: Vec<Symbol>,
        exponents: Vec<u32>,
    ) -> Result<Self, CipherError> {
        let arity = forward.arity();
        let order = forward.order();
        let expected = Self::leader_count(arity);
        if leaders.len() != expected {
            return Err(CipherError::BadLeaderCount {
                arity,
                expected,
                actual: leaders.len(),
            });
        }
        for (index, &symbol) in leaders.iter().enumerate() {
            if (symbol as usize) >= order {
                return Err(CipherError::LeaderOutOfRange {
                    index,
                    symbol,
                    order,
                });
            }
        }
        if exponents.is_empty() {
            return Err(CipherError::EmptySchedule);
        }
        for (index, &value) in exponents.iter().enumerate() {
            if value == 0 {
                return Err(CipherError::ZeroExponent { index });
            }
            if value > MAX_EXPONENT {
                return Err(CipherError::ExponentTooLarge { index, value });
            }
        }
        let inverse = forward.derive_inverse(Place::last(arity))?;
        Ok(CipherKey {
            forward,
            inverse,
            leaders,
            exponents,
        })
    }

    pub fn forward(&self) -> &GroupoidTable {
        &self.forward
    }

    pub fn inverse(&self) -> &GroupoidTable {
        &self.inverse
    }

    pub fn leaders(&self) -> &[Symbol] {
        &self.leaders
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.forward.arity()
    }

    pub fn order(&self) -> usize {
        self.forward.order()
    }

    /// The exponent used at 1-based step `j`: the schedule cycles with
    /// period `exponents.len()`.
    pub fn exponent_at(&self, step: u64) -> u32 {
        assert!(step >= 1, "steps are 1-based");
        self.exponents[((step - 1) % self.exponents.len() as u64) as usize]
    }

    /// Encrypts a full message. Output length equals input length.
    pub fn encrypt(&self, plaintext: &[Symbol]) -> Result<Vec<Symbol>, CipherError> {
        let mut stream = Encryptor::new(self);
        plaintext.iter().map(|&u| stream.push(u)).collect()
    }

    /// Decrypts a full message; inverse of [`CipherKey::encrypt`].
    pub fn decrypt(&self, ciphertext: &[Symbol]) -> Result<Vec<Symbol>, CipherError> {
        let mut stream = Decryptor::new(self);
        ciphertext.iter().map(|&v| stream.push(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::AlgebraError;

    fn small_forward() -> GroupoidTable {
        // binary quasigroup: x₁ + x₂ mod 2
        GroupoidTable::new(2, 2, vec![0, 1, 1, 0]).unwrap()
    }

    #[test]
    fn exponent_schedule_cycles() {
        let key = CipherKey::new(small_forward(), vec![0], vec![1, 2]).unwrap();
        assert_eq!(key.exponent_at(1), 1);
        assert_eq!(key.exponent_at(2), 2);
        assert_eq!(key.exponent_at(3), 1);
        assert_eq!(key.exponent_at(4), 2);

        let constant = CipherKey::new(small_forward(), vec![0], vec![5]).unwrap();
        for j in 1..20 {
            assert_eq!(constant.exponent_at(j), 5);
        }

        let three = CipherKey::new(small_forward(), vec![0], vec![1, 2, 3]).unwrap();
        assert_eq!(three.exponent_at(7), 1);
    }

    #[test]
    fn rejects_bad_leader_vectors() {
        assert_eq!(
            CipherKey::new(small_forward(), vec![0, 1], vec![1]).unwrap_err(),
            CipherError::BadLeaderCount {
                arity: 2,
                expected: 1,
                actual: 2
            }
        );
        assert_eq!(
            CipherKey::new(small_forward(), vec![2], vec![1]).unwrap_err(),
            CipherError::LeaderOutOfRange {
                index: 0,
                symbol: 2,
                order: 2
            }
        );
    }

    #[test]
    fn rejects_bad_schedules() {
        assert_eq!(
            CipherKey::new(small_forward(), vec![0], vec![]).unwrap_err(),
            CipherError::EmptySchedule
        );
        assert_eq!(
            CipherKey::new(small_forward(), vec![0], vec![1, 0]).unwrap_err(),
            CipherError::ZeroExponent { index: 1 }
        );
        assert_eq!(
            CipherKey::new(small_forward(), vec![0], vec![MAX_EXPONENT + 1]).unwrap_err(),
            CipherError::ExponentTooLarge {
                index: 0,
                value: MAX_EXPONENT + 1
            }
        );
        assert!(CipherKey::new(small_forward(), vec![0], vec![MAX_EXPONENT]).is_ok());
    }

    #[test]
    fn rejects_non_invertible_forward() {
        // f = x₁ is constant in x₂, hence not invertible at the last place
        let projection_first = GroupoidTable::new(2, 2, vec![0, 0, 1, 1]).unwrap();
        match CipherKey::new(projection_first, vec![0], vec![1]) {
            Err(CipherError::Algebra(AlgebraError::NotInvertible(w))) => {
                assert_eq!(w.place, 2);
            }
            other => panic!("expected NotInvertible, got {other:?}"),
        }
    }

    #[test]
    fn inverse_is_derived_from_forward() {
        let key = CipherKey::new(small_forward(), vec![0], vec![1]).unwrap();
        assert_eq!(
            key.inverse(),
            &key.forward().derive_inverse(Place::last(2)).unwrap()
        );
    }
}
