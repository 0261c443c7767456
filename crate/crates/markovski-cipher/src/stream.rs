use std::collections::VecDeque;

use algebra_core::{Place, Symbol, Translation};

use crate::error::CipherError;
use crate::key::CipherKey;

/// Progress of one cipher stream: the 1-based step counter, the queue of
/// not-yet-consumed leaders, and the window of the most recent `n−1`
/// ciphertext symbols (oldest first).
///
/// A stream is strictly sequential; create one state per message.
#[derive(Debug, Clone)]
pub struct StreamState {
    arity: usize,
    position: u64,
    leaders: VecDeque<Symbol>,
    window: VecDeque<Symbol>,
}

impl StreamState {
    /// Starts a stream for the given arity and leader vector. The leader
    /// count must be `(n²−n)/2`.
    pub fn new(arity: usize, leaders: Vec<Symbol>) -> Result<Self, CipherError> {
        let expected = CipherKey::leader_count(arity);
        if leaders.len() != expected {
            return Err(CipherError::BadLeaderCount {
                arity,
                expected,
                actual: leaders.len(),
            });
        }
        Ok(StreamState {
            arity,
            position: 1,
            leaders: leaders.into(),
            window: VecDeque::with_capacity(arity - 1),
        })
    }

    pub fn for_key(key: &CipherKey) -> Self {
        StreamState::new(key.arity(), key.leaders().to_vec())
            .expect("key leaders satisfy the count invariant")
    }

    /// The 1-based index of the step about to run.
    pub fn position(&self) -> u64 {
        self.position
    }

    /// The current window of recent ciphertext symbols, oldest first.
    pub fn window(&self) -> Vec<Symbol> {
        self.window.iter().copied().collect()
    }

    /// Leaders not yet consumed, in consumption order.
    pub fn pending_leaders(&self) -> Vec<Symbol> {
        self.leaders.iter().copied().collect()
    }

    /// The `n−1` fixed arguments of the step about to run: the next unused
    /// leaders, topped up with the ciphertext window. At step `j ≤ n−1`
    /// that is `n−j` leaders followed by `v₁, …, v_{j−1}`; from step `n` on
    /// it is the window alone.
    ///
    /// The leaders are consumed when the step completes via [`advance`].
    ///
    /// [`advance`]: StreamState::advance
    pub fn fixed_args(&self) -> Vec<Symbol> {
        let needed = self.arity - 1 - self.window.len();
        assert!(
            self.leaders.len() >= needed,
            "leader queue underflow: stream state corrupted"
        );
        self.leaders
            .iter()
            .take(needed)
            .chain(self.window.iter())
            .copied()
            .collect()
    }

    /// Completes a step: consumes the leaders used by [`fixed_args`], slides
    /// the produced ciphertext symbol into the window, and moves to the next
    /// step.
    ///
    /// [`fixed_args`]: StreamState::fixed_args
    pub fn advance(&mut self, ciphertext_symbol: Symbol) {
        let consumed = self.arity - 1 - self.window.len();
        assert!(
            self.leaders.len() >= consumed,
            "leader queue underflow: stream state corrupted"
        );
        self.leaders.drain(..consumed);
        self.window.push_back(ciphertext_symbol);
        if self.window.len() > self.arity - 1 {
            self.window.pop_front();
        }
        self.position += 1;
    }
}

/// Incremental encryption stream. Ciphertext symbols come out one per
/// plaintext symbol pushed; a prefix of pushes always yields the prefix of
/// the full ciphertext.
#[derive(Debug, Clone)]
pub struct Encryptor<'k> {
    key: &'k CipherKey,
    state: StreamState,
}

impl<'k> Encryptor<'k> {
    pub fn new(key: &'k CipherKey) -> Self {
        Encryptor {
            key,
            state: StreamState::for_key(key),
        }
    }

    pub fn state(&self) -> &StreamState {
        &self.state
    }

    /// The 1-based index of the next step.
    pub fn position(&self) -> u64 {
        self.state.position()
    }

    /// Encrypts one plaintext symbol.
    pub fn push(&mut self, plaintext_symbol: Symbol) -> Result<Symbol, CipherError> {
        let order = self.key.order();
        if (plaintext_symbol as usize) >= order {
            return Err(CipherError::SymbolOutOfRange {
                position: self.state.position() - 1,
                symbol: plaintext_symbol,
                order,
            });
        }
        let translation = Translation::new(
            self.key.forward(),
            Place::last(self.key.arity()),
            self.state.fixed_args(),
        )?;
        let exponent = self.key.exponent_at(self.state.position());
        let v = translation.pow(exponent, plaintext_symbol)?;
        self.state.advance(v);
        Ok(v)
    }
}

/// Incremental decryption stream: the mirror of [`Encryptor`], applying the
/// translation of the inverse table the same number of times and feeding the
/// window with the *received* ciphertext symbols.
#[derive(Debug, Clone)]
pub struct Decryptor<'k> {
    key: &'k CipherKey,
    state: StreamState,
}

impl<'k> Decryptor<'k> {
    pub fn new(key: &'k CipherKey) -> Self {
        Decryptor {
            key,
            state: StreamState::for_key(key),
        }
    }

    pub fn state(&self) -> &StreamState {
        &self.state
    }

    /// The 1-based index of the next step.
    pub fn position(&self) -> u64 {
        self.state.position()
    }

    /// Decrypts one ciphertext symbol.
    pub fn push(&mut self, ciphertext_symbol: Symbol) -> Result<Symbol, CipherError> {
        let order = self.key.order();
        if (ciphertext_symbol as usize) >= order {
            return Err(CipherError::SymbolOutOfRange {
                position: self.state.position() - 1,
                symbol: ciphertext_symbol,
                order,
            });
        }
        let translation = Translation::new(
            self.key.inverse(),
            Place::last(self.key.arity()),
            self.state.fixed_args(),
        )?;
        let exponent = self.key.exponent_at(self.state.position());
        let u = translation.pow(exponent, ciphertext_symbol)?;
        self.state.advance(ciphertext_symbol);
        Ok(u)
    }
}
