//! Stream cipher over n-ary groupoids invertible at the last argument
//! place, generalizing the Markovski quasigroup cipher.
//!
//! A key is a groupoid table `f` invertible at place `n`, a vector of
//! `(n²−n)/2` leader symbols, and a cycling schedule of positive exponents.
//! The j-th ciphertext symbol is produced by applying the translation of `f`
//! fixed by the sliding window of previous ciphertext symbols (leaders fill
//! the window before enough ciphertext exists) to the j-th plaintext symbol,
//! iterated `e_j` times:
//!
//! ```text
//! v_j = T^{e_j}(fixed_j, −)(u_j)
//! ```
//!
//! Decryption applies the translation of the derived inverse table with the
//! same fixed arguments `e_j` times; the window is fed with the received
//! ciphertext symbols, so both directions see identical fixings.
//!
//! ```
//! use algebra_core::affine_groupoid;
//! use markovski_cipher::CipherKey;
//!
//! // f(x1, x2, x3) = a(x1) + b(x2) + x3 over Z_3, invertible at place 3
//! let forward = affine_groupoid(&[vec![2, 2, 0], vec![1, 1, 1]], 3)?;
//! let key = CipherKey::new(forward, vec![2, 0, 2], vec![1, 2])?;
//!
//! let ciphertext = key.encrypt(&[2, 0, 1, 1, 2, 1])?;
//! assert_eq!(ciphertext, vec![0, 2, 1, 0, 2, 1]);
//! assert_eq!(key.decrypt(&ciphertext)?, vec![2, 0, 1, 1, 2, 1]);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```
//!
//! This is a reproduction of a research construction for study and
//! experimentation. It makes no security claims; do not use it to protect
//! real data.

mod error;
mod key;
mod stream;

pub use error::CipherError;
pub use key::{CipherKey, MAX_EXPONENT};
pub use stream::{Decryptor, Encryptor, StreamState};

pub use algebra_core::Symbol;
