//! Key management for the groupoid stream cipher: seeded key generation,
//! the canonical `GCK1` key file format, the quasigroup predicate, and a
//! desk-scale census of invertible tables versus quasigroups.

mod census;
mod error;
mod generate;
mod keyfile;

pub use census::{census, CensusMethod, CensusReport, MAX_EXHAUSTIVE_CELLS};
pub use error::KeyError;
pub use generate::{generate_key, keygen_comment};
pub use keyfile::{parse_key, serialize_key, KeyFile};

use algebra_core::{GroupoidTable, Place};
use markovski_cipher::CipherKey;
use sha2::{Digest, Sha256};

/// Whether the table is invertible at *every* place, i.e. an n-ary
/// quasigroup (a Latin square when n = 2).
pub fn is_quasigroup(table: &GroupoidTable) -> bool {
    (1..=table.arity()).all(|i| {
        table
            .is_invertible_at(Place::new(i).expect("place ≥ 1"))
            .expect("place within arity")
    })
}

/// SHA-256 of the canonical (comment-free) serialization, rendered as
/// `sha256:<hex>`. Safe to quote in logs where the key itself is secret.
pub fn key_fingerprint(key: &CipherKey) -> String {
    let digest = Sha256::digest(serialize_key(key));
    format!("sha256:{}", hex::encode(digest))
}
