use algebra_core::{GroupoidTable, Symbol};
use markovski_cipher::CipherKey;
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::error::KeyError;

// Independent substreams of the counter-based generator, so the table,
// leader, and exponent draws cannot interleave.
const TABLE_STREAM: u64 = 1;
const LEADER_STREAM: u64 = 2;
const EXPONENT_STREAM: u64 = 3;

/// The provenance note `keygen` records in the key file comment line.
pub fn keygen_comment(seed: u64) -> String {
    format!("chacha12 seed={seed}")
}

/// Deterministically generates a key from a seed.
///
/// For each of the `q^(n−1)` fixings of the first `n−1` arguments, the
/// column along the last argument is an independent uniformly random
/// permutation of `Q`, so the table is invertible at the last place by
/// construction (and the draw is uniform over all such tables). Leaders are
/// uniform symbols; the `schedule_len` exponents are uniform in `1..=q`,
/// since a translation's permutation order never exceeds `q` and larger
/// exponents would add cost, not key material.
///
/// All randomness comes from seeded ChaCha12 substreams with rejection
/// sampling, so the same seed produces the same key on every platform.
pub fn generate_key(
    arity: usize,
    order: usize,
    seed: u64,
    schedule_len: usize,
) -> Result<CipherKey, KeyError> {
    if order < 2 {
        return Err(KeyError::OrderTooSmall(order));
    }
    if schedule_len == 0 {
        return Err(KeyError::EmptyScheduleRequest);
    }
    let cells = GroupoidTable::cell_count(arity, order)?;

    let mut rng = substream(seed, TABLE_STREAM);
    let mut entries = vec![0 as Symbol; cells];
    let mut column: Vec<Symbol> = Vec::with_capacity(order);
    for prefix in 0..cells / order {
        column.clear();
        column.extend(0..order as Symbol);
        shuffle(&mut rng, &mut column);
        entries[prefix * order..(prefix + 1) * order].copy_from_slice(&column);
    }
    let forward = GroupoidTable::new(arity, order, entries)?;

    let mut rng = substream(seed, LEADER_STREAM);
    let leaders = (0..CipherKey::leader_count(arity))
        .map(|_| uniform(&mut rng, order as u32) as Symbol)
        .collect();

    let mut rng = substream(seed, EXPONENT_STREAM);
    let exponents = (0..schedule_len)
        .map(|_| 1 + uniform(&mut rng, order as u32))
        .collect();

    Ok(CipherKey::new(forward, leaders, exponents)?)
}

fn substream(seed: u64, stream: u64) -> ChaCha12Rng {
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Unbiased draw from `0..bound` by rejection on 32-bit words.
fn uniform(rng: &mut ChaCha12Rng, bound: u32) -> u32 {
    debug_assert!(bound >= 1);
    let zone = (1u64 << 32) / bound as u64 * bound as u64;
    loop {
        let word = rng.next_u32() as u64;
        if word < zone {
            return (word % bound as u64) as u32;
        }
    }
}

/// Fisher–Yates with the explicit `uniform` draw, to keep the byte-stream →
/// permutation mapping pinned by this crate rather than a library's
/// shuffle internals.
fn shuffle(rng: &mut ChaCha12Rng, values: &mut [Symbol]) {
    for i in (1..values.len()).rev() {
        let j = uniform(rng, (i + 1) as u32) as usize;
        values.swap(i, j);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use algebra_core::{perm, Place};

    #[test]
    fn same_seed_same_key() {
        let a = generate_key(3, 5, 42, 2).unwrap();
        let b = generate_key(3, 5, 42, 2).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, generate_key(3, 5, 43, 2).unwrap());
    }

    #[test]
    fn columns_are_permutations() {
        let key = generate_key(2, 2, 7, 1).unwrap();
        for row in key.forward().entries().chunks(2) {
            assert!(perm::is_permutation(row));
        }
    }

    #[test]
    fn generated_tables_are_invertible_at_the_last_place() {
        for seed in 0..5 {
            let key = generate_key(3, 3, seed, 2).unwrap();
            assert!(key
                .forward()
                .is_invertible_at(Place::new(3).unwrap())
                .unwrap());
        }
    }

    #[test]
    fn exponents_stay_within_the_alphabet() {
        let key = generate_key(2, 4, 99, 20).unwrap();
        assert_eq!(key.exponents().len(), 20);
        assert!(key.exponents().iter().all(|&e| (1..=4).contains(&e)));
    }

    #[test]
    fn request_validation() {
        assert_eq!(
            generate_key(2, 1, 0, 1).unwrap_err(),
            KeyError::OrderTooSmall(1)
        );
        assert_eq!(
            generate_key(2, 2, 0, 0).unwrap_err(),
            KeyError::EmptyScheduleRequest
        );
        assert!(matches!(
            generate_key(1, 2, 0, 1).unwrap_err(),
            KeyError::Algebra(_)
        ));
        // 5000² > 2²⁴ cells
        assert!(matches!(
            generate_key(2, 5000, 0, 1).unwrap_err(),
            KeyError::Algebra(_)
        ));
    }

    #[test]
    fn leader_count_follows_arity() {
        let key = generate_key(4, 3, 11, 3).unwrap();
        assert_eq!(key.leaders().len(), 6);
    }
}
