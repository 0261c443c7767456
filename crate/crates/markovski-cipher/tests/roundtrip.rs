//! Round-trip and causality properties over randomly drawn keys.

use algebra_core::{GroupoidTable, Symbol};
use markovski_cipher::CipherKey;
use proptest::prelude::*;

/// Builds a table invertible at the last place: each column along the last
/// argument is the argsort permutation of a slice of random keys.
fn forward_from_keys(arity: usize, order: usize, keys: &[u32]) -> GroupoidTable {
    let mut entries = vec![0 as Symbol; keys.len()];
    for prefix in 0..keys.len() / order {
        let base = prefix * order;
        let mut xs: Vec<usize> = (0..order).collect();
        xs.sort_by_key(|&x| keys[base + x]);
        for (rank, &x) in xs.iter().enumerate() {
            entries[base + x] = rank as Symbol;
        }
    }
    GroupoidTable::new(arity, order, entries).unwrap()
}

prop_compose! {
    fn cipher_key()(
        shape in (2..=4usize).prop_flat_map(|n| {
            let max_order = if n == 4 { 8usize } else { 16 };
            (Just(n), 1..=max_order)
        })
    )(
        keys in proptest::collection::vec(any::<u32>(), shape.1.pow(shape.0 as u32)),
        leaders in proptest::collection::vec(0..shape.1 as Symbol, CipherKey::leader_count(shape.0)),
        exponents in proptest::collection::vec(1..=shape.1 as u32, 1..=5),
        shape in Just(shape),
    ) -> CipherKey {
        let forward = forward_from_keys(shape.0, shape.1, &keys);
        CipherKey::new(forward, leaders, exponents).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decrypt_inverts_encrypt(key in cipher_key(), seed in any::<u64>()) {
        let message = message_from_seed(&key, seed);
        let ciphertext = key.encrypt(&message).unwrap();
        prop_assert_eq!(ciphertext.len(), message.len());
        prop_assert_eq!(key.decrypt(&ciphertext).unwrap(), message);
    }

    #[test]
    fn encryption_is_causal(key in cipher_key(), seed in any::<u64>(), cut in 0usize..=256) {
        let message = message_from_seed(&key, seed);
        let cut = cut.min(message.len());
        let full = key.encrypt(&message).unwrap();
        let partial = key.encrypt(&message[..cut]).unwrap();
        prop_assert_eq!(&partial[..], &full[..cut]);
    }
}

/// Deterministic message material derived from a seed; avoids carrying a
/// second proptest vector whose length must match the key's alphabet.
fn message_from_seed(key: &CipherKey, seed: u64) -> Vec<Symbol> {
    let mut state = seed | 1;
    let len = (seed % 257) as usize;
    (0..len)
        .map(|_| {
            // xorshift64
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            (state % key.order() as u64) as Symbol
        })
        .collect()
}
