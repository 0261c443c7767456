//! Helpers for permutations of `{0, …, q−1}` given as image vectors:
//! `p[x]` is the image of `x`.

use num_integer::Integer;

use crate::Symbol;

/// Whether `map` is a bijection of `{0, …, len−1}`.
pub fn is_permutation(map: &[Symbol]) -> bool {
    let mut seen = vec![false; map.len()];
    for &image in map {
        match seen.get_mut(image as usize) {
            Some(slot) if !*slot => *slot = true,
            _ => return false,
        }
    }
    true
}

/// The identity permutation on `order` symbols.
pub fn identity(order: usize) -> Vec<Symbol> {
    (0..order).map(|x| x as Symbol).collect()
}

/// `(outer ∘ inner)(x) = outer[inner[x]]`. Both maps must act on the same
/// number of symbols; `inner`'s images must index into `outer`.
pub fn compose(outer: &[Symbol], inner: &[Symbol]) -> Vec<Symbol> {
    assert_eq!(
        outer.len(),
        inner.len(),
        "composing maps of different sizes"
    );
    inner.iter().map(|&x| outer[x as usize]).collect()
}

/// Inverse of a permutation. Panics if `p` is not a permutation.
pub fn invert(p: &[Symbol]) -> Vec<Symbol> {
    assert!(is_permutation(p), "cannot invert a non-permutation");
    let mut inv = vec![0 as Symbol; p.len()];
    for (x, &image) in p.iter().enumerate() {
        inv[image as usize] = x as Symbol;
    }
    inv
}

/// Order of a permutation: the lcm of its cycle lengths. Panics if `p` is
/// not a permutation.
pub fn order(p: &[Symbol]) -> u64 {
    assert!(is_permutation(p), "order is defined for permutations only");
    let mut visited = vec![false; p.len()];
    let mut result: u64 = 1;
    for start in 0..p.len() {
        if visited[start] {
            continue;
        }
        let mut len: u64 = 0;
        let mut x = start;
        while !visited[x] {
            visited[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        result = result.lcm(&len);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_detection() {
        assert!(is_permutation(&[2, 0, 1]));
        assert!(!is_permutation(&[2, 2, 1]));
        assert!(!is_permutation(&[0, 3, 1]));
        assert!(is_permutation(&[]));
    }

    #[test]
    fn compose_and_invert() {
        let p = vec![1, 2, 0];
        assert_eq!(compose(&p, &invert(&p)), identity(3));
        assert_eq!(compose(&invert(&p), &p), identity(3));
    }

    #[test]
    fn cycle_orders() {
        assert_eq!(order(&identity(4)), 1);
        assert_eq!(order(&[1, 2, 0]), 3);
        assert_eq!(order(&[1, 0, 3, 2]), 2);
        // (0 1)(2 3 4) has order 6
        assert_eq!(order(&[1, 0, 3, 4, 2]), 6);
    }
}
