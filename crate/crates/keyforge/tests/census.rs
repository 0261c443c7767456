//! Census counts: exhaustive enumeration versus the closed form, and the
//! strict dominance of invertible-at-one-place tables over quasigroups.

use keyforge::{census, CensusMethod, KeyError, MAX_EXHAUSTIVE_CELLS};
use num_bigint::BigUint;

fn big(value: u64) -> BigUint {
    BigUint::from(value)
}

#[test]
fn binary_order_two_counts() {
    let report = census(2, 2, 2, Some(CensusMethod::Exhaustive)).unwrap();
    assert_eq!(report.invertible, big(4));
    assert_eq!(report.quasigroups, big(2));
    assert_eq!(report.method, CensusMethod::Exhaustive);
}

#[test]
fn binary_order_three_counts() {
    let report = census(2, 3, 2, None).unwrap();
    assert_eq!(report.invertible, big(216));
    assert_eq!(report.quasigroups, big(12));
    assert_eq!(report.method, CensusMethod::Exhaustive);
}

#[test]
fn single_symbol_alphabet_has_one_table() {
    let report = census(2, 1, 2, None).unwrap();
    assert_eq!(report.invertible, big(1));
    assert_eq!(report.quasigroups, big(1));
}

#[test]
fn counts_are_symmetric_across_places() {
    for arity_order in [(2usize, 2usize), (2, 3), (3, 2)] {
        let (arity, order) = arity_order;
        let reports: Vec<_> = (1..=arity)
            .map(|place| census(arity, order, place, Some(CensusMethod::Exhaustive)).unwrap())
            .collect();
        for report in &reports[1..] {
            assert_eq!(report.invertible, reports[0].invertible);
            assert_eq!(report.quasigroups, reports[0].quasigroups);
        }
    }
}

#[test]
fn ternary_order_two_counts() {
    let report = census(3, 2, 3, None).unwrap();
    assert_eq!(report.invertible, big(16)); // (2!)^(2²)
    assert_eq!(report.quasigroups, big(2));
}

#[test]
fn closed_form_matches_exhaustive_wherever_both_run() {
    // census() itself asserts agreement in exhaustive mode; run it over
    // every feasible shape so the assertion is exercised everywhere.
    for arity in 2..=4usize {
        for order in 1..=3usize {
            let cells = (order as u64).pow(arity as u32) as usize;
            if cells > MAX_EXHAUSTIVE_CELLS {
                continue;
            }
            for place in 1..=arity {
                census(arity, order, place, Some(CensusMethod::Exhaustive)).unwrap();
            }
        }
    }
}

#[test]
fn ternary_order_three_closed_form() {
    let report = census(3, 3, 3, Some(CensusMethod::ClosedForm)).unwrap();
    assert_eq!(report.invertible, big(10_077_696)); // (3!)^(3²)
    assert_eq!(
        report.quasigroups,
        ternary_order_three_quasigroups_by_layers()
    );
    assert_eq!(report.method, CensusMethod::ClosedForm);
}

#[test]
fn binary_closed_form_against_known_latin_counts() {
    let known: [(usize, u64); 2] = [(4, 576), (5, 161280)];
    for (order, latin) in known {
        let report = census(2, order, 2, None).unwrap();
        assert_eq!(report.method, CensusMethod::ClosedForm);
        assert_eq!(report.quasigroups, big(latin));
        let factorial: u64 = (1..=order as u64).product();
        assert_eq!(report.invertible, big(factorial).pow(order as u32));
    }
}

#[test]
fn invertible_strictly_dominates_quasigroups() {
    let shapes = [
        (2, 2, 2),
        (2, 3, 2),
        (3, 2, 3),
        (3, 3, 3),
        (2, 4, 2),
        (2, 5, 1),
    ];
    for (arity, order, place) in shapes {
        let report = census(arity, order, place, None).unwrap();
        assert!(
            report.invertible > report.quasigroups,
            "n = {arity}, q = {order}: {} ≤ {}",
            report.invertible,
            report.quasigroups
        );
    }
}

#[test]
fn infeasible_exhaustive_request_suggests_closed_form() {
    match census(3, 3, 3, Some(CensusMethod::Exhaustive)).unwrap_err() {
        KeyError::CensusInfeasible(detail) => assert!(detail.contains("closed-form")),
        other => panic!("expected CensusInfeasible, got {other:?}"),
    }
}

#[test]
fn oversized_backtracking_is_refused() {
    // order 6 Latin squares: 812 million of them, over the node budget
    assert!(matches!(
        census(2, 6, 2, None).unwrap_err(),
        KeyError::CensusInfeasible(_)
    ));
}

#[test]
fn rejects_place_out_of_range() {
    assert!(matches!(
        census(2, 2, 3, None).unwrap_err(),
        KeyError::Algebra(_)
    ));
    assert!(matches!(
        census(2, 2, 0, None).unwrap_err(),
        KeyError::Algebra(_)
    ));
}

/// Independent route to the number of ternary quasigroups of order 3:
/// stack three of the twelve 3×3 Latin squares as the slices at
/// x₁ = 0, 1, 2 and keep the stacks whose columns are permutations too.
fn ternary_order_three_quasigroups_by_layers() -> BigUint {
    let squares = all_latin_squares_order_three();
    assert_eq!(squares.len(), 12);
    let mut count = 0u64;
    for a in &squares {
        for b in &squares {
            for c in &squares {
                let ok = (0..9).all(|cell| {
                    let column = [a[cell], b[cell], c[cell]];
                    let mut seen = [false; 3];
                    column.iter().all(|&s| {
                        let slot = &mut seen[s as usize];
                        !std::mem::replace(slot, true)
                    })
                });
                if ok {
                    count += 1;
                }
            }
        }
    }
    BigUint::from(count)
}

fn all_latin_squares_order_three() -> Vec<Vec<u8>> {
    let mut squares = Vec::new();
    let mut grid = vec![0u8; 9];
    loop {
        let latin = (0..3).all(|r| {
            let row: Vec<u8> = (0..3).map(|c| grid[r * 3 + c]).collect();
            let col: Vec<u8> = (0..3).map(|c| grid[c * 3 + r]).collect();
            is_perm3(&row) && is_perm3(&col)
        });
        if latin {
            squares.push(grid.clone());
        }
        let mut pos = 9;
        loop {
            if pos == 0 {
                return squares;
            }
            pos -= 1;
            grid[pos] += 1;
            if grid[pos] < 3 {
                break;
            }
            grid[pos] = 0;
        }
    }
}

fn is_perm3(values: &[u8]) -> bool {
    let mut seen = [false; 3];
    values.iter().all(|&v| {
        let slot = &mut seen[v as usize];
        !std::mem::replace(slot, true)
    })
}
