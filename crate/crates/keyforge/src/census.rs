use std::fmt;

use algebra_core::{AlgebraError, GroupoidTable, Place, Symbol};
use num_bigint::BigUint;

use crate::error::KeyError;
use crate::is_quasigroup;

/// Exhaustive table enumeration visits `q^(q^n)` candidates; it is allowed
/// only for tables of at most this many cells (so at most `3^9` candidates).
pub const MAX_EXHAUSTIVE_CELLS: usize = 9;

/// Work budget for the Latin-hypercube backtracking counter.
const MAX_BACKTRACK_NODES: u64 = 20_000_000;

/// Backtracking needs per-cell line bookkeeping; beyond this it could not
/// finish within the node budget anyway.
const MAX_BACKTRACK_CELLS: usize = 1024;

/// Digit bound for the closed-form count, to keep results printable.
const MAX_CLOSED_FORM_DIGITS: f64 = 1_000_000.0;

/// How a census was computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CensusMethod {
    /// Every table of the given shape was enumerated and tested.
    Exhaustive,
    /// The invertible count comes from the formula `(q!)^(q^(n−1))`.
    ClosedForm,
}

impl fmt::Display for CensusMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CensusMethod::Exhaustive => f.write_str("exhaustive"),
            CensusMethod::ClosedForm => f.write_str("closed-form"),
        }
    }
}

/// Counts of n-ary tables of order q that are invertible at a given place,
/// versus full n-ary quasigroups. Invertible-at-one-place tables always
/// dominate: the cipher's key space is strictly larger than the quasigroup
/// key space whenever `q ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub arity: usize,
    pub order: usize,
    pub place: usize,
    pub invertible: BigUint,
    pub quasigroups: BigUint,
    pub method: CensusMethod,
}

/// Runs the census for `(n, q)` at `place`. With `method = None` the mode
/// is picked automatically: exhaustive when the table has at most
/// [`MAX_EXHAUSTIVE_CELLS`] cells, closed-form otherwise.
///
/// In exhaustive mode both counts are obtained by enumeration and are
/// cross-checked against the closed form and the backtracking counter; a
/// disagreement would be a bug and panics.
pub fn census(
    arity: usize,
    order: usize,
    place: usize,
    method: Option<CensusMethod>,
) -> Result<CensusReport, KeyError> {
    let cells = GroupoidTable::cell_count(arity, order)?;
    if place == 0 || place > arity {
        return Err(KeyError::Algebra(AlgebraError::PlaceOutOfRange {
            place,
            arity,
        }));
    }
    let method = match method {
        Some(CensusMethod::Exhaustive) if cells > MAX_EXHAUSTIVE_CELLS => {
            return Err(KeyError::CensusInfeasible(format!(
                "exhaustive mode enumerates q^(q^n) tables and is capped at q^n ≤ \
                 {MAX_EXHAUSTIVE_CELLS} cells, but q^n = {cells}; use closed-form mode"
            )))
        }
        Some(m) => m,
        None if cells <= MAX_EXHAUSTIVE_CELLS => CensusMethod::Exhaustive,
        None => CensusMethod::ClosedForm,
    };

    let closed_form = closed_form_invertible(arity, order)?;
    let quasigroups = count_quasigroups(arity, order)?;

    let invertible = match method {
        CensusMethod::Exhaustive => {
            let (invertible, quasi) = enumerate_tables(arity, order, place);
            assert_eq!(
                BigUint::from(invertible),
                closed_form,
                "exhaustive invertible count disagrees with (q!)^(q^(n-1))"
            );
            assert_eq!(
                BigUint::from(quasi),
                quasigroups,
                "exhaustive quasigroup count disagrees with backtracking"
            );
            BigUint::from(invertible)
        }
        CensusMethod::ClosedForm => closed_form,
    };
    assert!(
        invertible >= quasigroups,
        "every quasigroup is invertible at every place"
    );

    Ok(CensusReport {
        arity,
        order,
        place,
        invertible,
        quasigroups,
        method,
    })
}

/// `(q!)^(q^(n−1))`: independently choose a permutation column for every
/// fixing of the other arguments.
fn closed_form_invertible(arity: usize, order: usize) -> Result<BigUint, KeyError> {
    let exponent = GroupoidTable::cell_count(arity, order)? / order;
    let log10_factorial: f64 = (2..=order).map(|k| (k as f64).log10()).sum();
    let digits = exponent as f64 * log10_factorial;
    if digits > MAX_CLOSED_FORM_DIGITS {
        return Err(KeyError::CensusInfeasible(format!(
            "(q!)^(q^(n-1)) for n = {arity}, q = {order} has about {digits:.0} decimal digits"
        )));
    }
    let factorial = (1..=order as u64).fold(BigUint::from(1u32), |acc, k| acc * k);
    Ok(factorial.pow(exponent as u32))
}

/// Visits every table of the shape and counts those invertible at `place`
/// and those invertible everywhere. Caller guarantees `cells ≤ 9`.
fn enumerate_tables(arity: usize, order: usize, place: usize) -> (u64, u64) {
    let cells = GroupoidTable::cell_count(arity, order).expect("shape already validated");
    let place = Place::new(place).expect("place already validated");
    let mut entries = vec![0 as Symbol; cells];
    let mut invertible = 0u64;
    let mut quasigroups = 0u64;
    loop {
        let table = GroupoidTable::new(arity, order, entries.clone()).expect("valid candidate");
        if table.is_invertible_at(place).expect("valid place") {
            invertible += 1;
        }
        if is_quasigroup(&table) {
            quasigroups += 1;
        }
        // odometer over all q^cells entry vectors
        let mut pos = cells;
        loop {
            if pos == 0 {
                return (invertible, quasigroups);
            }
            pos -= 1;
            entries[pos] += 1;
            if (entries[pos] as usize) < order {
                break;
            }
            entries[pos] = 0;
        }
    }
}

/// Counts n-ary quasigroups of order q (Latin hypercubes) by backtracking
/// with per-line symbol masks, under a node budget.
fn count_quasigroups(arity: usize, order: usize) -> Result<BigUint, KeyError> {
    if order == 1 {
        return Ok(BigUint::from(1u32));
    }
    let cells = GroupoidTable::cell_count(arity, order)?;
    if cells > MAX_BACKTRACK_CELLS {
        return Err(KeyError::CensusInfeasible(format!(
            "quasigroup counting backtracks over q^n = {cells} cells, \
             capped at {MAX_BACKTRACK_CELLS}"
        )));
    }
    // cells ≤ 1024 and arity ≥ 2 give order ≤ 32, so u64 line masks suffice.
    let lines_per_direction = cells / order;
    let mut cell_lines = vec![0usize; cells * arity];
    for cell in 0..cells {
        for direction in 0..arity {
            let stride = order.pow((arity - 1 - direction) as u32);
            let local = cell / (stride * order) * stride + cell % stride;
            cell_lines[cell * arity + direction] = direction * lines_per_direction + local;
        }
    }
    let mut masks = vec![0u64; arity * lines_per_direction];
    let mut nodes = 0u64;
    let count = backtrack(0, cells, order, arity, &cell_lines, &mut masks, &mut nodes)?;
    Ok(BigUint::from(count))
}

fn backtrack(
    cell: usize,
    cells: usize,
    order: usize,
    arity: usize,
    cell_lines: &[usize],
    masks: &mut [u64],
    nodes: &mut u64,
) -> Result<u64, KeyError> {
    if cell == cells {
        return Ok(1);
    }
    let lines = &cell_lines[cell * arity..(cell + 1) * arity];
    let used = lines.iter().fold(0u64, |acc, &line| acc | masks[line]);
    let mut available = !used & ((1u64 << order) - 1);
    let mut total = 0u64;
    while available != 0 {
        let symbol = available.trailing_zeros() as u64;
        available &= available - 1;
        *nodes += 1;
        if *nodes > MAX_BACKTRACK_NODES {
            return Err(KeyError::CensusInfeasible(format!(
                "quasigroup counting exceeded the {MAX_BACKTRACK_NODES}-node budget"
            )));
        }
        let bit = 1u64 << symbol;
        for &line in lines {
            masks[line] |= bit;
        }
        total += backtrack(cell + 1, cells, order, arity, cell_lines, masks, nodes)?;
        for &line in lines {
            masks[line] &= !bit;
        }
    }
    Ok(total)
}
