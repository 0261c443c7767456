use crate::{AlgebraError, GroupoidTable, Symbol};

/// Builds the affine groupoid `f(x₁, …, xₙ) = g₁(x₁) + ⋯ + g_{n−1}(x_{n−1})
/// + xₙ (mod q)` from `n−1` pointwise unary maps on `{0, …, q−1}`.
///
/// The maps are arbitrary value tables; they need not be bijections. Because
/// `xₙ` enters additively with coefficient 1, the result is invertible at the
/// last place no matter what the maps do, and its derived inverse is
/// `x_{n+1} − Σ gⱼ(xⱼ) (mod q)`.
pub fn affine_groupoid(
    unary_maps: &[Vec<Symbol>],
    order: usize,
) -> Result<GroupoidTable, AlgebraError> {
    let arity = unary_maps.len() + 1;
    let cells = GroupoidTable::cell_count(arity, order)?;
    for (index, map) in unary_maps.iter().enumerate() {
        if map.len() != order {
            return Err(AlgebraError::BadMapLength {
                index,
                expected: order,
                actual: map.len(),
            });
        }
        if let Some(&symbol) = map.iter().find(|&&v| (v as usize) >= order) {
            return Err(AlgebraError::SymbolOutOfRange { symbol, order });
        }
    }
    let mut entries = vec![0 as Symbol; cells];
    let prefixes = cells / order;
    for prefix in 0..prefixes {
        // digits of the prefix are x₁ … x_{n−1}, most significant first
        let mut rest = prefix;
        let mut sum = 0usize;
        for map in unary_maps.iter().rev() {
            sum += map[rest % order] as usize;
            rest /= order;
        }
        for last in 0..order {
            entries[prefix * order + last] = ((sum + last) % order) as Symbol;
        }
    }
    GroupoidTable::new(arity, order, entries)
}
