use crate::{AlgebraError, GroupoidTable, Place, Symbol};

/// The unary map `T(a₁, …, −, …, aₙ) x = f(a₁, …, x, …, aₙ)` obtained by
/// fixing all arguments of `f` except the one at `place`.
///
/// When the table is invertible at `place`, every translation there is a
/// permutation of `Q`. The flat position of the distinguished argument is
/// precomputed, so applying a translation is a single table lookup.
#[derive(Debug, Clone)]
pub struct Translation<'a> {
    table: &'a GroupoidTable,
    place: Place,
    fixed: Vec<Symbol>,
    base: usize,
    stride: usize,
}

impl<'a> Translation<'a> {
    /// Fixes the n−1 arguments `fixed` (in argument order, skipping `place`)
    /// over `table`.
    pub fn new(
        table: &'a GroupoidTable,
        place: Place,
        fixed: Vec<Symbol>,
    ) -> Result<Self, AlgebraError> {
        let arity = table.arity();
        let order = table.order();
        if place.index() > arity {
            return Err(AlgebraError::PlaceOutOfRange {
                place: place.index(),
                arity,
            });
        }
        if fixed.len() != arity - 1 {
            return Err(AlgebraError::ArityMismatch {
                expected: arity - 1,
                actual: fixed.len(),
            });
        }
        if let Some(&symbol) = fixed.iter().find(|&&a| (a as usize) >= order) {
            return Err(AlgebraError::SymbolOutOfRange { symbol, order });
        }
        // Mixed-radix index of the argument tuple with 0 at `place`.
        let mut base = 0usize;
        let mut slots = fixed.iter();
        for position in 1..=arity {
            let digit = if position == place.index() {
                0
            } else {
                *slots.next().expect("fixed argument count checked") as usize
            };
            base = base * order + digit;
        }
        Ok(Translation {
            table,
            place,
            fixed,
            base,
            stride: table.stride_at(place),
        })
    }

    pub fn table(&self) -> &'a GroupoidTable {
        self.table
    }

    pub fn place(&self) -> Place {
        self.place
    }

    /// The fixed arguments, in argument order.
    pub fn fixed(&self) -> &[Symbol] {
        &self.fixed
    }

    /// Applies the translation once: `f(a₁, …, x, …, aₙ)`.
    pub fn apply(&self, x: Symbol) -> Result<Symbol, AlgebraError> {
        if (x as usize) >= self.table.order() {
            return Err(AlgebraError::SymbolOutOfRange {
                symbol: x,
                order: self.table.order(),
            });
        }
        Ok(self.table.entries()[self.base + x as usize * self.stride])
    }

    /// Applies the translation `exponent ≥ 1` times.
    ///
    /// Exponent 0 is rejected: in the cipher an identity step would copy a
    /// plaintext symbol straight into the ciphertext.
    pub fn pow(&self, exponent: u32, x: Symbol) -> Result<Symbol, AlgebraError> {
        if exponent == 0 {
            return Err(AlgebraError::ZeroExponent);
        }
        if (x as usize) >= self.table.order() {
            return Err(AlgebraError::SymbolOutOfRange {
                symbol: x,
                order: self.table.order(),
            });
        }
        let entries = self.table.entries();
        let mut y = x;
        for _ in 0..exponent {
            // table entries are < q by construction, so chaining stays in range
            y = entries[self.base + y as usize * self.stride];
        }
        Ok(y)
    }

    /// The image vector `[T(0), T(1), …, T(q−1)]`.
    pub fn permutation(&self) -> Vec<Symbol> {
        let entries = self.table.entries();
        (0..self.table.order())
            .map(|x| entries[self.base + x * self.stride])
            .collect()
    }

    /// Whether the translation is a bijection of `Q` (always true at an
    /// invertible place).
    pub fn is_bijection(&self) -> bool {
        crate::perm::is_permutation(&self.permutation())
    }

    /// The same fixing and place taken over `inverse_table`.
    ///
    /// When `inverse_table` is the derived inverse of this translation's
    /// table at this translation's place, the result is the inverse
    /// permutation: composing it with `self` in either order is the identity
    /// on `Q`.
    pub fn inverse_translation<'b>(
        &self,
        inverse_table: &'b GroupoidTable,
    ) -> Result<Translation<'b>, AlgebraError> {
        if inverse_table.arity() != self.table.arity()
            || inverse_table.order() != self.table.order()
        {
            return Err(AlgebraError::TableMismatch {
                arity_a: self.table.arity(),
                order_a: self.table.order(),
                arity_b: inverse_table.arity(),
                order_b: inverse_table.order(),
            });
        }
        Translation::new(inverse_table, self.place, self.fixed.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{affine_groupoid, perm};

    fn ternary_fixture() -> GroupoidTable {
        affine_groupoid(&[vec![2, 2, 0], vec![1, 1, 1]], 3).unwrap()
    }

    fn t<'a>(f: &'a GroupoidTable, fixed: &[Symbol]) -> Translation<'a> {
        Translation::new(f, Place::new(3).unwrap(), fixed.to_vec()).unwrap()
    }

    #[test]
    fn apply_spot_values() {
        let f = ternary_fixture();
        assert_eq!(t(&f, &[2, 0]).apply(1).unwrap(), 2);
        assert_eq!(t(&f, &[0, 1]).apply(2).unwrap(), 2);
        assert_eq!(t(&f, &[2, 2]).apply(2).unwrap(), 0);
    }

    #[test]
    fn apply_range_check() {
        let f = ternary_fixture();
        assert_eq!(
            t(&f, &[2, 0]).apply(3).unwrap_err(),
            AlgebraError::SymbolOutOfRange {
                symbol: 3,
                order: 3
            }
        );
    }

    #[test]
    fn pow_squares_and_cubes() {
        let f = ternary_fixture();
        let tr = t(&f, &[2, 0]);
        // T(2,0,−) is the cycle 0 → 1 → 2 → 0
        assert_eq!(tr.permutation(), vec![1, 2, 0]);
        assert_eq!(tr.pow(2, 0).unwrap(), 2);
        assert_eq!(tr.pow(1, 1).unwrap(), tr.apply(1).unwrap());
        assert_eq!(tr.pow(3, 1).unwrap(), 1);
    }

    #[test]
    fn pow_rejects_zero_exponent() {
        let f = ternary_fixture();
        assert_eq!(
            t(&f, &[2, 0]).pow(0, 1).unwrap_err(),
            AlgebraError::ZeroExponent
        );
    }

    #[test]
    fn inverse_translation_composes_to_identity() {
        let f = ternary_fixture();
        let g = f.derive_inverse(Place::new(3).unwrap()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let fwd = t(&f, &[a, b]);
                let inv = fwd.inverse_translation(&g).unwrap();
                let fwd_perm = fwd.permutation();
                let inv_perm = inv.permutation();
                assert_eq!(perm::compose(&inv_perm, &fwd_perm), perm::identity(3));
                assert_eq!(perm::compose(&fwd_perm, &inv_perm), perm::identity(3));
            }
        }
    }

    #[test]
    fn inverse_translation_spot_value() {
        // T(2,0,−) = (0 1 2), so its inverse sends 2 to 1.
        let f = ternary_fixture();
        let g = f.derive_inverse(Place::new(3).unwrap()).unwrap();
        let inv = t(&f, &[2, 0]).inverse_translation(&g).unwrap();
        assert_eq!(inv.apply(2).unwrap(), 1);
    }

    #[test]
    fn fixture_inverse_equals_square() {
        // On this table, T⁻¹(x, y, −) = T²(x, y, −) for every fixing.
        let f = ternary_fixture();
        let g = f.derive_inverse(Place::new(3).unwrap()).unwrap();
        for a in 0..3 {
            for b in 0..3 {
                let fwd = t(&f, &[a, b]);
                let inv = fwd.inverse_translation(&g).unwrap();
                let fwd_perm = fwd.permutation();
                let squared = perm::compose(&fwd_perm, &fwd_perm);
                assert_eq!(inv.permutation(), squared);
            }
        }
    }

    #[test]
    fn projection_inverse_translation_is_identity() {
        let proj = GroupoidTable::from_fn(2, 5, |args| args[1]).unwrap();
        let g = proj.derive_inverse(Place::new(2).unwrap()).unwrap();
        let fwd = Translation::new(&proj, Place::new(2).unwrap(), vec![3]).unwrap();
        let inv = fwd.inverse_translation(&g).unwrap();
        assert_eq!(fwd.permutation(), inv.permutation());
        assert_eq!(fwd.permutation(), perm::identity(5));
    }

    #[test]
    fn inverse_translation_rejects_mismatched_table() {
        let f = ternary_fixture();
        let other = GroupoidTable::from_fn(3, 2, |args| args[2]).unwrap();
        let fwd = t(&f, &[2, 0]);
        assert_eq!(
            fwd.inverse_translation(&other).unwrap_err(),
            AlgebraError::TableMismatch {
                arity_a: 3,
                order_a: 3,
                arity_b: 3,
                order_b: 2
            }
        );
    }

    #[test]
    fn translation_at_first_place() {
        // General-place translations: fix x₂ = 0, x₃ = 1 and vary x₁.
        let f = ternary_fixture();
        let tr = Translation::new(&f, Place::new(1).unwrap(), vec![0, 1]).unwrap();
        // f(x₁, 0, 1) = αx₁ + 1 + 1 → α = (2, 2, 0) gives (1, 1, 2)
        assert_eq!(tr.permutation(), vec![1, 1, 2]);
        assert!(!tr.is_bijection());
    }

    #[test]
    fn rejects_wrong_fixed_count_and_place() {
        let f = ternary_fixture();
        assert_eq!(
            Translation::new(&f, Place::new(3).unwrap(), vec![0]).unwrap_err(),
            AlgebraError::ArityMismatch {
                expected: 2,
                actual: 1
            }
        );
        assert_eq!(
            Translation::new(&f, Place::new(5).unwrap(), vec![0, 0]).unwrap_err(),
            AlgebraError::PlaceOutOfRange { place: 5, arity: 3 }
        );
    }
}
