use crate::{AlgebraError, NonInvertibleWitness, Symbol, MAX_ARITY, MAX_CELLS};

/// One-based argument position `i` with `1 ≤ i ≤ n`.
///
/// A `Place` does not know the arity it will be used with; operations check
/// it against their table and reject out-of-range places.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Place(usize);

impl Place {
    /// Creates a place from a 1-based index. Rejects 0.
    pub fn new(index: usize) -> Result<Self, AlgebraError> {
        if index == 0 {
            return Err(AlgebraError::ZeroPlace);
        }
        Ok(Place(index))
    }

    /// The last place of an n-ary operation.
    pub fn last(arity: usize) -> Self {
        Place(arity.max(1))
    }

    /// The 1-based index.
    pub fn index(self) -> usize {
        self.0
    }
}

/// An n-ary groupoid `(Q, f)` with `Q = {0, …, q−1}`, stored as a flat table
/// of `qⁿ` result symbols.
///
/// Entries are indexed row-major by the argument tuple `(a₁, …, aₙ)` in
/// lexicographic order with `a₁` most significant, i.e. the cell for a tuple
/// sits at its mixed-radix index in base `q`. Arity and order are fixed at
/// construction and the table is never mutated afterwards, so values can be
/// shared freely across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupoidTable {
    arity: usize,
    order: usize,
    entries: Vec<Symbol>,
}

impl GroupoidTable {
    /// Number of cells `qⁿ` a table of this shape has, if it is within the
    /// arity and size caps.
    pub fn cell_count(arity: usize, order: usize) -> Result<usize, AlgebraError> {
        if !(2..=MAX_ARITY).contains(&arity) {
            return Err(AlgebraError::BadArity(arity));
        }
        if order == 0 {
            return Err(AlgebraError::ZeroOrder);
        }
        let mut cells: usize = 1;
        for _ in 0..arity {
            cells = cells
                .checked_mul(order)
                .filter(|&c| c <= MAX_CELLS)
                .ok_or(AlgebraError::TableTooLarge { order, arity })?;
        }
        Ok(cells)
    }

    /// Builds a table from its flat entry vector.
    pub fn new(arity: usize, order: usize, entries: Vec<Symbol>) -> Result<Self, AlgebraError> {
        let cells = Self::cell_count(arity, order)?;
        if entries.len() != cells {
            return Err(AlgebraError::WrongEntryCount {
                expected: cells,
                actual: entries.len(),
            });
        }
        if let Some(&symbol) = entries.iter().find(|&&s| (s as usize) >= order) {
            return Err(AlgebraError::SymbolOutOfRange { symbol, order });
        }
        Ok(GroupoidTable {
            arity,
            order,
            entries,
        })
    }

    /// Builds a table by evaluating `f` on every argument tuple, in row-major
    /// order. Outputs are range-checked.
    pub fn from_fn(
        arity: usize,
        order: usize,
        mut f: impl FnMut(&[Symbol]) -> Symbol,
    ) -> Result<Self, AlgebraError> {
        let cells = Self::cell_count(arity, order)?;
        let mut entries = Vec::with_capacity(cells);
        let mut args = vec![0 as Symbol; arity];
        loop {
            entries.push(f(&args));
            // odometer increment, least significant digit last
            let mut pos = arity;
            loop {
                if pos == 0 {
                    return Self::new(arity, order, entries);
                }
                pos -= 1;
                args[pos] += 1;
                if (args[pos] as usize) < order {
                    break;
                }
                args[pos] = 0;
            }
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The flat entry vector, row-major with `a₁` most significant.
    pub fn entries(&self) -> &[Symbol] {
        &self.entries
    }

    pub fn cells(&self) -> usize {
        self.entries.len()
    }

    /// Mixed-radix index of a full argument tuple. Caller must have
    /// range-checked the arguments.
    fn flatten(&self, args: &[Symbol]) -> usize {
        args.iter()
            .fold(0usize, |acc, &a| acc * self.order + a as usize)
    }

    /// Evaluates `f(a₁, …, aₙ)`.
    pub fn eval(&self, args: &[Symbol]) -> Result<Symbol, AlgebraError> {
        if args.len() != self.arity {
            return Err(AlgebraError::ArityMismatch {
                expected: self.arity,
                actual: args.len(),
            });
        }
        if let Some(&symbol) = args.iter().find(|&&a| (a as usize) >= self.order) {
            return Err(AlgebraError::SymbolOutOfRange {
                symbol,
                order: self.order,
            });
        }
        Ok(self.entries[self.flatten(args)])
    }

    fn check_place(&self, place: Place) -> Result<(), AlgebraError> {
        if place.index() > self.arity {
            return Err(AlgebraError::PlaceOutOfRange {
                place: place.index(),
                arity: self.arity,
            });
        }
        Ok(())
    }

    /// Distance between consecutive values of the argument at `place` in the
    /// flat layout: `q^(n−i)`.
    pub(crate) fn stride_at(&self, place: Place) -> usize {
        self.order.pow((self.arity - place.index()) as u32)
    }

    /// Reconstructs the n−1 fixed arguments from the prefix/suffix indices of
    /// a fixing (all argument positions except `place`).
    fn decode_fixing(&self, place: Place, prefix: usize, suffix: usize) -> Vec<Symbol> {
        let before = place.index() - 1;
        let after = self.arity - place.index();
        let mut fixed = vec![0 as Symbol; before + after];
        let mut rest = prefix;
        for slot in (0..before).rev() {
            fixed[slot] = (rest % self.order) as Symbol;
            rest /= self.order;
        }
        let mut rest = suffix;
        for slot in (0..after).rev() {
            fixed[before + slot] = (rest % self.order) as Symbol;
            rest /= self.order;
        }
        fixed
    }

    /// Scans every fixing of the non-`place` arguments. Returns a collision
    /// witness if some induced unary map fails to be a bijection, `None` if
    /// the table is invertible at `place`.
    pub fn invertibility_witness(
        &self,
        place: Place,
    ) -> Result<Option<NonInvertibleWitness>, AlgebraError> {
        self.check_place(place)?;
        let stride = self.stride_at(place);
        let block = stride * self.order;
        let mut seen: Vec<Option<Symbol>> = vec![None; self.order];
        for prefix in 0..self.entries.len() / block {
            for suffix in 0..stride {
                let base = prefix * block + suffix;
                seen.fill(None);
                for x in 0..self.order {
                    let value = self.entries[base + x * stride];
                    match seen[value as usize] {
                        None => seen[value as usize] = Some(x as Symbol),
                        Some(first) => {
                            return Ok(Some(NonInvertibleWitness {
                                place: place.index(),
                                fixed: self.decode_fixing(place, prefix, suffix),
                                first,
                                second: x as Symbol,
                                value,
                            }))
                        }
                    }
                }
            }
        }
        Ok(None)
    }

    /// Whether every fixing of the other arguments makes `x ↦ f(…, x, …)` a
    /// bijection of `Q` at `place`.
    pub fn is_invertible_at(&self, place: Place) -> Result<bool, AlgebraError> {
        Ok(self.invertibility_witness(place)?.is_none())
    }

    /// Derives the inverse operation at `place`: the table `g` of the same
    /// shape with `g(a₁, …, b, …, aₙ) = x` exactly when `f(a₁, …, x, …, aₙ)
    /// = b`, the distinguished argument sitting at `place` in both tables.
    ///
    /// Fails with a collision witness when the table is not invertible at
    /// `place`.
    pub fn derive_inverse(&self, place: Place) -> Result<GroupoidTable, AlgebraError> {
        self.check_place(place)?;
        let stride = self.stride_at(place);
        let block = stride * self.order;
        let mut inverse = vec![0 as Symbol; self.entries.len()];
        let mut seen: Vec<Option<Symbol>> = vec![None; self.order];
        for prefix in 0..self.entries.len() / block {
            for suffix in 0..stride {
                let base = prefix * block + suffix;
                seen.fill(None);
                for x in 0..self.order {
                    let value = self.entries[base + x * stride];
                    if let Some(first) = seen[value as usize] {
                        return Err(AlgebraError::NotInvertible(NonInvertibleWitness {
                            place: place.index(),
                            fixed: self.decode_fixing(place, prefix, suffix),
                            first,
                            second: x as Symbol,
                            value,
                        }));
                    }
                    seen[value as usize] = Some(x as Symbol);
                    inverse[base + value as usize * stride] = x as Symbol;
                }
            }
        }
        Ok(GroupoidTable {
            arity: self.arity,
            order: self.order,
            entries: inverse,
        })
    }
}
