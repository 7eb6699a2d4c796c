//! Finite hypergroupoids and the induced product on nonempty subsets.

use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{Subset, ORDER_CAP};

/// A violated instance of `{x}*(y∘z) = (x∘y)*{z}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AssociativityWitness {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    /// `{x}*(y∘z)`
    pub lhs: Subset,
    /// `(x∘y)*{z}`
    pub rhs: Subset,
}

impl fmt::Display for AssociativityWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(x,y,z)=({},{},{}): {{x}}*(y∘z)={} but (x∘y)*{{z}}={}",
            self.x, self.y, self.z, self.lhs, self.rhs
        )
    }
}

/// A carrier `{0, .., order-1}` with a hyperoperation `a∘b` into nonempty subsets.
///
/// Values are immutable once built. Associativity is decided at construction
/// and cached, so the hypersemigroup-only operations can check their
/// precondition in constant time.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergroupoid {
    order: usize,
    table: Vec<Subset>,
    violation: Option<AssociativityWitness>,
}

impl Hypergroupoid {
    /// Builds a hypergroupoid from a row-major `order × order` table.
    pub fn new(order: usize, table: Vec<Subset>) -> Result<Self> {
        if order == 0 || order > ORDER_CAP {
            return Err(Error::InvalidOrder(order));
        }
        if table.len() != order * order {
            return Err(Error::TableSize {
                order,
                expected: order * order,
                found: table.len(),
            });
        }
        for (i, &cell) in table.iter().enumerate() {
            let (a, b) = (i / order, i % order);
            if cell.is_empty() {
                return Err(Error::EmptyCell { a, b });
            }
            if !cell.fits_order(order) {
                return Err(Error::CellOutOfRange { a, b, cell, order });
            }
        }
        Ok(Self::from_valid_table(order, table))
    }

    /// Caller guarantees the table is well formed.
    pub(crate) fn from_valid_table(order: usize, table: Vec<Subset>) -> Self {
        let mut h = Hypergroupoid {
            order,
            table,
            violation: None,
        };
        h.violation = h.first_associativity_violation();
        h
    }

    /// Builds from a closure giving each cell.
    pub fn from_fn(order: usize, mut cell: impl FnMut(usize, usize) -> Subset) -> Result<Self> {
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(cell(a, b));
            }
        }
        Self::new(order, table)
    }

    /// Left-zero structure: `a∘b = {a}`.
    pub fn left_zero(order: usize) -> Result<Self> {
        Self::from_fn(order, |a, _| Subset::singleton(a))
    }

    /// Right-zero structure: `a∘b = {b}`.
    pub fn right_zero(order: usize) -> Result<Self> {
        Self::from_fn(order, |_, b| Subset::singleton(b))
    }

    /// Constant structure: `a∘b = {c}`.
    pub fn constant(order: usize, c: usize) -> Result<Self> {
        Self::from_fn(order, |_, _| Subset::singleton(c))
    }

    /// Total structure: `a∘b = H`.
    pub fn total(order: usize) -> Result<Self> {
        Self::from_fn(order, |_, _| Subset::full(order))
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The whole carrier `H` as a subset.
    #[inline]
    pub fn full_set(&self) -> Subset {
        Subset::full(self.order)
    }

    /// `a∘b`. Panics if either index is out of range.
    #[inline]
    pub fn cell(&self, a: usize, b: usize) -> Subset {
        assert!(a < self.order && b < self.order, "element out of range");
        self.table[a * self.order + b]
    }

    /// Row-major cells.
    pub fn cells(&self) -> &[Subset] {
        &self.table
    }

    /// True iff every cell is a singleton, i.e. the table is an ordinary binary operation.
    pub fn is_singleton_celled(&self) -> bool {
        self.table.iter().all(|c| c.len() == 1)
    }

    /// Whether the hypersemigroup law holds (cached at construction).
    #[inline]
    pub fn is_hypersemigroup(&self) -> bool {
        self.violation.is_none()
    }

    /// Errors with [`Error::NotAssociative`] unless this is a hypersemigroup.
    pub fn require_associative(&self, operation: &'static str) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(witness) => Err(Error::NotAssociative { operation, witness }),
        }
    }

    pub fn check_subset(&self, subset: Subset) -> Result<()> {
        if subset.fits_order(self.order) {
            Ok(())
        } else {
            Err(Error::SubsetOutOfRange {
                subset,
                order: self.order,
            })
        }
    }

    pub(crate) fn check_operand(&self, operation: &'static str, subset: Subset) -> Result<()> {
        if subset.is_empty() {
            return Err(Error::EmptyOperand { operation });
        }
        self.check_subset(subset)
    }

    /// `A*B`, the union of `a∘b` over `a∈A`, `b∈B`.
    ///
    /// Both operands must be nonempty subsets of the carrier.
    pub fn product(&self, a: Subset, b: Subset) -> Result<Subset> {
        self.check_operand("subset product", a)?;
        self.check_operand("subset product", b)?;
        Ok(self.product_unchecked(a, b))
    }

    /// `A*B` without operand validation. Returns the empty set if either
    /// operand is empty.
    #[inline]
    pub(crate) fn product_unchecked(&self, a: Subset, b: Subset) -> Subset {
        let n = self.order;
        let mut acc = Subset::EMPTY;
        for x in a {
            let row = &self.table[x * n..x * n + n];
            for y in b {
                acc |= row[y];
            }
        }
        acc
    }

    /// `A1*A2*...*Ak` folded from the left. Requires a hypersemigroup, where
    /// the association order does not matter.
    pub fn product_chain(&self, factors: &[Subset]) -> Result<Subset> {
        const OP: &str = "product chain";
        self.require_associative(OP)?;
        let (&first, rest) = factors
            .split_first()
            .ok_or(Error::EmptyChain { operation: OP })?;
        self.check_operand(OP, first)?;
        let mut acc = first;
        for &f in rest {
            self.check_operand(OP, f)?;
            acc = self.product_unchecked(acc, f);
        }
        Ok(acc)
    }

    /// Checks `{x}*(y∘z) = (x∘y)*{z}` for all triples in lexicographic
    /// `(x, y, z)` order, returning the first violation.
    pub fn check_associativity(&self) -> std::result::Result<(), AssociativityWitness> {
        match self.violation {
            None => Ok(()),
            Some(w) => Err(w),
        }
    }

    /// Every violated triple, in lexicographic order.
    pub fn associativity_violations(&self) -> Vec<AssociativityWitness> {
        self.violations().collect()
    }

    fn first_associativity_violation(&self) -> Option<AssociativityWitness> {
        self.violations().next()
    }

    fn violations(&self) -> impl Iterator<Item = AssociativityWitness> + '_ {
        let n = self.order;
        (0..n * n * n).filter_map(move |i| {
            let (x, y, z) = (i / (n * n), (i / n) % n, i % n);
            let lhs = self.product_unchecked(Subset::singleton(x), self.table[y * n + z]);
            let rhs = self.product_unchecked(self.table[x * n + y], Subset::singleton(z));
            (lhs != rhs).then_some(AssociativityWitness { x, y, z, lhs, rhs })
        })
    }

    /// The isomorphic copy obtained by renaming each element `x` to `perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Hypergroupoid {
        let n = self.order;
        assert_eq!(perm.len(), n, "permutation length must equal the order");
        let mut table = vec![Subset::EMPTY; n * n];
        for a in 0..n {
            for b in 0..n {
                table[perm[a] * n + perm[b]] = self.table[a * n + b].relabel(perm);
            }
        }
        Hypergroupoid::from_valid_table(n, table)
    }
}

impl fmt::Debug for Hypergroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergroupoid(order={}, ", self.order)?;
        fmt::Display::fmt(self, f)?;
        f.write_str(")")
    }
}

/// Rows separated by `|`, e.g. `{0} {0} | {1} {1}`.
impl fmt::Display for Hypergroupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in 0..self.order {
            if a > 0 {
                f.write_str(" | ")?;
            }
            for b in 0..self.order {
                if b > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.cell(a, b))?;
            }
        }
        Ok(())
    }
}

impl PartialOrd for Hypergroupoid {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Order first, then row-major cells compared by bitmask.
impl Ord for Hypergroupoid {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order
            .cmp(&other.order)
            .then_with(|| self.table.cmp(&other.table))
    }
}
