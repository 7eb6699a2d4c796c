//! Ordinary finite semigroups, with ideal notions written element by element.
//!
//! This is deliberately a separate code path from [`crate::ideal`]: the
//! singleton-celled hypersemigroups are exactly the semigroups, and each
//! predicate here is used to cross-check its set-product counterpart.

use crate::error::{Error, Result};
use crate::hypergroupoid::Hypergroupoid;
use crate::subset::{Subset, ORDER_CAP};

/// A binary operation `a·b` on `{0, .., order-1}` given by its Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Magma {
    order: usize,
    table: Vec<usize>,
}

impl Magma {
    pub fn new(order: usize, table: Vec<usize>) -> Result<Self> {
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
        if let Some(i) = table.iter().position(|&v| v >= order) {
            return Err(Error::CellOutOfRange {
                a: i / order,
                b: i % order,
                cell: Subset::from_elements([table[i]]).unwrap_or_default(),
                order,
            });
        }
        Ok(Magma { order, table })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn is_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| {
            (0..n)
                .all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        })
    }

    /// The hypergroupoid with `a∘b = {a·b}`.
    pub fn to_hypergroupoid(&self) -> Hypergroupoid {
        let table = self.table.iter().map(|&v| Subset::singleton(v)).collect();
        Hypergroupoid::from_valid_table(self.order, table)
    }

    fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `AB = {ab : a∈A, b∈B}`.
    pub fn set_product(&self, a: Subset, b: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for x in a {
            for y in b {
                out |= Subset::singleton(self.mul(x, y));
            }
        }
        out
    }

    /// `sa ∈ A` for all `s ∈ S`, `a ∈ A`.
    pub fn is_left_ideal(&self, a: Subset) -> bool {
        self.elements()
            .all(|s| a.iter().all(|x| a.contains(self.mul(s, x))))
    }

    /// `as ∈ A` for all `s ∈ S`, `a ∈ A`.
    pub fn is_right_ideal(&self, a: Subset) -> bool {
        self.elements()
            .all(|s| a.iter().all(|x| a.contains(self.mul(x, s))))
    }

    pub fn is_ideal(&self, a: Subset) -> bool {
        self.is_left_ideal(a) && self.is_right_ideal(a)
    }

    /// `bsb' ∈ B` for all `b, b' ∈ B`, `s ∈ S`.
    pub fn is_bi_ideal(&self, b: Subset) -> bool {
        b.iter().all(|x| {
            self.elements()
                .all(|s| b.iter().all(|y| b.contains(self.mul(self.mul(x, s), y))))
        })
    }

    /// Every `t` with `t = qs = s'q'` for some `q, q' ∈ Q` lies in `Q`.
    pub fn is_quasi_ideal(&self, q: Subset) -> bool {
        self.elements().all(|t| {
            let in_qs = q
                .iter()
                .any(|x| self.elements().any(|s| self.mul(x, s) == t));
            let in_sq = q
                .iter()
                .any(|x| self.elements().any(|s| self.mul(s, x) == t));
            !(in_qs && in_sq) || q.contains(t)
        })
    }

    pub fn is_idempotent(&self, a: Subset) -> bool {
        self.set_product(a, a) == a
    }

    /// Every `a` has some `x` with `a = axa`.
    pub fn is_regular(&self) -> bool {
        self.elements()
            .all(|a| self.elements().any(|x| self.mul(self.mul(a, x), a) == a))
    }

    fn nonempty_subsets(&self) -> impl Iterator<Item = Subset> {
        Subset::all_nonempty(self.order)
    }

    pub fn right_ideals(&self) -> Vec<Subset> {
        self.nonempty_subsets()
            .filter(|&a| self.is_right_ideal(a))
            .collect()
    }

    pub fn left_ideals(&self) -> Vec<Subset> {
        self.nonempty_subsets()
            .filter(|&a| self.is_left_ideal(a))
            .collect()
    }

    /// First `B` where "bi-ideal" and "`B = CD` for some right ideal `C` and
    /// left ideal `D`" disagree, searched by brute force over all pairs.
    pub fn bi_ideal_factorization_mismatch(&self) -> Option<(Subset, bool, bool)> {
        let rights = self.right_ideals();
        let lefts = self.left_ideals();
        self.nonempty_subsets().find_map(|b| {
            let bi = self.is_bi_ideal(b);
            let factorable = rights
                .iter()
                .any(|&c| lefts.iter().any(|&d| self.set_product(c, d) == b));
            (bi != factorable).then_some((b, bi, factorable))
        })
    }

    /// Right and left ideals all idempotent, and every right×left product a quasi-ideal.
    pub fn ideals_idempotent_and_products_quasi(&self) -> bool {
        let rights = self.right_ideals();
        let lefts = self.left_ideals();
        rights.iter().all(|&a| self.is_idempotent(a))
            && lefts.iter().all(|&b| self.is_idempotent(b))
            && rights.iter().all(|&a| {
                lefts
                    .iter()
                    .all(|&b| self.is_quasi_ideal(self.set_product(a, b)))
            })
    }
}
