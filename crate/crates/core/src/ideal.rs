//! Ideal classes of a hypergroupoid and the ideals generated by a subset.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergroupoid::Hypergroupoid;
use crate::subset::Subset;

/// `H*A ⊆ A`.
pub fn is_left_ideal(h: &Hypergroupoid, a: Subset) -> Result<bool> {
    h.check_operand("left ideal test", a)?;
    Ok(h.product_unchecked(h.full_set(), a).is_subset_of(a))
}

/// `A*H ⊆ A`.
pub fn is_right_ideal(h: &Hypergroupoid, a: Subset) -> Result<bool> {
    h.check_operand("right ideal test", a)?;
    Ok(h.product_unchecked(a, h.full_set()).is_subset_of(a))
}

/// Both a left and a right ideal.
pub fn is_ideal(h: &Hypergroupoid, a: Subset) -> Result<bool> {
    Ok(is_left_ideal(h, a)? && is_right_ideal(h, a)?)
}

/// `B*H*B ⊆ B`. Needs a hypersemigroup so the triple product is well defined.
pub fn is_bi_ideal(h: &Hypergroupoid, b: Subset) -> Result<bool> {
    h.check_operand("bi-ideal test", b)?;
    Ok(h.product_chain(&[b, h.full_set(), b])?.is_subset_of(b))
}

/// `(Q*H) ∩ (H*Q) ⊆ Q`.
pub fn is_quasi_ideal(h: &Hypergroupoid, q: Subset) -> Result<bool> {
    h.check_operand("quasi-ideal test", q)?;
    let full = h.full_set();
    let both = h.product_unchecked(q, full) & h.product_unchecked(full, q);
    Ok(both.is_subset_of(q))
}

/// `A*A = A`.
pub fn is_idempotent(h: &Hypergroupoid, a: Subset) -> Result<bool> {
    h.check_operand("idempotence test", a)?;
    Ok(h.product_unchecked(a, a) == a)
}

/// The right, left and two-sided ideals generated by a seed subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratedIdeals {
    pub seed: Subset,
    /// `R(A) = A ∪ A*H`
    pub right: Subset,
    /// `L(A) = A ∪ H*A`
    pub left: Subset,
    /// `I(A) = A ∪ H*A ∪ A*H ∪ H*A*H`
    pub two_sided: Subset,
}

/// Evaluates the closed formulas for `R(A)`, `L(A)` and `I(A)`.
///
/// The formulas describe the generated ideals only in a hypersemigroup, so
/// non-associative input is rejected.
pub fn generated_ideals(h: &Hypergroupoid, seed: Subset) -> Result<GeneratedIdeals> {
    const OP: &str = "generated ideals";
    h.require_associative(OP)?;
    h.check_operand(OP, seed)?;
    let full = h.full_set();
    let seed_h = h.product_unchecked(seed, full);
    let h_seed = h.product_unchecked(full, seed);
    let h_seed_h = h.product_unchecked(h_seed, full);
    Ok(GeneratedIdeals {
        seed,
        right: seed | seed_h,
        left: seed | h_seed,
        two_sided: seed | h_seed | seed_h | h_seed_h,
    })
}

/// Returns `A ∩ B` for a right ideal `A` and a left ideal `B`; it is always
/// nonempty since it contains `a∘b` for every `a ∈ A`, `b ∈ B`.
pub fn nonempty_intersection_witness(h: &Hypergroupoid, a: Subset, b: Subset) -> Result<Subset> {
    const OP: &str = "right/left ideal intersection";
    if !is_right_ideal(h, a)? {
        return Err(Error::NotInClass {
            operation: OP,
            subset: a,
            class: "right ideal",
        });
    }
    if !is_left_ideal(h, b)? {
        return Err(Error::NotInClass {
            operation: OP,
            subset: b,
            class: "left ideal",
        });
    }
    let meet = a & b;
    assert!(
        !meet.is_empty(),
        "right ideal {a} and left ideal {b} are disjoint"
    );
    Ok(meet)
}

/// Which factor of `C*D` carries the ideal hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    /// `C` is a right ideal, `D` arbitrary.
    Right,
    /// `D` is a left ideal, `C` arbitrary.
    Left,
}

/// `C*D`, which is a bi-ideal whenever `C` is a right ideal or `D` is a left ideal.
pub fn bi_ideal_from_product(
    h: &Hypergroupoid,
    c: Subset,
    d: Subset,
    side: Side,
) -> Result<Subset> {
    const OP: &str = "bi-ideal from product";
    h.require_associative(OP)?;
    h.check_operand(OP, c)?;
    h.check_operand(OP, d)?;
    match side {
        Side::Right if !is_right_ideal(h, c)? => {
            return Err(Error::NotInClass {
                operation: OP,
                subset: c,
                class: "right ideal",
            })
        }
        Side::Left if !is_left_ideal(h, d)? => {
            return Err(Error::NotInClass {
                operation: OP,
                subset: d,
                class: "left ideal",
            })
        }
        _ => {}
    }
    let b = h.product_unchecked(c, d);
    assert!(is_bi_ideal(h, b)?, "{c}*{d} = {b} is not a bi-ideal");
    Ok(b)
}

/// The subset classes that can be quantified over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdealClass {
    Subset,
    Left,
    Right,
    TwoSided,
    Bi,
    Quasi,
}

impl IdealClass {
    pub const ALL: [IdealClass; 6] = [
        IdealClass::Subset,
        IdealClass::Left,
        IdealClass::Right,
        IdealClass::TwoSided,
        IdealClass::Bi,
        IdealClass::Quasi,
    ];

    /// Whether the nonempty subset `a` belongs to this class.
    pub fn contains(self, h: &Hypergroupoid, a: Subset) -> Result<bool> {
        match self {
            IdealClass::Subset => h.check_operand("subset sort", a).map(|_| true),
            IdealClass::Left => is_left_ideal(h, a),
            IdealClass::Right => is_right_ideal(h, a),
            IdealClass::TwoSided => is_ideal(h, a),
            IdealClass::Bi => is_bi_ideal(h, a),
            IdealClass::Quasi => is_quasi_ideal(h, a),
        }
    }

    /// Every nonempty subset of `h` in this class, in ascending mask order.
    pub fn members(self, h: &Hypergroupoid) -> Result<Vec<Subset>> {
        let mut out = Vec::new();
        for a in Subset::all_nonempty(h.order()) {
            if self.contains(h, a)? {
                out.push(a);
            }
        }
        Ok(out)
    }

    /// Keyword used in conjecture text.
    pub fn keyword(self) -> &'static str {
        match self {
            IdealClass::Subset => "subset",
            IdealClass::Left => "left",
            IdealClass::Right => "right",
            IdealClass::TwoSided => "ideal",
            IdealClass::Bi => "bi",
            IdealClass::Quasi => "quasi",
        }
    }
}

impl fmt::Display for IdealClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

impl FromStr for IdealClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        IdealClass::ALL
            .into_iter()
            .find(|c| c.keyword() == s)
            .ok_or_else(|| format!("unknown sort `{s}`"))
    }
}
