//! Regularity and checkers for the bi-ideal and quasi-ideal characterizations
//! of regular hypersemigroups.
//!
//! Every checker evaluates each side of a statement on its own and reports
//! the first violating subsets (ascending mask order) instead of trusting the
//! statement.

use std::fmt;

use crate::error::{Error, Result};
use crate::hypergroupoid::Hypergroupoid;
use crate::ideal::{generated_ideals, is_bi_ideal, is_quasi_ideal, IdealClass, Side};
use crate::semigroup::Magma;
use crate::subset::Subset;

/// Outcome of the element-wise regularity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegularityEvidence {
    /// `witnesses[x]` is the least `h` with `x ∈ {x}*{h}*{x}`.
    Regular { witnesses: Vec<usize> },
    /// The least element `x` with `x ∉ {x}*H*{x}`.
    Irregular { element: usize },
}

impl RegularityEvidence {
    pub fn is_regular(&self) -> bool {
        matches!(self, RegularityEvidence::Regular { .. })
    }

    /// Re-derives the evidence through [`Hypergroupoid::product_chain`].
    pub fn replay(&self, h: &Hypergroupoid) -> Result<bool> {
        match self {
            RegularityEvidence::Regular { witnesses } => {
                if witnesses.len() != h.order() {
                    return Ok(false);
                }
                for (x, &w) in witnesses.iter().enumerate() {
                    let sx = Subset::singleton(x);
                    if w >= h.order()
                        || !h
                            .product_chain(&[sx, Subset::singleton(w), sx])?
                            .contains(x)
                    {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            &RegularityEvidence::Irregular { element } => {
                if element >= h.order() {
                    return Ok(false);
                }
                let sx = Subset::singleton(element);
                Ok(!h.product_chain(&[sx, h.full_set(), sx])?.contains(element))
            }
        }
    }
}

/// Decides regularity (`A ⊆ A*H*A` for every nonempty `A`) by checking
/// singletons only: by monotonicity of `*` that is equivalent.
pub fn is_regular(h: &Hypergroupoid) -> Result<RegularityEvidence> {
    h.require_associative("regularity test")?;
    let mut witnesses = Vec::with_capacity(h.order());
    for x in 0..h.order() {
        let sx = Subset::singleton(x);
        let left = h.product_unchecked(sx, h.full_set());
        if !h.product_unchecked(left, sx).contains(x) {
            return Ok(RegularityEvidence::Irregular { element: x });
        }
        let w = (0..h.order())
            .find(|&w| {
                let xw = h.product_unchecked(sx, Subset::singleton(w));
                h.product_unchecked(xw, sx).contains(x)
            })
            .expect("x ∈ {x}*H*{x} = ⋃ {x}*{h}*{x}");
        witnesses.push(w);
    }
    Ok(RegularityEvidence::Regular { witnesses })
}

fn require_regular(h: &Hypergroupoid, operation: &'static str) -> Result<Vec<usize>> {
    h.require_associative(operation)?;
    match is_regular(h)? {
        RegularityEvidence::Regular { witnesses } => Ok(witnesses),
        RegularityEvidence::Irregular { element } => Err(Error::NotRegular { operation, element }),
    }
}

/// The ordinary semigroup behind a singleton-celled table, if there is one.
pub fn as_semigroup(h: &Hypergroupoid) -> Option<Magma> {
    if !h.is_singleton_celled() {
        return None;
    }
    let table = h
        .cells()
        .iter()
        .map(|c| c.max_element().expect("cells are nonempty"))
        .collect();
    Some(Magma::new(h.order(), table).expect("table already validated"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `C*D` is a bi-ideal when `C` is a right ideal or `D` a left ideal.
    Prop7,
    /// A right ideal meets every left ideal.
    Lemma11,
    /// In a regular hypersemigroup every bi-ideal is `R(B)*L(B)`.
    Thm8,
    /// In a regular hypersemigroup the bi-ideals are exactly the right×left products.
    Thm9,
    /// Regular ⟺ one-sided ideals idempotent and right×left products quasi-ideals.
    Thm12,
    /// Semigroup form of `Thm9`.
    Cor13,
    /// Semigroup form of `Thm12`.
    Cor14,
}

impl Theorem {
    pub fn tag(self) -> &'static str {
        match self {
            Theorem::Prop7 => "prop7",
            Theorem::Lemma11 => "lemma11",
            Theorem::Thm8 => "thm8",
            Theorem::Thm9 => "thm9",
            Theorem::Thm12 => "thm12",
            Theorem::Cor13 => "cor13",
            Theorem::Cor14 => "cor14",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A concrete failure found by a checker. Each variant carries enough
/// subsets to recompute the failure from scratch.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Bi-ideal `B` of a regular structure with `B*H*B ≠ B`.
    SandwichMismatch { b: Subset, sandwich: Subset },
    /// Bi-ideal `B` with `B*B ⊄ B`.
    SquareEscapes { b: Subset, square: Subset },
    /// Bi-ideal `B` with `R(B)*L(B) ≠ B`.
    NotGeneratedProduct {
        b: Subset,
        right: Subset,
        left: Subset,
        product: Subset,
    },
    /// `C*D` is not a bi-ideal although `side` says it should be.
    ProductNotBiIdeal {
        c: Subset,
        d: Subset,
        side: Side,
        product: Subset,
    },
    /// Right ideal `a` and left ideal `b` with `x∘y ⊄ a∩b` for `x∈a`, `y∈b`
    /// (in particular when `a∩b` is empty).
    CellEscapesIntersection {
        a: Subset,
        b: Subset,
        x: usize,
        y: usize,
    },
    /// A one-sided ideal that is not idempotent.
    NotIdempotent {
        side: Side,
        ideal: Subset,
        square: Subset,
    },
    /// Right ideal `a`, left ideal `b` with `a*b` not a quasi-ideal.
    ProductNotQuasi {
        a: Subset,
        b: Subset,
        product: Subset,
    },
    /// Regular structure with right ideal `a`, left ideal `b` and `a*b ≠ a∩b`.
    ProductNotIntersection {
        a: Subset,
        b: Subset,
        product: Subset,
    },
    /// Irregular structure in which all the ideal conditions hold.
    IrregularUnderIdealConditions { element: usize },
    /// Semigroup subset where "bi-ideal" and "right·left product" disagree.
    BiIdealFactorMismatch {
        b: Subset,
        bi_ideal: bool,
        factorable: bool,
    },
    /// Semigroup where regularity and the ideal conditions disagree.
    RegularityMismatch { regular: bool, conditions: bool },
}

impl Violation {
    /// Named subsets involved in the violation.
    pub fn subsets(&self) -> Vec<(&'static str, Subset)> {
        use Violation::*;
        match *self {
            SandwichMismatch { b, sandwich } => vec![("B", b), ("B*H*B", sandwich)],
            SquareEscapes { b, square } => vec![("B", b), ("B*B", square)],
            NotGeneratedProduct {
                b,
                right,
                left,
                product,
            } => vec![
                ("B", b),
                ("R(B)", right),
                ("L(B)", left),
                ("R(B)*L(B)", product),
            ],
            ProductNotBiIdeal { c, d, product, .. } => vec![("C", c), ("D", d), ("C*D", product)],
            CellEscapesIntersection { a, b, .. } => vec![("A", a), ("B", b), ("A∩B", a & b)],
            NotIdempotent { ideal, square, .. } => vec![("A", ideal), ("A*A", square)],
            ProductNotQuasi { a, b, product } | ProductNotIntersection { a, b, product } => {
                vec![("A", a), ("B", b), ("A*B", product)]
            }
            BiIdealFactorMismatch { b, .. } => vec![("B", b)],
            IrregularUnderIdealConditions { .. } | RegularityMismatch { .. } => vec![],
        }
    }

    /// Recomputes the failure on `h`; true iff it is still a failure.
    pub fn replays(&self, h: &Hypergroupoid) -> Result<bool> {
        use Violation::*;
        let full = h.full_set();
        Ok(match *self {
            SandwichMismatch { b, .. } => {
                is_bi_ideal(h, b)? && h.product_chain(&[b, full, b])? != b
            }
            SquareEscapes { b, .. } => is_bi_ideal(h, b)? && !h.product(b, b)?.is_subset_of(b),
            NotGeneratedProduct { b, .. } => {
                let g = generated_ideals(h, b)?;
                is_bi_ideal(h, b)? && h.product(g.right, g.left)? != b
            }
            ProductNotBiIdeal { c, d, side, .. } => {
                let hyp = match side {
                    Side::Right => IdealClass::Right.contains(h, c)?,
                    Side::Left => IdealClass::Left.contains(h, d)?,
                };
                hyp && !is_bi_ideal(h, h.product(c, d)?)?
            }
            CellEscapesIntersection { a, b, x, y } => {
                IdealClass::Right.contains(h, a)?
                    && IdealClass::Left.contains(h, b)?
                    && a.contains(x)
                    && b.contains(y)
                    && !h.cell(x, y).is_subset_of(a & b)
            }
            NotIdempotent { side, ideal, .. } => {
                let class = match side {
                    Side::Right => IdealClass::Right,
                    Side::Left => IdealClass::Left,
                };
                is_regular(h)?.is_regular()
                    && class.contains(h, ideal)?
                    && h.product(ideal, ideal)? != ideal
            }
            ProductNotQuasi { a, b, .. } => {
                is_regular(h)?.is_regular()
                    && IdealClass::Right.contains(h, a)?
                    && IdealClass::Left.contains(h, b)?
                    && !is_quasi_ideal(h, h.product(a, b)?)?
            }
            ProductNotIntersection { a, b, .. } => {
                is_regular(h)?.is_regular()
                    && IdealClass::Right.contains(h, a)?
                    && IdealClass::Left.contains(h, b)?
                    && h.product(a, b)? != (a & b)
            }
            IrregularUnderIdealConditions { element } => {
                is_regular(h)? == RegularityEvidence::Irregular { element }
                    && ideal_condition_failure(h)?.is_none()
            }
            BiIdealFactorMismatch { b, .. } => match as_semigroup(h) {
                Some(m) => m.bi_ideal_factorization_mismatch().map(|t| t.0) == Some(b),
                None => false,
            },
            RegularityMismatch { .. } => match as_semigroup(h) {
                Some(m) => m.is_regular() != m.ideals_idempotent_and_products_quasi(),
                None => false,
            },
        })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            SandwichMismatch { b, sandwich } => write!(f, "bi-ideal B={b} has B*H*B={sandwich}"),
            SquareEscapes { b, square } => write!(f, "bi-ideal B={b} has B*B={square} ⊄ B"),
            NotGeneratedProduct {
                b,
                right,
                left,
                product,
            } => write!(f, "bi-ideal B={b}: R(B)*L(B)={right}*{left}={product} ≠ B"),
            ProductNotBiIdeal {
                c,
                d,
                side,
                product,
            } => {
                let which = match side {
                    Side::Right => "right ideal C",
                    Side::Left => "left ideal D",
                };
                write!(f, "C={c}, D={d} ({which}): C*D={product} is not a bi-ideal")
            }
            CellEscapesIntersection { a, b, x, y } => write!(
                f,
                "right ideal A={a}, left ideal B={b}: {x}∘{y} ⊄ A∩B={}",
                *a & *b
            ),
            NotIdempotent {
                side,
                ideal,
                square,
            } => {
                let which = match side {
                    Side::Right => "right",
                    Side::Left => "left",
                };
                write!(f, "{which} ideal {ideal} has square {square}")
            }
            ProductNotQuasi { a, b, product } => write!(
                f,
                "right ideal A={a}, left ideal B={b}: A*B={product} is not a quasi-ideal"
            ),
            ProductNotIntersection { a, b, product } => write!(
                f,
                "right ideal A={a}, left ideal B={b}: A*B={product} ≠ A∩B={}",
                *a & *b
            ),
            IrregularUnderIdealConditions { element } => write!(
                f,
                "element {element} ∉ {{x}}*H*{{x}} although every ideal condition holds"
            ),
            BiIdealFactorMismatch {
                b,
                bi_ideal,
                factorable,
            } => write!(
                f,
                "B={b}: bi-ideal={bi_ideal}, right·left product={factorable}"
            ),
            RegularityMismatch {
                regular,
                conditions,
            } => write!(f, "regular={regular}, ideal conditions={conditions}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub structure: Hypergroupoid,
    pub violation: Violation,
}

impl Witness {
    pub fn replays(&self) -> Result<bool> {
        self.violation.replays(&self.structure)
    }
}

/// One named sub-statement of a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub holds: bool,
    /// Number of subset instances examined.
    pub instances: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub holds: bool,
    pub summary: String,
    pub checks: Vec<Check>,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    fn from_checks(
        theorem: Theorem,
        h: &Hypergroupoid,
        checks: Vec<Check>,
        violation: Option<Violation>,
        summary: String,
    ) -> Self {
        let holds = checks.iter().all(|c| c.holds);
        debug_assert_eq!(holds, violation.is_none());
        VerificationReport {
            theorem,
            holds,
            summary,
            checks,
            witness: violation.map(|violation| Witness {
                structure: h.clone(),
                violation,
            }),
        }
    }
}

fn first_violation<I, F>(iter: I, mut f: F) -> (usize, Option<Violation>)
where
    I: IntoIterator,
    F: FnMut(I::Item) -> Option<Violation>,
{
    let mut n = 0;
    for item in iter {
        n += 1;
        if let Some(v) = f(item) {
            return (n, Some(v));
        }
    }
    (n, None)
}

fn simple_summary(holds: bool, violation: &Option<Violation>) -> String {
    match violation {
        None if holds => "holds".to_string(),
        None => "fails".to_string(),
        Some(v) => format!("fails: {v}"),
    }
}

/// Checks that every product `C*D` of a right ideal with any `D`, and of any
/// `C` with a left ideal `D`, is a bi-ideal.
pub fn verify_prop7(h: &Hypergroupoid) -> Result<VerificationReport> {
    h.require_associative("proposition check")?;
    let rights = IdealClass::Right.members(h)?;
    let lefts = IdealClass::Left.members(h)?;
    let all: Vec<Subset> = Subset::all_nonempty(h.order()).collect();

    let pairs_right = rights
        .iter()
        .flat_map(|&c| all.iter().map(move |&d| (c, d)));
    let (n_right, v_right) = first_violation(pairs_right, |(c, d)| {
        product_bi_violation(h, c, d, Side::Right)
    });
    let pairs_left = all.iter().flat_map(|&c| lefts.iter().map(move |&d| (c, d)));
    let (n_left, v_left) = first_violation(pairs_left, |(c, d)| {
        product_bi_violation(h, c, d, Side::Left)
    });

    let checks = vec![
        Check {
            name: "right ideal * subset is a bi-ideal",
            holds: v_right.is_none(),
            instances: n_right,
        },
        Check {
            name: "subset * left ideal is a bi-ideal",
            holds: v_left.is_none(),
            instances: n_left,
        },
    ];
    let violation = v_right.or(v_left);
    let summary = simple_summary(violation.is_none(), &violation);
    Ok(VerificationReport::from_checks(
        Theorem::Prop7,
        h,
        checks,
        violation,
        summary,
    ))
}

fn product_bi_violation(h: &Hypergroupoid, c: Subset, d: Subset, side: Side) -> Option<Violation> {
    let product = h.product_unchecked(c, d);
    let sandwich = h.product_unchecked(h.product_unchecked(product, h.full_set()), product);
    (!sandwich.is_subset_of(product)).then_some(Violation::ProductNotBiIdeal {
        c,
        d,
        side,
        product,
    })
}

/// Checks that every right ideal `A` and left ideal `B` satisfy
/// `a∘b ⊆ A∩B` for all `a∈A`, `b∈B`, so `A∩B` is nonempty.
pub fn verify_lemma11(h: &Hypergroupoid) -> Result<VerificationReport> {
    let rights = IdealClass::Right.members(h)?;
    let lefts = IdealClass::Left.members(h)?;
    let pairs = rights
        .iter()
        .flat_map(|&a| lefts.iter().map(move |&b| (a, b)));
    let (n, violation) = first_violation(pairs, |(a, b)| {
        let meet = a & b;
        a.iter()
            .flat_map(|x| b.iter().map(move |y| (x, y)))
            .find(|&(x, y)| meet.is_empty() || !h.cell(x, y).is_subset_of(meet))
            .map(|(x, y)| Violation::CellEscapesIntersection { a, b, x, y })
    });
    let checks = vec![Check {
        name: "right ideal ∩ left ideal contains every a∘b",
        holds: violation.is_none(),
        instances: n,
    }];
    let summary = simple_summary(violation.is_none(), &violation);
    Ok(VerificationReport::from_checks(
        Theorem::Lemma11,
        h,
        checks,
        violation,
        summary,
    ))
}

fn factorization_checks(h: &Hypergroupoid) -> Result<(Vec<Check>, Option<Violation>)> {
    let full = h.full_set();
    let mut first: Option<Violation> = None;
    let mut sandwich_ok = (0, true);
    let mut square_ok = (0, true);
    let mut product_ok = (0, true);
    for b in IdealClass::Bi.members(h)? {
        let sandwich = h.product_chain(&[b, full, b])?;
        sandwich_ok.0 += 1;
        if sandwich != b {
            sandwich_ok.1 = false;
            first.get_or_insert(Violation::SandwichMismatch { b, sandwich });
        }
        let square = h.product_unchecked(b, b);
        square_ok.0 += 1;
        if !square.is_subset_of(b) {
            square_ok.1 = false;
            first.get_or_insert(Violation::SquareEscapes { b, square });
        }
        let g = generated_ideals(h, b)?;
        let product = h.product(g.right, g.left)?;
        product_ok.0 += 1;
        if product != b {
            product_ok.1 = false;
            first.get_or_insert(Violation::NotGeneratedProduct {
                b,
                right: g.right,
                left: g.left,
                product,
            });
        }
    }
    let checks = vec![
        Check {
            name: "B = B*H*B",
            holds: sandwich_ok.1,
            instances: sandwich_ok.0,
        },
        Check {
            name: "B*B ⊆ B",
            holds: square_ok.1,
            instances: square_ok.0,
        },
        Check {
            name: "B = R(B)*L(B)",
            holds: product_ok.1,
            instances: product_ok.0,
        },
    ];
    Ok((checks, first))
}

/// For every bi-ideal `B` of a regular hypersemigroup, checks
/// `B = R(B)*L(B)` along with `B = B*H*B` and `B*B ⊆ B`.
pub fn verify_theorem8(h: &Hypergroupoid) -> Result<VerificationReport> {
    require_regular(h, "bi-ideal factorization check")?;
    let (checks, violation) = factorization_checks(h)?;
    let summary = simple_summary(violation.is_none(), &violation);
    Ok(VerificationReport::from_checks(
        Theorem::Thm8,
        h,
        checks,
        violation,
        summary,
    ))
}

/// Both directions of the bi-ideal characterization on a regular hypersemigroup:
/// every right×left product is a bi-ideal, and every bi-ideal is one.
pub fn verify_theorem9(h: &Hypergroupoid) -> Result<VerificationReport> {
    require_regular(h, "bi-ideal characterization check")?;
    let rights = IdealClass::Right.members(h)?;
    let lefts = IdealClass::Left.members(h)?;
    let pairs = rights
        .iter()
        .flat_map(|&c| lefts.iter().map(move |&d| (c, d)));
    let (n, if_violation) =
        first_violation(pairs, |(c, d)| product_bi_violation(h, c, d, Side::Right));
    let (thm8, only_if_violation) = factorization_checks(h)?;
    let checks = vec![
        Check {
            name: "right ideal * left ideal is a bi-ideal",
            holds: if_violation.is_none(),
            instances: n,
        },
        Check {
            name: "every bi-ideal is R(B)*L(B)",
            holds: thm8.iter().all(|c| c.holds),
            instances: thm8.iter().map(|c| c.instances).max().unwrap_or(0),
        },
    ];
    let violation = if_violation.or(only_if_violation);
    let summary = simple_summary(violation.is_none(), &violation);
    Ok(VerificationReport::from_checks(
        Theorem::Thm9,
        h,
        checks,
        violation,
        summary,
    ))
}

/// First failure of "right and left ideals idempotent, right×left products quasi-ideals".
fn ideal_condition_failure(h: &Hypergroupoid) -> Result<Option<Violation>> {
    let rights = IdealClass::Right.members(h)?;
    let lefts = IdealClass::Left.members(h)?;
    for (side, ideals) in [(Side::Right, &rights), (Side::Left, &lefts)] {
        for &ideal in ideals {
            let square = h.product_unchecked(ideal, ideal);
            if square != ideal {
                return Ok(Some(Violation::NotIdempotent {
                    side,
                    ideal,
                    square,
                }));
            }
        }
    }
    for &a in &rights {
        for &b in &lefts {
            let product = h.product_unchecked(a, b);
            if !is_quasi_ideal(h, product)? {
                return Ok(Some(Violation::ProductNotQuasi { a, b, product }));
            }
        }
    }
    Ok(None)
}

/// Computes regularity and the ideal conditions independently and checks
/// they agree; on regular structures also checks `A*B = A∩B` for every
/// right ideal `A` and left ideal `B`.
pub fn verify_theorem12(h: &Hypergroupoid) -> Result<VerificationReport> {
    h.require_associative("regularity characterization check")?;
    let evidence = is_regular(h)?;
    let regular = evidence.is_regular();
    let condition_failure = ideal_condition_failure(h)?;
    let conditions = condition_failure.is_none();

    let rights = IdealClass::Right.members(h)?;
    let lefts = IdealClass::Left.members(h)?;
    let (n_pairs, meet_violation) = if regular {
        let pairs = rights
            .iter()
            .flat_map(|&a| lefts.iter().map(move |&b| (a, b)));
        first_violation(pairs, |(a, b)| {
            let product = h.product_unchecked(a, b);
            (product != (a & b)).then_some(Violation::ProductNotIntersection { a, b, product })
        })
    } else {
        (0, None)
    };

    let forward = !regular || conditions;
    let backward = !conditions || regular;
    let checks = vec![
        Check {
            name: "regular ⟹ ideal conditions",
            holds: forward,
            instances: 1,
        },
        Check {
            name: "ideal conditions ⟹ regular",
            holds: backward,
            instances: 1,
        },
        Check {
            name: "regular ⟹ A*B = A∩B",
            holds: meet_violation.is_none(),
            instances: n_pairs,
        },
    ];
    let violation = if !forward {
        condition_failure
    } else if !backward {
        match evidence {
            RegularityEvidence::Irregular { element } => {
                Some(Violation::IrregularUnderIdealConditions { element })
            }
            RegularityEvidence::Regular { .. } => {
                unreachable!("backward fails only when irregular")
            }
        }
    } else {
        meet_violation
    };
    let side = |b: bool| if b { "true" } else { "false" };
    let summary = if forward && backward {
        let both = if regular {
            "both sides true"
        } else {
            "both sides false"
        };
        match &violation {
            None => format!("equivalence holds: {both}"),
            Some(v) => format!("equivalence holds: {both}; but {v}"),
        }
    } else {
        format!(
            "equivalence fails: regular={}, ideal conditions={}",
            side(regular),
            side(conditions)
        )
    };
    Ok(VerificationReport::from_checks(
        Theorem::Thm12,
        h,
        checks,
        violation,
        summary,
    ))
}

fn require_semigroup(h: &Hypergroupoid, operation: &'static str) -> Result<Magma> {
    h.require_associative(operation)?;
    as_semigroup(h).ok_or(Error::NotSingletonCelled { operation })
}

/// Semigroup bi-ideal characterization, computed only with element-wise
/// semigroup operations and an exhaustive search for the factorization.
pub fn verify_corollary13(h: &Hypergroupoid) -> Result<VerificationReport> {
    const OP: &str = "semigroup bi-ideal characterization check";
    let m = require_semigroup(h, OP)?;
    if !m.is_regular() {
        return Err(Error::NotRegularSemigroup { operation: OP });
    }
    let violation = m
        .bi_ideal_factorization_mismatch()
        .map(
            |(b, bi_ideal, factorable)| Violation::BiIdealFactorMismatch {
                b,
                bi_ideal,
                factorable,
            },
        );
    let checks = vec![Check {
        name: "bi-ideal ⟺ right ideal · left ideal",
        holds: violation.is_none(),
        instances: Subset::all_nonempty(h.order()).count(),
    }];
    let summary = simple_summary(violation.is_none(), &violation);
    Ok(VerificationReport::from_checks(
        Theorem::Cor13,
        h,
        checks,
        violation,
        summary,
    ))
}

/// Semigroup regularity characterization with element-wise operations.
pub fn verify_corollary14(h: &Hypergroupoid) -> Result<VerificationReport> {
    let m = require_semigroup(h, "semigroup regularity characterization check")?;
    let regular = m.is_regular();
    let conditions = m.ideals_idempotent_and_products_quasi();
    let violation = (regular != conditions).then_some(Violation::RegularityMismatch {
        regular,
        conditions,
    });
    let checks = vec![Check {
        name: "regular ⟺ ideal conditions",
        holds: violation.is_none(),
        instances: 1,
    }];
    let summary = match violation {
        None if regular => "equivalence holds: both sides true".to_string(),
        None => "equivalence holds: both sides false".to_string(),
        Some(ref v) => format!("equivalence fails: {v}"),
    };
    Ok(VerificationReport::from_checks(
        Theorem::Cor14,
        h,
        checks,
        violation,
        summary,
    ))
}
