//! Finite hypersemigroups.
//!
//! A hypergroupoid on `{0, .., n-1}` assigns each pair `(a, b)` a nonempty
//! subset `a∘b`; it induces the product `A*B = ⋃ a∘b` on nonempty subsets.
//! This crate provides that product, the ideal classes built on it
//! (left/right/two-sided ideals, bi-ideals, quasi-ideals), regularity,
//! exhaustive enumeration of small tables, checkers for the bi-ideal and
//! quasi-ideal characterizations of regular hypersemigroups, and a small
//! language for universally quantified conjectures with a counterexample
//! hunter.

pub mod dsl;
pub mod enumerate;
mod error;
pub mod hypergroupoid;
pub mod ideal;
pub mod regularity;
pub mod semigroup;
pub mod structure_file;
pub mod subset;

pub use enumerate::{
    canonical_form, enumerate, enumerate_parallel, enumerate_until, find_first_parallel,
    prune_check, Alphabet, EnumerationSpec, EnumerationStats, Filter, PartialTable,
};
pub use error::{Error, Result};
pub use hypergroupoid::{AssociativityWitness, Hypergroupoid};
pub use ideal::{
    bi_ideal_from_product, generated_ideals, is_bi_ideal, is_ideal, is_idempotent, is_left_ideal,
    is_quasi_ideal, is_right_ideal, nonempty_intersection_witness, GeneratedIdeals, IdealClass,
    Side,
};
pub use regularity::{
    as_semigroup, is_regular, verify_corollary13, verify_corollary14, verify_lemma11, verify_prop7,
    verify_theorem12, verify_theorem8, verify_theorem9, RegularityEvidence, Theorem,
    VerificationReport, Violation, Witness,
};
pub use semigroup::Magma;
pub use subset::{Subset, ORDER_CAP};
