//! A small language of universally quantified conjectures about subsets of a
//! hypersemigroup, and a search for counterexamples over enumerated tables.
//!
//! ```text
//! forall A:right, B:left : A*B <= A &cap B
//! ```
//!
//! Variables are sorted by an ideal class (`subset`, `left`, `right`,
//! `ideal`, `bi`, `quasi`); terms combine them with `*`, `&cap`, `&cup`,
//! the carrier `H` and the generated-ideal operators `R(..)`, `L(..)`,
//! `I(..)`; atoms compare terms with `<=` or `=`; formulas combine atoms
//! with `!`, `&`, `|`.

mod ast;
mod eval;
mod parser;

use std::fmt;

use thiserror::Error;

pub use ast::{Binder, Conjecture, Formula, Relation, Term};
pub use eval::{evaluate, Counterexample, EvaluatedRelation, Verdict};
pub use parser::parse;

use crate::enumerate::{find_first_parallel, Alphabet, EnumerationSpec, EnumerationStats};
use crate::error::Error;
use crate::regularity::is_regular;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("sort error at {line}:{column}: {message}")]
    Sort {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("cannot evaluate `{term}`: {source}")]
    Eval {
        term: String,
        #[source]
        source: Error,
    },
    #[error(transparent)]
    Enumeration(#[from] Error),
}

/// Which cell alphabet each order is searched with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AlphabetPolicy {
    /// Every nonempty subset at every order.
    Full,
    /// Full alphabet below the given order, singletons plus the full set from it on.
    RestrictFrom(usize),
}

impl AlphabetPolicy {
    pub fn alphabet(self, order: usize) -> Alphabet {
        match self {
            AlphabetPolicy::RestrictFrom(k) if order >= k => Alphabet::singletons_and_full(order),
            _ => Alphabet::AllNonempty,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HuntOptions {
    pub max_order: usize,
    pub alphabet: AlphabetPolicy,
    /// Search one table per isomorphism class.
    pub canonicalize: bool,
    /// Skip structures that are not regular.
    pub regular_only: bool,
}

impl HuntOptions {
    pub fn up_to(max_order: usize) -> Self {
        HuntOptions {
            max_order,
            alphabet: AlphabetPolicy::Full,
            canonicalize: false,
            regular_only: false,
        }
    }
}

/// The enumeration run for one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderRun {
    pub order: usize,
    pub alphabet: Alphabet,
    pub stats: EnumerationStats,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuntReport {
    pub counterexample: Option<Counterexample>,
    pub runs: Vec<OrderRun>,
}

impl HuntReport {
    pub fn exhausted(&self) -> bool {
        self.counterexample.is_none()
    }

    /// Merged statistics over all orders searched.
    pub fn stats(&self) -> EnumerationStats {
        self.runs
            .iter()
            .map(|r| r.stats)
            .fold(EnumerationStats::default(), EnumerationStats::merge)
    }
}

impl fmt::Display for HuntReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.runs {
            writeln!(
                f,
                "order {}: {} associative of {} tables, {} searched ({})",
                r.order,
                r.stats.associative_count,
                r.stats.total_tables,
                r.stats.visited,
                r.alphabet.describe()
            )?;
        }
        match &self.counterexample {
            Some(c) => write!(f, "counterexample found\n{c}"),
            None => writeln!(f, "exhausted: no counterexample"),
        }
    }
}

/// Searches associative tables of order `1..=max_order`, in enumeration
/// order, for the first one on which the conjecture fails.
pub fn hunt(conjecture: &Conjecture, options: &HuntOptions) -> Result<HuntReport, DslError> {
    if options.max_order == 0 {
        return Err(Error::InvalidOrder(0).into());
    }
    let mut runs = Vec::new();
    for order in 1..=options.max_order {
        let alphabet = options.alphabet.alphabet(order);
        let mut spec = EnumerationSpec::new(order)
            .associative_only()
            .with_alphabet(alphabet.clone());
        spec.canonicalize = options.canonicalize;
        let (stats, found) = find_first_parallel(&spec, |h| {
            if options.regular_only && !is_regular(h).map(|e| e.is_regular()).unwrap_or(false) {
                return None;
            }
            match evaluate(h, conjecture) {
                Ok(Verdict::Holds { .. }) => None,
                Ok(Verdict::Refuted(c)) => Some(Ok(c)),
                Err(e) => Some(Err(e)),
            }
        })?;
        runs.push(OrderRun {
            order,
            alphabet,
            stats,
        });
        if let Some(found) = found {
            return Ok(HuntReport {
                counterexample: Some(found?),
                runs,
            });
        }
    }
    Ok(HuntReport {
        counterexample: None,
        runs,
    })
}
