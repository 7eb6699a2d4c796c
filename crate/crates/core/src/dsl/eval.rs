use std::fmt;

use super::ast::{Conjecture, Formula, Relation, Term};
use super::DslError;
use crate::error::Error;
use crate::hypergroupoid::Hypergroupoid;
use crate::ideal::generated_ideals;
use crate::subset::Subset;

/// One relation of the body, evaluated under a fixed assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvaluatedRelation {
    pub lhs: Term,
    pub relation: Relation,
    pub rhs: Term,
    pub lhs_value: Subset,
    pub rhs_value: Subset,
    pub holds: bool,
}

impl fmt::Display for EvaluatedRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} {}  ~>  {} {} {}  ({})",
            self.lhs,
            self.relation,
            self.rhs,
            self.lhs_value,
            self.relation,
            self.rhs_value,
            if self.holds { "true" } else { "false" }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub structure: Hypergroupoid,
    /// Values of the bound variables, in binder order.
    pub assignment: Vec<(String, Subset)>,
    /// Every relation of the body evaluated under the assignment.
    pub relations: Vec<EvaluatedRelation>,
}

impl Counterexample {
    /// True iff the assignment is well sorted and still falsifies the body.
    pub fn replays(&self, conjecture: &Conjecture) -> Result<bool, DslError> {
        let h = &self.structure;
        if self.assignment.len() != conjecture.binders.len() {
            return Ok(false);
        }
        for (b, (name, value)) in conjecture.binders.iter().zip(&self.assignment) {
            if *name != b.name || value.is_empty() || !value.fits_order(h.order()) {
                return Ok(false);
            }
            let sorted = b
                .sort
                .contains(h, *value)
                .map_err(|source| DslError::Eval {
                    term: format!("{}:{}", b.name, b.sort),
                    source,
                })?;
            if !sorted {
                return Ok(false);
            }
        }
        let env = Env {
            h,
            assignment: &self.assignment,
        };
        Ok(!env.formula(&conjecture.body)?)
    }
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "structure (order {}): {}",
            self.structure.order(),
            self.structure
        )?;
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(n, s)| format!("{n}={s}"))
            .collect();
        writeln!(f, "assignment: {}", parts.join(", "))?;
        for r in &self.relations {
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// No assignment falsifies the body.
    Holds {
        assignments: u64,
    },
    Refuted(Counterexample),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }

    pub fn counterexample(self) -> Option<Counterexample> {
        match self {
            Verdict::Holds { .. } => None,
            Verdict::Refuted(c) => Some(c),
        }
    }
}

struct Env<'a> {
    h: &'a Hypergroupoid,
    assignment: &'a [(String, Subset)],
}

impl Env<'_> {
    fn fail(term: &Term, source: Error) -> DslError {
        DslError::Eval {
            term: term.to_string(),
            source,
        }
    }

    fn term(&self, t: &Term) -> Result<Subset, DslError> {
        Ok(match t {
            Term::Var(name) => {
                self.assignment
                    .iter()
                    .find(|(n, _)| n == name)
                    .expect("parser rejects unbound variables")
                    .1
            }
            Term::Full => self.h.full_set(),
            Term::Product(a, b) => {
                let (a, b) = (self.term(a)?, self.term(b)?);
                self.h.product(a, b).map_err(|e| Self::fail(t, e))?
            }
            Term::Union(a, b) => self.term(a)? | self.term(b)?,
            Term::Intersection(a, b) => self.term(a)? & self.term(b)?,
            Term::RightIdeal(s) | Term::LeftIdeal(s) | Term::TwoSidedIdeal(s) => {
                let seed = self.term(s)?;
                let g = generated_ideals(self.h, seed).map_err(|e| Self::fail(t, e))?;
                match t {
                    Term::RightIdeal(_) => g.right,
                    Term::LeftIdeal(_) => g.left,
                    _ => g.two_sided,
                }
            }
        })
    }

    /// Evaluates every atom (no short-circuit) so errors surface independently
    /// of connective order.
    fn formula(&self, f: &Formula) -> Result<bool, DslError> {
        Ok(match f {
            Formula::Atom { lhs, relation, rhs } => {
                relation.holds(self.term(lhs)?, self.term(rhs)?)
            }
            Formula::Not(inner) => !self.formula(inner)?,
            Formula::And(a, b) => {
                let (a, b) = (self.formula(a)?, self.formula(b)?);
                a && b
            }
            Formula::Or(a, b) => {
                let (a, b) = (self.formula(a)?, self.formula(b)?);
                a || b
            }
        })
    }

    fn relations(&self, f: &Formula) -> Result<Vec<EvaluatedRelation>, DslError> {
        f.atoms()
            .into_iter()
            .map(|(lhs, relation, rhs)| {
                let (lhs_value, rhs_value) = (self.term(lhs)?, self.term(rhs)?);
                Ok(EvaluatedRelation {
                    lhs: lhs.clone(),
                    relation,
                    rhs: rhs.clone(),
                    lhs_value,
                    rhs_value,
                    holds: relation.holds(lhs_value, rhs_value),
                })
            })
            .collect()
    }
}

/// Checks the conjecture on one structure. Each variable ranges over the
/// nonempty subsets in its sort, in ascending mask order, with the first
/// binder varying slowest; the first falsifying assignment is returned.
pub fn evaluate(h: &Hypergroupoid, conjecture: &Conjecture) -> Result<Verdict, DslError> {
    let mut domains = Vec::with_capacity(conjecture.binders.len());
    for b in &conjecture.binders {
        let members = b.sort.members(h).map_err(|source| DslError::Eval {
            term: format!("{}:{}", b.name, b.sort),
            source,
        })?;
        if members.is_empty() {
            return Ok(Verdict::Holds { assignments: 0 });
        }
        domains.push(members);
    }

    let mut index = vec![0usize; domains.len()];
    let mut assignment: Vec<(String, Subset)> = conjecture
        .binders
        .iter()
        .zip(&domains)
        .map(|(b, d)| (b.name.clone(), d[0]))
        .collect();
    let mut checked = 0u64;
    loop {
        checked += 1;
        let env = Env {
            h,
            assignment: &assignment,
        };
        if !env.formula(&conjecture.body)? {
            let relations = env.relations(&conjecture.body)?;
            return Ok(Verdict::Refuted(Counterexample {
                structure: h.clone(),
                assignment,
                relations,
            }));
        }
        // odometer, last binder fastest
        let mut i = domains.len();
        loop {
            if i == 0 {
                return Ok(Verdict::Holds {
                    assignments: checked,
                });
            }
            i -= 1;
            index[i] += 1;
            if index[i] < domains[i].len() {
                assignment[i].1 = domains[i][index[i]];
                break;
            }
            index[i] = 0;
            assignment[i].1 = domains[i][0];
        }
    }
}
