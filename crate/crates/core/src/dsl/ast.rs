use std::fmt;

use crate::ideal::IdealClass;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    /// The whole carrier, written `H`.
    Full,
    Product(Box<Term>, Box<Term>),
    Union(Box<Term>, Box<Term>),
    Intersection(Box<Term>, Box<Term>),
    /// `R(t)`, the right ideal generated by `t`.
    RightIdeal(Box<Term>),
    /// `L(t)`
    LeftIdeal(Box<Term>),
    /// `I(t)`
    TwoSidedIdeal(Box<Term>),
}

impl Term {
    pub fn var(name: &str) -> Term {
        Term::Var(name.to_string())
    }

    pub fn product(a: Term, b: Term) -> Term {
        Term::Product(Box::new(a), Box::new(b))
    }

    pub fn union(a: Term, b: Term) -> Term {
        Term::Union(Box::new(a), Box::new(b))
    }

    pub fn intersection(a: Term, b: Term) -> Term {
        Term::Intersection(Box::new(a), Box::new(b))
    }

    /// Binding strength for printing: higher binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Term::Union(..) => 1,
            Term::Intersection(..) => 2,
            Term::Product(..) => 3,
            _ => 4,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.precedence();
        if p < min {
            f.write_str("(")?;
        }
        match self {
            Term::Var(v) => f.write_str(v)?,
            Term::Full => f.write_str("H")?,
            Term::Product(a, b) => {
                a.write_at(f, p)?;
                f.write_str("*")?;
                b.write_at(f, p + 1)?;
            }
            Term::Intersection(a, b) => {
                a.write_at(f, p)?;
                f.write_str(" &cap ")?;
                b.write_at(f, p + 1)?;
            }
            Term::Union(a, b) => {
                a.write_at(f, p)?;
                f.write_str(" &cup ")?;
                b.write_at(f, p + 1)?;
            }
            Term::RightIdeal(t) => write!(f, "R({t})")?,
            Term::LeftIdeal(t) => write!(f, "L({t})")?,
            Term::TwoSidedIdeal(t) => write!(f, "I({t})")?,
        }
        if p < min {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `<=`
    Subset,
    /// `=`
    Equal,
}

impl Relation {
    pub fn holds(self, lhs: crate::Subset, rhs: crate::Subset) -> bool {
        match self {
            Relation::Subset => lhs.is_subset_of(rhs),
            Relation::Equal => lhs == rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Subset => "<=",
            Relation::Equal => "=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom {
        lhs: Term,
        relation: Relation,
        rhs: Term,
    },
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(lhs: Term, relation: Relation, rhs: Term) -> Formula {
        Formula::Atom { lhs, relation, rhs }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::Not(..) => 3,
            Formula::Atom { .. } => 4,
        }
    }

    /// Atoms in left-to-right order.
    pub fn atoms(&self) -> Vec<(&Term, Relation, &Term)> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<(&'a Term, Relation, &'a Term)>) {
        match self {
            Formula::Atom { lhs, relation, rhs } => out.push((lhs, *relation, rhs)),
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let p = self.precedence();
        if p < min {
            f.write_str("(")?;
        }
        match self {
            Formula::Atom { lhs, relation, rhs } => write!(f, "{lhs} {relation} {rhs}")?,
            Formula::Not(inner) => {
                f.write_str("!")?;
                inner.write_at(f, p)?;
            }
            Formula::And(a, b) => {
                a.write_at(f, p)?;
                f.write_str(" & ")?;
                b.write_at(f, p + 1)?;
            }
            Formula::Or(a, b) => {
                a.write_at(f, p)?;
                f.write_str(" | ")?;
                b.write_at(f, p + 1)?;
            }
        }
        if p < min {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Binder {
    pub name: String,
    pub sort: IdealClass,
}

/// `forall v1:sort1, v2:sort2 : body`
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Conjecture {
    pub binders: Vec<Binder>,
    pub body: Formula,
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("forall ")?;
        for (i, b) in self.binders.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}", b.name, b.sort)?;
        }
        write!(f, " : {}", self.body)
    }
}
