use thiserror::Error;

use crate::hypergroupoid::AssociativityWitness;
use crate::subset::{Subset, ORDER_CAP};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("order must be between 1 and {ORDER_CAP}, got {0}")]
    InvalidOrder(usize),

    #[error("table of order {order} needs {expected} cells, got {found}")]
    TableSize {
        order: usize,
        expected: usize,
        found: usize,
    },

    #[error("cell ({a},{b}) is empty")]
    EmptyCell { a: usize, b: usize },

    #[error("cell ({a},{b}) = {cell} has elements outside order {order}")]
    CellOutOfRange {
        a: usize,
        b: usize,
        cell: Subset,
        order: usize,
    },

    #[error("subset {subset} has elements outside order {order}")]
    SubsetOutOfRange { subset: Subset, order: usize },

    #[error("{operation}: operand must be a nonempty subset")]
    EmptyOperand { operation: &'static str },

    #[error("{operation}: product chain must have at least one factor")]
    EmptyChain { operation: &'static str },

    #[error("{operation} requires a hypersemigroup; associativity fails at {witness}")]
    NotAssociative {
        operation: &'static str,
        witness: AssociativityWitness,
    },

    #[error(
        "{operation} requires a regular hypersemigroup; element {element} is not in {{x}}*H*{{x}}"
    )]
    NotRegular {
        operation: &'static str,
        element: usize,
    },

    #[error("{operation}: {subset} is not a {class}")]
    NotInClass {
        operation: &'static str,
        subset: Subset,
        class: &'static str,
    },

    #[error("{operation} requires every cell to be a singleton")]
    NotSingletonCelled { operation: &'static str },

    #[error("{operation} requires a regular semigroup")]
    NotRegularSemigroup { operation: &'static str },

    #[error("invalid enumeration spec: {0}")]
    InvalidSpec(String),
}
