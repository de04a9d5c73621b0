use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// The first group axiom a candidate Cayley table violates, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupViolation {
    Empty,
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    EntryOutOfRange {
        row: usize,
        column: usize,
        value: usize,
    },
    /// Index 0 is not a two-sided identity; `element` is where it fails.
    Identity {
        element: usize,
    },
    RowNotPermutation {
        row: usize,
    },
    ColumnNotPermutation {
        column: usize,
    },
    Associativity {
        a: usize,
        b: usize,
        c: usize,
    },
    Inverse {
        element: usize,
    },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupViolation::Empty => write!(f, "empty table"),
            GroupViolation::NotSquare { row, len, expected } => {
                write!(f, "row {row} has length {len}, expected {expected}")
            }
            GroupViolation::EntryOutOfRange { row, column, value } => {
                write!(f, "entry ({row},{column}) = {value} is out of range")
            }
            GroupViolation::Identity { element } => {
                write!(f, "index 0 is not an identity (fails at element {element})")
            }
            GroupViolation::RowNotPermutation { row } => {
                write!(f, "row {row} is not a permutation")
            }
            GroupViolation::ColumnNotPermutation { column } => {
                write!(f, "column {column} is not a permutation")
            }
            GroupViolation::Associativity { a, b, c } => {
                write!(f, "associativity fails at ({a},{b},{c})")
            }
            GroupViolation::Inverse { element } => {
                write!(f, "element {element} has no two-sided inverse")
            }
        }
    }
}

/// Which group structure of a brace an error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Operation {
    Add,
    Mul,
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operation::Add => "addition",
            Operation::Mul => "multiplication",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(GroupViolation),
    #[error("{operation} table is not a group: {violation}")]
    NotAGroupIn {
        operation: Operation,
        violation: GroupViolation,
    },
    #[error("no catalog entry for order {order}, index {index}")]
    OutOfCatalog { order: usize, index: usize },
    #[error("order {order} exceeds the configured bound {bound}")]
    BoundExceeded { order: usize, bound: usize },
    #[error("subgroup is not normal: conjugating {x} by {g} leaves it")]
    NotNormal { g: usize, x: usize },
    #[error("not a group action: {0}")]
    NotAnAction(String),
    #[error("tables have different orders ({add} and {mul})")]
    OrderMismatch { add: usize, mul: usize },
    #[error("identity mismatch: additive identity {add}, multiplicative identity {mul:?}")]
    IdentityMismatch { add: usize, mul: Option<usize> },
    #[error("skew distributivity fails at a={a}, b={b}, c={c}")]
    DistributivityFailure { a: usize, b: usize, c: usize },
    #[error("brace identity violated: {0}")]
    LambdaFailure(String),
    #[error("set is not an ideal (witness element {witness})")]
    NotAnIdeal { witness: usize },
    #[error("additive and multiplicative cosets differ at element {element}")]
    CosetMismatch { element: usize },
    #[error("set is neither an additive nor a multiplicative subgroup")]
    NotASubgroup,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("construction check failed: {0}")]
    ConstructionCheck(String),
    #[error("{0} does not lie in the domain")]
    DomainViolation(String),
    #[error("invalid rational brace parameters: {0}")]
    InvalidSpec(String),
    #[error("bad prime {prime}: {reason}")]
    BadPrime { prime: u64, reason: String },
    #[error("malformed solution: {0}")]
    MalformedSolution(String),
    #[error("degenerate solution: {side} map at {x} is not a bijection")]
    Degenerate { side: &'static str, x: usize },
    #[error("braid relation fails at ({x},{y},{z})")]
    BraidFailure { x: usize, y: usize, z: usize },
    #[error("retraction is not well defined at ({x},{y})")]
    IllDefinedRetraction { x: usize, y: usize },
}
