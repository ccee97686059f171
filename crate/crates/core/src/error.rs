use alloc::string::String;

/// Errors raised by constructors, the parser and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,
    #[error("matrix has {found} entries, expected {expected}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("matrix is not regular: {0}")]
    IrregularMatrix(String),
    #[error("matrix entry at row {row}, column {col} refers to group element {entry} but the group has order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        entry: usize,
        order: usize,
    },
    #[error("expected a 0-1 matrix")]
    NotZeroOne,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid element {0}")]
    InvalidElement(String),
    #[error("variable `{0}` has no assignment")]
    MissingAssignment(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("constant {0} is out of range for this semigroup")]
    ConstantOutOfRange(String),
    #[error("the empty word is not a polynomial")]
    EmptyWord,
    #[error("expected a term but found the constant {0}")]
    NotATerm(String),
    #[error("exhaustive search needs {needed} evaluations, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("no fast procedure applies: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("graph is not connected")]
    DisconnectedGraph,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("witness does not certify the verdict: {0}")]
    BadWitness(String),
}

pub type Result<T> = core::result::Result<T, Error>;
