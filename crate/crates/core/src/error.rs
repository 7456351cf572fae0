use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("unknown built-in graph `{0}`")]
    UnknownBuiltin(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph contains the triangle {{{0}, {1}, {2}}}")]
    Triangle(usize, usize, usize),

    #[error("a limb needs at least two vertices")]
    LimbTooSmall,

    #[error("clique {0:?} is not a state of the automaton")]
    NotAState(Vec<usize>),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("recurrence of order {order} exceeds the state count {bound}")]
    RecurrenceTooLong { order: usize, bound: usize },

    #[error("rational function has a denominator vanishing at 0")]
    SingularDenominator,

    #[error("enumeration budget exceeded: {needed} words requested, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("reversal symmetry violated at length {0}")]
    SymmetryViolation(usize),

    #[error("tree size {0} outside the supported range 1..=20")]
    TreeSizeOutOfRange(usize),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
