use thiserror::Error;

/// Errors raised by the algebra, construction and parsing layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VarCountMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    IndexOutOfRange { index: usize, nvars: usize },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not skew-symmetric")]
    NotSkew,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("Pfaffian needs an even size, got {0}")]
    OddSize(usize),

    #[error("wrong matrix kind: expected {expected}, got {got}")]
    WrongKind { expected: String, got: String },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("function does not vanish at the origin")]
    NotAtOrigin,

    #[error("morphism is only represented through degree {have}, degree {need} requested")]
    InsufficientMorphism { have: usize, need: usize },

    #[error("resource guard: more than {limit} reduction steps")]
    ResourceExhausted { limit: u64 },

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown identifier `{name}` at line {line}, column {column}")]
    UnknownIdentifier {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("symmetry violation at entry ({row}, {col})")]
    SymmetryViolation { row: usize, col: usize },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalog(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
