use thiserror::Error;

/// Errors raised by group, module and lemma computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("closure exceeds element bound {bound}")]
    ClosureExceedsBound { bound: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("degree {0} is not supported (must be between 1 and 65536)")]
    UnsupportedDegree(usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("element is not a member of the group")]
    NotAMember,
    #[error("not a subgroup of the given group")]
    NotASubgroup,
    #[error("precondition of {kind} violated: {reason}")]
    KindPreconditionViolated { kind: String, reason: String },
    #[error("{what} exceeds bound {bound}")]
    BoundExceeded { what: String, bound: usize },
    #[error("no subgroup found: {0}")]
    NotFound(String),
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid group specification: {0}")]
    InvalidSpec(String),
    #[error(
        "generator assignment is not a homomorphism at element {element}: {left:?} != {right:?}"
    )]
    NotAHomomorphism {
        element: usize,
        left: Vec<u32>,
        right: Vec<u32>,
    },
    #[error("singular matrix")]
    SingularMatrix,
    #[error("characteristic {p} divides group order {order}")]
    CharacteristicDividesOrder { p: u32, order: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("unknown graph id {0:?}")]
    UnknownGraphId(String),
    #[error("unknown lemma id {0:?}")]
    UnknownLemma(String),
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("semantic error at {line}:{column}: {message}")]
    Semantic {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid element word: {0}")]
    InvalidWord(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable tag used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::ClosureExceedsBound { .. } => "ClosureExceedsBound",
            Error::DegreeMismatch { .. } => "DegreeMismatch",
            Error::UnsupportedDegree(_) => "UnsupportedDegree",
            Error::InvalidPermutation(_) => "InvalidPermutation",
            Error::NotAMember => "NotAMember",
            Error::NotASubgroup => "NotASubgroup",
            Error::KindPreconditionViolated { .. } => "KindPreconditionViolated",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::NotFound(_) => "NotFound",
            Error::InvalidAction(_) => "InvalidAction",
            Error::InvalidSpec(_) => "InvalidSpec",
            Error::NotAHomomorphism { .. } => "NotAHomomorphism",
            Error::SingularMatrix => "SingularMatrix",
            Error::CharacteristicDividesOrder { .. } => "CharacteristicDividesOrder",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::UnknownGraphId(_) => "UnknownGraphId",
            Error::UnknownLemma(_) => "UnknownLemma",
            Error::Syntax { .. } => "SyntaxError",
            Error::Semantic { .. } => "SemanticError",
            Error::InvalidWord(_) => "InvalidWord",
            Error::InvalidInstance(_) => "InvalidInstance",
            Error::Io(_) => "Io",
        }
    }

    pub(crate) fn bound(what: impl Into<String>, bound: usize) -> Self {
        Error::BoundExceeded {
            what: what.into(),
            bound,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
