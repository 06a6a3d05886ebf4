use std::fmt;

use crate::presentation::Gen;

/// Syntax error in a graph file or a word, with a 1-based position.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// A graph description that does not define an even Artin group.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ValidationError {
    #[error("invalid identifier `{0}`")]
    InvalidId(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UndeclaredVertex(String),
    #[error("self-edge at `{0}`")]
    SelfEdge(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("edge {0}-{1}: label {2} < 2")]
    LabelTooSmall(String, String, u64),
    #[error("edge {0}-{1}: odd label {2}")]
    OddLabel(String, String, u64),
    #[error("label {0} out of range")]
    LabelTooLarge(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("generator `{0}` is not allowed here")]
    LetterOutsideAlphabet(String),
    #[error("graph is not of FC type: triangle {}", Triangle(.0))]
    NotFc([Gen; 3]),
    #[error("decomposition invariant violated: {0}")]
    Decomposition(String),
    #[error("label {0} is not an even integer >= 2")]
    BadLabel(u64),
    #[error("{0} and {1} are not linked (m = ∞)")]
    Unlinked(String, String),
    #[error("element is not in the kernel of the retraction onto the link")]
    NotInKernel,
    #[error("element is not in A_L1·T0")]
    NotInProduct,
    #[error("max degree {requested} exceeds the configured bound {max}")]
    DegreeBound { requested: usize, max: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

struct Triangle<'a>(&'a [Gen; 3]);

impl fmt::Display for Triangle<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
