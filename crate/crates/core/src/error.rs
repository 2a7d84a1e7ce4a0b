use thiserror::Error;

/// Failure while reading a graph or colouring description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number of the offending input line.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("pattern graph has no edges")]
    EmptyPattern,
    #[error("colour count must be at least 1")]
    ZeroColours,
    #[error("expected {expected} class sizes, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("class sizes must be positive")]
    ZeroClassSize,
    #[error("blowup base does not match the pattern graph")]
    BaseMismatch,
    #[error("edge {0}-{1} is not allowed in this blowup")]
    ForeignEdge(usize, usize),
    #[error("{0}-{1} is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("the host graph contains no copy of the pattern")]
    NoCopies,
    #[error("exhaustive search supports at most {max} host vertices, got {actual}")]
    HostTooLarge { max: usize, actual: usize },
    #[error("G does not arrow H; constant undefined")]
    DoesNotArrow,
    #[error("robustness could not be computed exactly within the node budget")]
    BudgetExhausted,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no monochromatic canonical copy of the pattern (max count found: {max_found})")]
    NoMonochromaticCopy { max_found: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
