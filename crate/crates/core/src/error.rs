use thiserror::Error;

use crate::ribbon::Label;

/// A problem found while reading one of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    /// 1-based line number of the offending record.
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed input: {0}")]
    Syntax(String),
    #[error("label {label} appears {count} times, expected exactly 2")]
    LabelCount { label: Label, count: usize },
    #[error("label {label} is outside 1..={max}")]
    LabelOutOfRange { label: Label, max: usize },
    #[error("vertex {vertex} is outside 1..={max}")]
    VertexOutOfRange { vertex: usize, max: usize },
    #[error("edge {0}-{1} is listed twice")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0} is not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("empty rotation is only allowed for the empty bouquet")]
    EmptyRotation,
    #[error("input contains no records")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("graph must be connected")]
    Disconnected,
    #[error("edge label {0} is not present")]
    UnknownLabel(Label),
    #[error("vertex {0} is not present")]
    UnknownVertex(usize),
    #[error("edge {0} is a loop and cannot be contracted")]
    LoopEdge(Label),
    #[error("chords {0} and {1} are not adjacent")]
    NotAdjacent(Label, Label),
    #[error("a pair of distinct elements is required, got {0} twice")]
    SamePair(usize),
    #[error("not a spanning tree: {0}")]
    NotATree(String),
    #[error("expected a bouquet (one vertex), got {0} vertices")]
    NotABouquet(usize),
    #[error("at least {required} vertices required, got {found}")]
    TooFewVertices { required: usize, found: usize },
    #[error("{size} exceeds the configured cap of {cap}; raise the cap to proceed")]
    CapExceeded { size: usize, cap: usize },
    #[error("label {0} exceeds the supported maximum of {max}", max = crate::ribbon::MAX_LABEL)]
    LabelTooLarge(Label),
    #[error("invalid ribbon graph: {0}")]
    InvalidGraph(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
