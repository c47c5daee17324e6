use thiserror::Error;

/// Reasons a graph6 string can be rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed size header")]
    MalformedHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("expected {expected} body bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits in the last byte are not zero")]
    TrailingBits,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6: {0}")]
    Graph6(#[from] Graph6Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("class count mismatch: expected {expected}, found {found}")]
    ClassCountMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("duplicate arc ({0},{1})")]
    DuplicateArc(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("class {class} out of range 1..={class_count}")]
    InvalidClass { class: usize, class_count: usize },
    #[error("graph has {vertex_count} vertices, limit is {limit}")]
    TooLarge { vertex_count: usize, limit: usize },
    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("family is not proper: {j} is listed for {i} but not vice versa")]
    NotProper { i: usize, j: usize },
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("digraph does not realize the family at class {0}")]
    NotARealization(usize),
    #[error("operation requires a nonempty input")]
    Empty,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
