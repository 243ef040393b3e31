use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(usize),
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundSetTooLarge(usize),
    #[error("{0} is not a vertex of the complex")]
    NotAVertex(usize),
    #[error("vertices {u} and {v} are adjacent")]
    Adjacent { u: usize, v: usize },
    #[error("operation needs two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("self-loop at vertex {0}")]
    Loop(usize),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("vector lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("generator has a zero at coordinate {0} followed by a positive entry")]
    InternalZero(usize),
    #[error("entry {value} at coordinate {index} exceeds the supported maximum 2^63 - 1")]
    EntryTooLarge { index: usize, value: u64 },
    #[error("graph is not complete multipartite")]
    NotCompleteMultipartite,
    #[error("sets have different sizes ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("{face} is not an r-colored set for r = {r}")]
    NotColored { face: String, r: usize },
    #[error("{what} = {value} exceeds the cap {cap}{hint}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
        hint: &'static str,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family is not downward closed: {0} is missing")]
    NotDownwardClosed(String),
    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub(crate) fn parse(location: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            location: location.into(),
            message: message.into(),
        }
    }
}
