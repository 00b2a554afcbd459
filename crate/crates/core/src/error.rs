use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unexpected character {ch:?} at position {pos} (only U and D are allowed)")]
    BadCharacter { pos: usize, ch: char },
    #[error("word is not balanced: {ups} up-steps against {downs} down-steps")]
    NotBalanced { ups: usize, downs: usize },
    #[error("path goes below the axis at step {pos}")]
    GoesBelowAxis { pos: usize },
    #[error("path of {len} steps exceeds the supported maximum of {max}")]
    TooLong { len: usize, max: usize },
    #[error("operation requires a nonempty path")]
    EmptyPath,
    #[error("invalid Stanley code {code:?}: {reason}")]
    InvalidCode { code: Vec<usize>, reason: String },
    #[error("resource limit: {what} needs {requested}, cap is {cap}")]
    ResourceLimit { what: &'static str, requested: u128, cap: u128 },
    #[error("path {0} is not a vertex of this graph")]
    UnknownVertex(String),
    #[error("{0} and {1} have no meet; maximal common lower bounds: {2:?}")]
    NoMeet(String, String, Vec<String>),
    #[error("{0} and {1} have no join; minimal common upper bounds: {2:?}")]
    NoJoin(String, String, Vec<String>),
    #[error("path {0} has the wrong shape for this operation")]
    BadShape(String),
    #[error("involution table for semilength {n} could not be built: {detail}")]
    ConstructionFailure { n: usize, detail: String },
    #[error("no involution table for semilength {0}")]
    TableMissing(usize),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("invalid pattern {0:?}")]
    BadPattern(String),
    #[error("series arithmetic: {0}")]
    Series(String),
}
