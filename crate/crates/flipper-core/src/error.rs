use thiserror::Error;

use crate::classifier::ClassifierViolation;
use crate::set::Vertex;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {0} out of range (universe size {1})")]
    VertexOutOfRange(Vertex, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {0} is not live in this graph")]
    NotLive(Vertex),
    #[error("set is not contained in the live vertex set")]
    NotASubset,
    #[error("expected a nonempty set: {0}")]
    EmptySet(&'static str),
    #[error("graphs have different vertex sets")]
    VertexSetMismatch,
    #[error("parts must be nonempty and pairwise disjoint")]
    InvalidPartition,
    #[error("sets do not partition the live vertices")]
    NotAPartition,
    #[error("partition has {0} parts, above the flip-enumeration cap {1}")]
    PartitionCapExceeded(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("unknown family spec '{0}'")]
    UnknownFamily(String),
    #[error("search budget exceeded ({0})")]
    BudgetExceeded(&'static str),
    #[error("order is not a permutation covering the vertex universe")]
    InvalidOrder,
    #[error("classifier invalid: {0}")]
    InvalidClassifier(ClassifierViolation),
    #[error("representative selection is not a bijection onto S")]
    NotABijection,
    #[error("expected exactly {0} blobs, got {1}")]
    BlobCount(usize, usize),
    #[error("blobs must be pairwise disjoint")]
    BlobsOverlap,
    #[error("at most {0} balls supported, got {1}")]
    TooManyBalls(usize, usize),
    #[error("max_order at most {0} supported, got {1}")]
    OrderCapExceeded(usize, usize),
    #[error("game configuration refused: {0}")]
    ConfigRefused(String),
    #[error("game is already won; no further rounds may be played")]
    GameOver,
    #[error("invalid move: {0}")]
    InvalidMove(String),
    #[error("scripted strategy ran out of moves")]
    ScriptExhausted,
    #[error("strategy incompatible with game variant")]
    IncompatibleStrategy,
    #[error("replay mismatch at round {0}: {1}")]
    ReplayMismatch(usize, String),
    #[error("invalid transcript: {0}")]
    InvalidTranscript(String),
    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
