use thiserror::Error;

/// Every failure the engine can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring context mismatch: {0}")]
    Context(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("invalid base ring: {0}")]
    InvalidRing(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("engine unavailable: {0}")]
    Engine(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("presentation error: {0}")]
    Presentation(String),
    #[error("not a unit: {0}")]
    Unit(String),
    #[error("flavor mismatch: {0}")]
    Flavor(String),
    #[error("form error: {0}")]
    Form(String),
    #[error("degree mismatch: {0}")]
    Degree(String),
    #[error("axiom `{axiom}` fails on `{generator}`: {witness}")]
    Axiom {
        axiom: String,
        generator: String,
        witness: String,
    },
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("not in the augmentation ideal: {0}")]
    Augmentation(String),
    #[error("point error: {0}")]
    Point(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("representation error: {0}")]
    Representation(String),
    #[error("incompatible coaction: {0}")]
    Coaction(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("lookup error: {0}")]
    Lookup(String),
}

pub type Result<T> = std::result::Result<T, Error>;
