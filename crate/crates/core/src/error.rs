use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("modules live over different algebras or sides: {0}")]
    AlgebraMismatch(String),
    #[error("nilpotency cap {cap} too small: path {path} of length {cap} does not reduce to zero")]
    CapNotNilpotent { cap: usize, path: String },
    #[error("relation is not admissible: {0}")]
    NonAdmissible(String),
    #[error("idempotent is not a subset of the distinguished idempotents: {0}")]
    NotIdempotentSubset(String),
    #[error("algebra is not split over the ground field: {0}")]
    NotSplit(String),
    #[error("characteristic {characteristic} unsupported for {what} (need 0 or p > {bound})")]
    UnsupportedCharacteristic {
        characteristic: u64,
        bound: usize,
        what: &'static str,
    },
    #[error("module is not projective: {0}")]
    NotProjective(String),
    #[error("no idempotent matches the summand {0}")]
    NoIdempotentMatch(String),
    #[error("algebra is not commutative")]
    NotCommutative,
    #[error("internal error: cover criteria disagree: {0}")]
    LemmaViolation(String),
    #[error("internal error: Morita conditions disagree: {0}")]
    TheoremViolation(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at `{key}`: {message}")]
    Schema { key: String, message: String },
    #[error("i/o error: {0}")]
    Io(String),
    #[error("invalid module spec: {0}")]
    ModuleSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotSplit(_) | Error::UnsupportedCharacteristic { .. } => 3,
            Error::LemmaViolation(_) | Error::TheoremViolation(_) | Error::Internal(_) => 4,
            _ => 2,
        }
    }

    /// A JSON syntax or type error, with its position split out of the message.
    pub fn from_json_error(e: &serde_json::Error) -> Self {
        let text = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: text.strip_suffix(&suffix).unwrap_or(&text).to_string(),
        }
    }

    pub(crate) fn schema(key: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Schema {
            key: key.into(),
            message: message.into(),
        }
    }
}
