use thiserror::Error;

/// Errors raised by the computational engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspaces live in different ambient spaces ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("modules are defined over different algebras")]
    AlgebraMismatch,

    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("invalid relation: {0}")]
    InvalidRelation(String),

    #[error("raise L_max or ideal not admissible: path {path} survives at length {length}")]
    NotAdmissible { path: String, length: usize },

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("subspaces are not stable under the arrow maps (arrow {0})")]
    NotArrowStable(String),

    #[error("cannot kill every vertex: the quotient would be the zero algebra")]
    ZeroQuotient,

    #[error("Ext^{degree} unknown beyond the computed resolution prefix of length {prefix}")]
    UnknownBeyondPrefix { degree: usize, prefix: usize },

    #[error("search space too large: {0}")]
    SearchTooLarge(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("i/o: {0}")]
    Io(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
