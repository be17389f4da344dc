use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed exact scalar `{0}`")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("supplied eigenvalues do not match the minimal polynomial: {0}")]
    RootsMismatch(String),

    #[error("minimal polynomial of {0} does not split over Q(i) and no eigenvalue hints were given")]
    NonSplitting(String),

    #[error("root search gave up: cannot factor coefficient {0}")]
    RootSearchTooLarge(String),

    #[error("defining relation fails: {0}")]
    RelationFails(String),

    #[error("module is not irreducible: {0}")]
    NotIrreducible(String),

    #[error("H does not act diagonalizably over Q(i)")]
    NonDiagonalizableH,

    #[error("class mismatch: {0}")]
    ClassMismatch(String),

    #[error("semisimple profile dimension {profile} differs from closure dimension {closure}")]
    DimMismatch { profile: usize, closure: usize },

    #[error("subspace is not invariant under {0}")]
    NotInvariant(String),

    #[error("matrix is singular")]
    Singular,

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<ParseScalarError> for Error {
    fn from(e: ParseScalarError) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
