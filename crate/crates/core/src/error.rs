use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division is not exact in Z[v, v^-1]")]
    DivisionNotExact,
    #[error("period mismatch: {0} vs {1}")]
    PeriodMismatch(usize, usize),
    #[error("rank mismatch: {0} vs {1}")]
    RankMismatch(usize, usize),
    #[error("permutation is not the minimal double coset representative")]
    NotMinimalRep,
    #[error("invalid ranks: N = {big} is smaller than n = {small}")]
    BadRanks { small: usize, big: usize },
    #[error("matrix is not strictly upper triangular")]
    NotUpperTriangular,
    #[error("row/column profiles differ")]
    ProfileMismatch,
    #[error("matrix has sigma {found}, expected {expected}")]
    SigmaMismatch { expected: usize, found: usize },
    #[error("vector does not decompose over x_gamma H' (x) x_delta H''")]
    NotDecomposable,
    #[error("coordinate extraction left a nonzero residual: {0}")]
    CoordinateExtractionFailed(String),
    #[error("bar involution is not unitriangular: {0}")]
    TriangularityViolation(String),
    #[error("coproduct solve failed: {0}")]
    SolveFailed(String),
    #[error("support of {what} exceeded the cap of {cap} terms")]
    ResourceBound { what: &'static str, cap: usize },
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("weight classes do not match the index constraints")]
    ClassMismatch,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
