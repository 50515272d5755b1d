use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type `{0}`")]
    InvalidType(String),
    #[error("rank {rank} is not allowed for series {series}")]
    InvalidRank { series: char, rank: usize },
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("roots must not be proportional")]
    ProportionalRoots,
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("{mu:?} does not lie below {lambda:?} in the root cone")]
    NotBelow { mu: Vec<i64>, lambda: Vec<i64> },
    #[error("module needs at least one nonzero highest weight")]
    TrivialModule,
    #[error("weight has {got} coordinates, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("negative exponent {0}")]
    NegativeExponent(i64),
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("determinant must be 1, got {0}")]
    DeterminantNotOne(String),
    #[error("coweight pairs non-integrally with weight {0:?}")]
    NonIntegralExponent(Vec<i64>),
    #[error("element is not in U(Q): {0}")]
    NotUnipotent(String),
    #[error("element is not in the torus image: {0}")]
    NotToral(String),
    #[error("letter {0} is outside the simple-root alphabet")]
    NonSimpleLetter(usize),
    #[error("module lacks fundamental weights {0:?}")]
    MissingFundamentalWeights(Vec<usize>),
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
