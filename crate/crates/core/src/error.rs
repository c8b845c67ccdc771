use thiserror::Error;

/// Every fallible operation in the crate reports one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relation contains a directed cycle through element {0}")]
    CycleDetected(usize),
    #[error("element index {index} out of range for a poset of {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("poset has {0} elements; at most {max} are supported", max = crate::bitset::MAX_ELEMENTS)]
    TooManyElements(usize),
    #[error("state space exceeds the configured cap of {cap} states")]
    StateSpaceTooLarge { cap: usize },
    #[error("action is not a bijection: two states map to {0}")]
    NotBijective(String),
    #[error("action maps a state outside the enumerated set: {0}")]
    StateEscaped(String),
    #[error("rc-poset has no layer metadata")]
    NotLayered,
    #[error("chain products of {0} chains have no rc embedding")]
    UnsupportedArity(usize),
    #[error("root system {kind}_{rank} is not supported")]
    UnsupportedRank { kind: char, rank: usize },
    #[error("skew shape has no interior cells")]
    EmptyShape,
    #[error("invalid rc-poset: {0}")]
    InvalidRcPoset(String),
    #[error("invalid family spec `{0}`")]
    InvalidFamilySpec(String),
    #[error("operation requires an rc-poset of height one")]
    NotHeightOne,
    #[error("no boundary path realizes the ideal in the declared window")]
    NoValidPath,
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("word does not satisfy the ballot condition")]
    NotBallot,
    #[error("symmetric pairing failed: {0}")]
    PairingFailure(String),
    #[error("invalid boundary path matrix: {0}")]
    InvalidMatrix(String),
    #[error("bracket words need a product of exactly two layers")]
    NotTwoLayers,
    #[error("bracket word is not balanced")]
    Unbalanced,
    #[error("invalid alternating sign matrix: {0}")]
    InvalidAsm(String),
    #[error("invalid height function: {0}")]
    InvalidHeightFunction(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("polynomial division is not exact")]
    DivisionInexact,
    #[error("orbit size {size} does not divide the group order {order}")]
    OrbitSizeError { size: usize, order: usize },
    #[error("orbit sizes sum to {orbits} but X(1) = {poly}")]
    CountMismatch { orbits: usize, poly: String },
    #[error("integer overflow computing {0}")]
    Overflow(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
