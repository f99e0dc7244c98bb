use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Coarse classification used by front ends to pick an exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Validation,
    Overflow,
    Internal,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cartan matrix is empty")]
    EmptyCartan,
    #[error("Cartan matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("Cartan matrix diagonal entry ({index},{index}) is {value}, expected 2")]
    BadDiagonal { index: usize, value: i64 },
    #[error("Cartan matrix entry ({row},{col}) is {value}, off-diagonal entries must be <= 0")]
    PositiveOffDiagonal { row: usize, col: usize, value: i64 },
    #[error("Cartan matrix entry ({row},{col}) is zero but ({col},{row}) is not")]
    AsymmetricZero { row: usize, col: usize },
    #[error("Cartan matrix entry ({row},{col}) = {value} does not fit in 32 bits")]
    EntryTooLarge { row: usize, col: usize, value: i64 },
    #[error("no finite root system of type {family}{rank}")]
    InvalidType { family: char, rank: usize },
    #[error("{what} {index} out of range 1..={bound}")]
    OutOfRange {
        what: &'static str,
        index: usize,
        bound: usize,
    },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("sequence must be nonempty")]
    EmptySequence,
    #[error("positions {0:?} are not strictly increasing")]
    NotIncreasing(Vec<usize>),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("expected a divisor in the {expected} basis")]
    WrongBasis { expected: &'static str },
    #[error("word length {len} exceeds the enumeration cap {cap}")]
    EnumerationCap { len: usize, cap: usize },
    #[error("integer overflow")]
    Overflow,
    #[error(
        "basis algorithms disagree at start position {start}: comp gives {comp:?}, weyl gives {weyl:?}"
    )]
    AlgorithmDisagreement {
        start: usize,
        comp: Vec<usize>,
        weyl: Vec<usize>,
    },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Overflow => ErrorKind::Overflow,
            Error::AlgorithmDisagreement { .. } => ErrorKind::Internal,
            _ => ErrorKind::Validation,
        }
    }
}
