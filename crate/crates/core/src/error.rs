use thiserror::Error;

use crate::birack::AxiomFailure;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("carrier must be non-empty")]
    EmptyCarrier,
    #[error("value {value} out of range for carrier of size {n}")]
    OutOfRange { value: usize, n: usize },
    #[error("not a permutation: value {value} repeated")]
    NotAPermutation { value: usize },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cycle notation: {0}")]
    Cycle(#[from] CycleParseError),
    #[error("row {row} is not a permutation")]
    RowNotPermutation { row: usize },
    #[error("column {column} is not a permutation")]
    ColumnNotPermutation { column: usize },
    #[error("not a birack: {0}")]
    NotBirack(AxiomFailure),
    #[error("partition is not a congruence: {0}")]
    NotCongruence(String),
    #[error("birack is not involutive: (x, y) = ({0}, {1})")]
    NotInvolutive(usize, usize),
    #[error("left quasigroup is not right cyclic at ({0}, {1}, {2})")]
    NotRightCyclic(usize, usize, usize),
    #[error("diagonal map x -> x*x is not a bijection")]
    Degenerate,
    #[error("maps do not commute at {0}")]
    NotCommuting(usize),
    #[error("invalid affine data: {0}")]
    InvalidAffine(String),
    #[error("invalid group data: {0}")]
    InvalidGroup(String),
    #[error("not a quandle")]
    NotQuandle,
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("bound exceeded: size {n} is larger than {bound}")]
    BoundExceeded { n: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleParseError {
    #[error("malformed parentheses at byte {0}")]
    Malformed(usize),
    #[error("symbol {0} out of range")]
    OutOfRange(usize),
    #[error("symbol {0} repeated")]
    Repeated(usize),
    #[error("unparseable symbol `{0}`")]
    BadSymbol(String),
}

pub type Result<T> = std::result::Result<T, Error>;
