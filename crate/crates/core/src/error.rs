use thiserror::Error;

use crate::exactlin::LinAlgError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("the braiding has not passed the Yang-Baxter check")]
    YbeNotVerified,
    #[error("unknown character `{0}`")]
    UnknownCharacter(String),
    #[error("`{0}` is not a verified braided character")]
    CharacterNotVerified(String),
    #[error("a permutation of {letters} letters does not act on {n} tensor factors")]
    PermutationTooLong { letters: usize, n: usize },
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("hyper-boundary order {k} outside 0..={n}")]
    HyperOrder { k: usize, n: usize },
    #[error("no comultiplication installed on the space")]
    MissingComultiplication,
    #[error("{0}")]
    Structure(String),
    #[error("boundary does not square to zero at degree {degree}: entry ({row}, {col}) = {value}")]
    NonZeroSquare { degree: usize, row: usize, col: usize, value: String },
    #[error("span is not boundary-stable: degree {degree} basis element {basis} reaches {escaped}")]
    UnstableSpan { degree: usize, basis: usize, escaped: usize },
    #[error("degree {degree} has {size} basis elements, above the cap of {cap}")]
    ResourceCap { degree: usize, size: usize, cap: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
