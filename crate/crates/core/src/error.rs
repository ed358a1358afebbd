use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unsupported algebra so({p},{q}): {reason}")]
    Unsupported { p: usize, q: usize, reason: String },

    #[error("element {index} does not lie in the ambient algebra")]
    NotInAlgebra { index: usize },

    #[error("basis element {index} is linearly dependent on the previous ones")]
    Dependent { index: usize },

    #[error("not a subalgebra: [b{i}, b{j}] leaves the span")]
    NotClosed { i: usize, j: usize },

    #[error("element is {0}, expected a nonzero nilpotent")]
    NotNilpotent(String),

    #[error("element does not normalize the subalgebra")]
    NotNormalizing,

    #[error("root decomposition failed: {0}")]
    Decomposition(String),

    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Format(#[from] crate::matrix::FormatError),
}
