use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input outside the range where the computation is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// A sequence of graded pieces whose slopes are not strictly decreasing.
    #[error("invalid filtration: slope of piece {index} exceeds slope of piece {prev}")]
    InvalidFiltration { prev: usize, index: usize },

    /// Numerical data that cannot satisfy the vanishing hypothesis `H^0 = H^1 = 0`.
    #[error("inadmissible bundle: vanishing of H^0 and H^1 forces chi(E) = 0, got chi(E) = {chi}")]
    Inadmissible { chi: String },

    /// An internal identity failed to hold; indicates a bug, never bad input.
    #[error("inconsistent computation: {0}")]
    Inconsistent(String),
}

impl Error {
    /// Short machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::InvalidFiltration { .. } => "invalid-filtration",
            Error::Inadmissible { .. } => "inadmissible",
            Error::Inconsistent(_) => "inconsistent",
        }
    }
}
