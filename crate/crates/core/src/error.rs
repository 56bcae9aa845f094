use alloc::string::String;

use thiserror::Error;

pub type Result<T, E = TriadError> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriadError {
    #[error("index {index} is beyond the explicit list of length {len}")]
    IndexBeyondExplicitList { index: usize, len: usize },

    #[error("sequence polynomial has degree {0}; at most 2 is supported")]
    DegreeTooHigh(usize),

    #[error("no polynomial sequence exists past degree {0}: i_{0} = 0")]
    NoPolynomialSequence(usize),

    #[error("basis element {index} has degree {degree:?}, expected {index}")]
    DegenerateBasis { index: usize, degree: Option<usize> },

    #[error("unknown catalog name `{0}`")]
    UnknownName(String),

    #[error("catalog entry `{0}` has no closed form")]
    NoOracle(String),

    #[error("({n}, {k}) is outside the triangle")]
    IndexOutOfTriangle { n: usize, k: usize },

    #[error("path enumeration of {steps} steps exceeds the bound of {bound}")]
    EnumerationBoundExceeded { steps: usize, bound: usize },
}
