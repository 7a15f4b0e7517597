use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("enumeration too large: group of order {order} exceeds the element cap {cap}")]
    EnumerationTooLarge { order: u64, cap: u64 },

    #[error(
        "subgroup enumeration cap exceeded: order {order} > {cap}; \
         use chief-series-based operations instead"
    )]
    SubgroupCapExceeded { order: u64, cap: u64 },

    #[error("quotient degree {index} exceeds the degree cap {cap}")]
    DegreeCapExceeded { index: u64, cap: u64 },

    #[error("{0}")]
    NotNormal(String),

    #[error("{0}")]
    NotSubgroup(String),

    #[error("group of order {0} is not soluble")]
    NotSoluble(u64),

    #[error(
        "stalled series: functorial value is trivial on a nontrivial quotient of order {order}"
    )]
    StalledSeries { order: u64 },

    #[error("iteration did not stabilize within {0} steps")]
    IterationBound(u64),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// True for the resource-cap family of errors; suites record these as skips.
    pub fn is_cap(&self) -> bool {
        matches!(
            self,
            Error::EnumerationTooLarge { .. }
                | Error::SubgroupCapExceeded { .. }
                | Error::DegreeCapExceeded { .. }
        )
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
