use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed chain complex: {0}")]
    MalformedComplex(String),

    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("partitions on {0} and {1} points cannot be compared")]
    MismatchedPartitions(usize, usize),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("malformed weighting: {0}")]
    MalformedWeighting(String),

    #[error("label error: {0}")]
    Labels(String),

    #[error("graft at a leaf edge of weight zero; normalize first")]
    DegenerateGraft,

    #[error("generators in degree {0}; only degrees >= 2 are supported")]
    DegreeBelowTwo(i64),

    #[error("mixed alphabets: {0}")]
    MixedAlphabets(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
