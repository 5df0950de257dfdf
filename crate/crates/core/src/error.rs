use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground set must be nonempty (n >= 1)")]
    EmptyGroundSet,

    #[error("permutation size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("not a bijection on 1..{n}: {detail}")]
    NotABijection { n: usize, detail: String },

    #[error("rank {rank} out of range for n-cycles of S_{n} (expected rank < {limit})")]
    RankOutOfRange { n: usize, rank: u64, limit: u64 },

    #[error("n = {n} exceeds the maximum supported enumeration size {max}")]
    TooLarge { n: usize, max: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid partition token {token:?}: {reason}")]
    PartitionToken { token: String, reason: &'static str },

    #[error("coefficient of q^{index} is not divisible by {den} after scaling by {num}")]
    NotDivisible {
        index: usize,
        num: String,
        den: String,
    },

    #[error("scaling P for lambda = ({lambda}) by n/z failed at q^{index}: not divisible by {den}")]
    Divisibility {
        lambda: String,
        index: usize,
        den: String,
    },

    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,

    #[error("interval lower bound must be strictly below the upper bound")]
    EmptyInterval,

    #[error("{what} needs {required} iterations, budget is {limit}")]
    BudgetExceeded {
        what: &'static str,
        required: String,
        limit: u64,
    },

    #[error("exact division left a nonzero remainder")]
    InexactDivision,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
