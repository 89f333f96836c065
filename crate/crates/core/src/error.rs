use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("graph is not connected")]
    NotConnected,
    #[error("instance too large: {n} vertices exceeds the limit of {max}")]
    InstanceTooLarge { n: usize, max: usize },
    #[error("search budget of {nodes} nodes exceeded")]
    BudgetExceeded { nodes: u64 },
    #[error("too many colour classes ({0}); at most 128 are supported")]
    TooManyClasses(usize),
    #[error("invalid sharing configuration: {0}")]
    InvalidConfig(String),
    #[error("insufficient shares: have {have}, need {need}")]
    InsufficientShares { have: usize, need: usize },
    #[error("duplicate share index {0}")]
    DuplicateIndex(u8),
    #[error("share payload lengths differ")]
    LengthMismatch,
    #[error("reconstruction stopped after {phases} phase(s) with {collected} of {total} classes collected: search budget exceeded")]
    ReconstructionBudget { phases: usize, collected: usize, total: usize },
    #[error("participants unreachable from the informed set: {0:?}")]
    Unreachable(Vec<usize>),
    #[error("cycle enumeration exceeded {0} cycles")]
    TooManyCycles(usize),
}
