use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("rank {rank} is invalid for {n} elements")]
    InvalidRank { n: usize, rank: usize },
    #[error("ground set of {0} elements exceeds the supported maximum of 64")]
    TooManyElements(usize),
    #[error("sign table has {got} entries, expected {expected}")]
    SignTableLength { expected: usize, got: usize },
    #[error("basis {0} has sign 0; only uniform chirotopes are supported")]
    NotUniform(String),
    #[error("element {element} is outside the ground set 0..{n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("element {0} is repeated")]
    RepeatedElement(usize),
    #[error("delete and contract sets overlap")]
    OverlappingMinor,
    #[error("cannot contract {contract} elements of a rank {rank} matroid")]
    ContractTooLarge { contract: usize, rank: usize },
    #[error("deleting leaves {left} elements, fewer than the rank {rank}")]
    DeleteTooLarge { left: usize, rank: usize },
    #[error("signature has {got} entries but the rank is {rank}; only full signatures are supported")]
    PartialSignature { got: usize, rank: usize },
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("{0} is not a face")]
    NotAFace(String),
    #[error("the matroid is not acyclic")]
    NotAcyclic,
    #[error("the matroid is not balanced")]
    NotBalanced,
    #[error("the matroid is not neighborly")]
    NotNeighborly,
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("configuration is not in general position")]
    Degenerate,
    #[error("parameters out of range: {0}")]
    OutOfRange(String),
    #[error("internal verification failed: {0}")]
    Verification(String),
}
