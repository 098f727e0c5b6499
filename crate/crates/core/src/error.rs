use thiserror::Error;

/// Errors raised by the exact group/representation kernel.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("group order exceeds the configured cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("element is not a member of the group")]
    ElementNotInGroup,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field degree too large: q = {q} exceeds the supported range")]
    DegreeTooLarge { q: u64 },
    #[error("unsupported q = {0}: not a prime power in the supported range")]
    UnsupportedQ(u64),
    #[error("subgroup lattice order {order} exceeds the cap of {cap}")]
    LatticeCapExceeded { order: usize, cap: usize },
    #[error("no prime l = 1 mod {exponent} with l > {min} below the bound {bound}")]
    NoSuitablePrime { exponent: u64, min: u64, bound: u64 },
    #[error("internal consistency failure: {0}")]
    InternalInconsistency(String),
    #[error("character is not irreducible (norm {0})")]
    NotIrreducible(String),
    #[error("operands belong to different groups")]
    GroupMismatch,
    #[error("subgroup does not embed in the ambient group")]
    SubgroupMismatch,
    #[error("character table unavailable: {0}")]
    TableUnavailable(String),
    #[error("expected a non-negative integer, got {0}")]
    NotIntegral(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: usize },
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
