use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// `Parse`, `RankMismatch` and `NotPrime` are input-shape problems (a CLI maps
/// them to its usage exit code); the remaining variants are domain errors on
/// structurally well-formed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("rank mismatch: datum has rank {expected}, got {got} coefficients")]
    RankMismatch { expected: usize, got: usize },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("weights belong to different root data")]
    MismatchedData,

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("the zero vector has no support")]
    ZeroVector,

    #[error("vector is not a root of the datum")]
    NotARoot,

    #[error("node set spans a disconnected subdiagram")]
    DisconnectedSupport,

    #[error("the pair is not a minimal degeneration")]
    NotMinimalDegeneration,

    #[error("{0}")]
    Domain(String),

    #[error("internal consistency error: {0}")]
    Internal(String),
}
