use thiserror::Error;

/// Errors raised by the algebra, module and certification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime (or exceeds the supported modulus bound 65521)")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("associativity fails on basis triple ({i}, {j}, {k})")]
    AssociativityViolation { i: usize, j: usize, k: usize },
    #[error("unit law fails on basis vector {0}")]
    UnitViolation(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("algebra homomorphism is not multiplicative or not unital: {0}")]
    NotAHomomorphism(String),
    #[error("subspace is not a {0} ideal")]
    NotAnIdeal(&'static str),
    #[error("ideal is not proper (contains the unit)")]
    ImproperIdeal,
    #[error("operands belong to different algebras")]
    ParentMismatch,
    #[error("radical contract violated: {0}")]
    RadicalContractViolation(String),
    #[error("selfinjectivity is not certified and no override was given")]
    NotCertifiedSelfinjective,
    #[error("selfinjective tag does not belong to this algebra")]
    TagMismatch,
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
    #[error("subset is not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("algebra is not tagged as a group algebra of this group")]
    NotGroupAlgebra,
    #[error("subspace is not invariant under the module action")]
    NotInvariantSubspace,
    #[error("operands are modules over different algebras")]
    AlgebraMismatch,
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("ideal does not square to zero")]
    NotSquareZero,
    #[error("element is not central")]
    NotCentral,
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("missing prerequisite: {0}")]
    MissingPrerequisite(String),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
