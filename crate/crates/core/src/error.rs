use thiserror::Error;

/// Coarse classification used by front ends to pick exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or unsupported user input.
    Input,
    /// A configured search or memory budget was exhausted.
    Budget,
    /// A theoretical guarantee failed to hold; this indicates a bug.
    Internal,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("group order exceeds the configured cap of {cap}")]
    GroupTooLarge { cap: usize },
    #[error("meataxe chopping exceeded its budget of {budget} attempts")]
    ChopBudgetExceeded { budget: usize },
    #[error("projective cover budget exceeded: {0}")]
    ProjectiveCoverBudgetExceeded(String),
    #[error("bar complex too large: {0}")]
    BarComplexBudgetExceeded(String),
    #[error("brute-force oracle budget exceeded: {0}")]
    OracleBudgetExceeded(String),
    #[error("presentation cap exceeded: {0}")]
    CapExceeded(String),
    #[error("linear system is singular")]
    SingularSystem,
    #[error("non-integral solution: {0}")]
    NonIntegralSolution(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("no Brauer correspondent found for block {0}")]
    NoCorrespondent(usize),
    #[error("group of order {0} is not a 2-group")]
    NotA2Group(usize),
    #[error("character {character} does not belong to block {block}")]
    CharacterNotInBlock { character: usize, block: usize },
    #[error("generalized decomposition number ({mu}, {i}, {nu}) should vanish")]
    VanishingViolated { mu: usize, i: usize, nu: usize },
    #[error("block is not tame: {0}")]
    NotTameBlock(String),
    #[error("height-one census violated: {0}")]
    CensusViolation(String),
    #[error("galois orbit structure violated: {0}")]
    OrbitViolation(String),
    #[error("semidihedral defect group needs an explicit three-tube flag")]
    MissingThreeTubeFlag,
    #[error("not applicable: {0}")]
    NotApplicable(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            InvalidInput(_) | NotA2Group(_) | CharacterNotInBlock { .. } | NotTameBlock(_)
            | MissingThreeTubeFlag | NotApplicable(_) => ErrorKind::Input,
            GroupTooLarge { .. }
            | ChopBudgetExceeded { .. }
            | ProjectiveCoverBudgetExceeded(_)
            | BarComplexBudgetExceeded(_)
            | OracleBudgetExceeded(_)
            | CapExceeded(_) => ErrorKind::Budget,
            SingularSystem
            | NonIntegralSolution(_)
            | InternalInconsistency(_)
            | NoCorrespondent(_)
            | VanishingViolated { .. }
            | CensusViolation(_)
            | OrbitViolation(_) => ErrorKind::Internal,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
