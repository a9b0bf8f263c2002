use thiserror::Error;

pub type Result<T, E = GeaError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum GeaError {
    #[error("population size must be at least 2, got {0}")]
    PopulationTooSmall(usize),
    #[error("operation requires a non-empty population")]
    EmptyPopulation,
    #[error("genomes belong to different domains (lengths {0} and {1})")]
    DomainMismatch(usize, usize),
    #[error("invalid genome: {0}")]
    InvalidGenome(String),
    #[error("elite set is empty")]
    EmptyElite,
    #[error("scenario weights must be non-negative and not all zero")]
    InvalidWeights,
    #[error("fixed loci contain duplicate symbol {0}")]
    DuplicateFixedSymbol(u32),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("instance too large for exact oracle: {0}")]
    InstanceTooLarge(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("statistics need at least one value")]
    EmptyCosts,
    #[error("batches have mismatched run counts ({0} vs {1})")]
    MismatchedRunCounts(usize, usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
