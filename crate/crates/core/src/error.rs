use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected d={expected}, got d={got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("point must have at least one finite coordinate ({0})")]
    InvalidPoint(String),

    #[error("dataset must contain at least one point")]
    EmptyDataset,

    #[error("centroid of an empty point set is undefined")]
    EmptyPointSet,

    #[error("center set must contain at least one center")]
    EmptyCenterSet,

    #[error("eligible index set for sampling is empty")]
    EmptyEligibleSet,

    #[error("invalid k={k} for n={n} available points")]
    InvalidK { k: usize, n: usize },

    #[error("inconsistent labeling: {0}")]
    InconsistentLabeling(String),

    #[error("class {label} has only {size} members, need {needed}")]
    ClassTooSmall {
        label: usize,
        size: usize,
        needed: usize,
    },

    #[error("class {label} has no members")]
    EmptyClass { label: usize },

    #[error("center count {centers} does not match k={k}")]
    CenterCountMismatch { centers: usize, k: usize },

    #[error("enumeration over n={n} points exceeds the cap of {max}")]
    EnumerationTooLarge { n: usize, max: usize },

    #[error("total squared-distance mass is zero: cluster is already fully covered")]
    ZeroDistanceMass,

    #[error("bound undefined for k={k}, supervised classes g={g}: {reason}")]
    BoundUndefined { k: usize, g: usize, reason: String },

    #[error("degenerate dataset: {0}")]
    DegenerateDataset(String),

    #[error("partitions have different lengths: {left} vs {right}")]
    PartitionLengthMismatch { left: usize, right: usize },

    #[error("partition comparison needs at least 2 elements, got {0}")]
    PartitionTooSmall(usize),

    #[error("invalid mixture spec: {0}")]
    InvalidMixtureSpec(String),

    #[error("invalid experiment config: {0}")]
    InvalidConfig(String),

    #[error("parse error at row {row}, column {column}: {message}")]
    Parse {
        row: usize,
        column: String,
        message: String,
    },

    #[error(
        "{algorithm} did not converge at level {level} replicate {replicate} \
         within {max_iter} iterations"
    )]
    NotConverged {
        algorithm: String,
        level: f64,
        replicate: usize,
        max_iter: usize,
    },

    #[error(
        "cost descent violated at {algorithm} level {level} replicate {replicate}: \
         step {step} went from {before} to {after}"
    )]
    DescentViolation {
        algorithm: String,
        level: f64,
        replicate: usize,
        step: usize,
        before: f64,
        after: f64,
    },

    #[error("experiment cell failed at level {level} replicate {replicate} ({algorithm}): {source}")]
    Cell {
        level: f64,
        replicate: usize,
        algorithm: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
