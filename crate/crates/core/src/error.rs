use thiserror::Error;

/// Errors produced by validation and enumeration guards.
///
/// `TooManyChoices` is the combinatorial-explosion guard and is the only
/// variant CLI front-ends should map to a distinct exit code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("vertex {0} is not in the complex")]
    MissingVertex(u32),

    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("exact enumeration needs {choices} binary choices, above the cap of {cap}")]
    TooManyChoices { choices: usize, cap: usize },

    #[error("universe has {got} vertices but at least {need} are required")]
    UniverseTooSmall { need: usize, got: usize },

    #[error("invalid probability table: {0}")]
    InvalidTable(String),

    #[error("invalid document: {0}")]
    InvalidDocument(String),

    #[error("invalid schedule: {0}")]
    InvalidSchedule(String),

    #[error("limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
