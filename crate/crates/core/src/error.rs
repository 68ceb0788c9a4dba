use thiserror::Error;

/// Errors produced by the simulator, the game protocols and the search routines.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("site {site} out of range for a register of {sites} sites")]
    SiteOutOfRange { site: usize, sites: usize },

    #[error("state is not normalized: norm² = {norm_sqr}")]
    NotNormalized { norm_sqr: f64 },

    #[error("non-finite amplitude at index {index}")]
    NonFinite { index: usize },

    #[error("matrix is not unitary (max |U†U - I| = {deviation:e})")]
    NotUnitary { deviation: f64 },

    #[error("parameter `{name}` = {value} outside [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),

    #[error("invalid game: {0}")]
    InvalidGame(String),

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("search failed: {0}")]
    SearchFailed(String),

    #[error("game file: {0}")]
    GameFile(String),

    #[error("unknown experiment `{name}`; available: {available}")]
    UnknownExperiment { name: String, available: String },

    #[error("unknown output format `{0}`; expected csv or json")]
    UnknownFormat(String),

    #[error("invalid flag {flag}: {reason}")]
    InvalidFlag { flag: &'static str, reason: String },

    #[error("output: {0}")]
    Output(String),
}

impl Error {
    /// True for errors caused by bad user input rather than a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::GameFile(_)
                | Error::UnknownExperiment { .. }
                | Error::UnknownFormat(_)
                | Error::InvalidFlag { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
