use std::path::PathBuf;

use thiserror::Error;

/// Errors produced by simulation, correlation, analysis, and I/O stages.
#[derive(Debug, Error)]
pub enum Error {
    /// Configuration field violates an invariant. `path` is the dotted
    /// field path (e.g. `hbt.det1.efficiency`).
    #[error("config error at `{path}`: {message}")]
    Config { path: String, message: String },

    /// A source specification that no physical emitter can realize.
    #[error("nonphysical source: {0}")]
    NonphysicalSource(String),

    /// Input tag data violates the sortedness contract.
    #[error("unsorted input: {0}")]
    UnsortedInput(String),

    /// A histogram bin counter would overflow.
    #[error("histogram bin {bin} would overflow its counter")]
    BinOverflow { bin: usize },

    /// Brute-force pair enumeration refused an oversized input.
    #[error("size guard: {n} x {m} pairs exceed the brute-force limit of {limit}")]
    SizeGuard { n: usize, m: usize, limit: u64 },

    /// Too few bins outside the exclusion zone to estimate the flat level.
    #[error("insufficient sideband: {available} bins outside the exclusion zone, need {needed}")]
    InsufficientSideband { available: usize, needed: usize },

    /// The normalization region has zero mean counts.
    #[error("flat level is zero; cannot normalize")]
    ZeroFlatLevel,

    /// A fit did not converge or could not be started.
    #[error("fit failure: {0}")]
    FitFailure(String),

    /// Input data is degenerate for the requested fit.
    #[error("degenerate data: {0}")]
    DegenerateData(String),

    /// Binary tag data is malformed. `offset` is the byte offset of the
    /// first invalid content.
    #[error("data format error at byte {offset} of {path:?}: {message}")]
    DataFormat {
        path: PathBuf,
        offset: u64,
        message: String,
    },

    #[error("i/o error on {path:?}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("manifest error: {0}")]
    Manifest(String),
}

impl Error {
    pub fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
