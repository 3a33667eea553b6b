//! Error type shared by every module in the crate.

use std::path::PathBuf;
use thiserror::Error;

/// Errors surfaced by simulator, layer, model, training, and data code.
#[derive(Debug, Error)]
pub enum Error {
    #[error("qubit count {n} outside supported range 1..={max}")]
    QubitCount { n: usize, max: usize },

    #[error("qubit index {qubit} out of range for {n_qubits} qubits")]
    QubitIndex { qubit: usize, n_qubits: usize },

    #[error("control and target must differ (both are {qubit})")]
    DuplicateQubit { qubit: usize },

    #[error("parameter slot {slot} not covered by {provided} bound values")]
    ParameterBinding { slot: usize, provided: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("encoding input {value} outside [0, 1)")]
    EncodingDomain { value: f64 },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("sampling requires at least one shot")]
    InvalidShots,

    #[error("statistics: {0}")]
    Statistics(String),

    #[error("domain: {0}")]
    Domain(String),

    #[error("state: {0}")]
    State(String),

    #[error("failed to ingest {path}: {reason}")]
    Ingestion { path: PathBuf, reason: String },

    #[error("label {label} out of range for {classes} classes")]
    Label { label: usize, classes: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub(crate) fn ingestion(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::Ingestion {
            path: path.into(),
            reason: reason.into(),
        }
    }
}
