use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("payoff `{field}` must be positive and finite, got {value}")]
    InvalidPayoff { field: &'static str, value: f64 },

    #[error("payoff matrix does not follow the Wise Alice pattern: {0}")]
    MalformedMatrix(String),

    #[error("vertex {0} is not one of 1, 2, 3, 4")]
    InvalidVertex(i64),

    #[error("frame angle {0}° must lie strictly between 0° and 90°")]
    InvalidFrame(f64),

    #[error("strategy angle must be finite, got {0}")]
    InvalidAngle(f64),

    #[error("outcome weights are not pair-normalized: {0}")]
    NotNormalized(String),

    #[error("vector is not a probability distribution: {0}")]
    NotDistribution(String),

    #[error(transparent)]
    Lattice(#[from] LatticeError),

    #[error("{path}:{line}: {message}")]
    ScenarioSyntax {
        path: PathBuf,
        line: usize,
        message: String,
    },

    #[error("scenario field `{field}`: {message}")]
    ScenarioField { field: &'static str, message: String },

    #[error("invalid setting `{name}`: {message}")]
    InvalidSetting { name: &'static str, message: String },

    #[error("empty range: {0}")]
    EmptyRange(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("order relation is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("lattice has no {0} element")]
    MissingBound(&'static str),

    #[error("complement is not an involution: {0}")]
    BadComplement(String),

    #[error("elements `{x}` and `{y}` have no unique {kind}")]
    NoUniqueBound {
        kind: &'static str,
        x: String,
        y: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
