use thiserror::Error;

/// Errors surfaced by the solver library.
///
/// `Config` maps to CLI exit code 2, `NanAbort`/`NanAtStep` to exit code 3.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {lhs:?} vs {rhs:?}")]
    ShapeMismatch {
        op: &'static str,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
    #[error("{op} expects a scalar, got shape {shape:?}")]
    NonScalarLoss { op: &'static str, shape: Vec<usize> },
    #[error("{op}: input out of domain: {detail}")]
    Domain { op: &'static str, detail: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("NaN appeared in simulation at step {step}")]
    NanAtStep { step: usize },
    #[error("NaN loss at iteration {iter}; last good parameters retained")]
    NanAbort { iter: usize },
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("objective mode requires a xi-net but none is present")]
    MissingXiNet,
    #[error("special-case objective requires model.special_case_ok")]
    SpecialCaseUnavailable,
    #[error("empty input to {0}")]
    EmptyInput(&'static str),
    #[error("config error: {0}")]
    Config(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Serde(e.to_string())
    }
}

impl From<toml::de::Error> for Error {
    fn from(e: toml::de::Error) -> Self {
        Error::Config(e.to_string())
    }
}
