use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("missing cells: {0:?}")]
    Gap(Vec<i64>),

    #[error("label type mismatch: {0}")]
    LabelType(String),

    #[error("word is not in the subgroup H (coset {coset})")]
    NotInSubgroup { coset: u64 },

    #[error("orbit branch does not cover height index {0}")]
    BranchWindow(i64),

    #[error("io error: {0}")]
    Io(String),

    #[error("json error: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn param(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }

    /// Stable snake_case name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse { .. } => "parse",
            Error::InvalidParameter(_) => "invalid_parameter",
            Error::ResourceLimit(_) => "resource_limit",
            Error::Inconclusive(_) => "inconclusive",
            Error::Gap(_) => "gap",
            Error::LabelType(_) => "label_type",
            Error::NotInSubgroup { .. } => "not_in_subgroup",
            Error::BranchWindow(_) => "branch_window",
            Error::Io(_) => "io",
            Error::Json(_) => "json",
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
