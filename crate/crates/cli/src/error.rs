use angk0::validation::Violation;
use thiserror::Error;

/// Process exit codes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Exit {
    Ok = 0,
    Input = 1,
    Validation = 2,
    Unsupported = 3,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },

    #[error("{path}: {message}")]
    Parse { path: String, message: String },

    #[error("{context}: {}", join(.violations))]
    Validation { context: String, violations: Vec<Violation> },

    /// Mathematically outside the supported regime; `reason` is a stable tag.
    #[error("{reason}: {message}")]
    Unsupported { reason: &'static str, message: String },

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit(&self) -> Exit {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Usage(_) => Exit::Input,
            CliError::Validation { .. } => Exit::Validation,
            CliError::Unsupported { .. } => Exit::Unsupported,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::Validation { .. } => "validation",
            CliError::Unsupported { reason, .. } => reason,
            CliError::Usage(_) => "usage",
        }
    }

    pub fn validation(context: impl Into<String>, violations: Vec<Violation>) -> Self {
        CliError::Validation {
            context: context.into(),
            violations,
        }
    }
}

/// Maps library errors onto exit classes.
impl From<angk0::Error> for CliError {
    fn from(e: angk0::Error) -> Self {
        use angk0::Error as E;
        let message = e.to_string();
        match e {
            E::EvenNUnsupported { .. } => CliError::Unsupported {
                reason: "EvenNUnsupported",
                message,
            },
            E::InfiniteGroup { .. } => CliError::Unsupported {
                reason: "InfiniteGroup",
                message,
            },
            E::OrderBound { .. } => CliError::Unsupported {
                reason: "OrderBound",
                message,
            },
            E::NotWellDefined { .. } | E::RelationNotPreserved { .. } => CliError::Unsupported {
                reason: "NotWellDefined",
                message,
            },
            E::InvalidPresentation(v) => CliError::validation("invalid presentation", v),
            E::InvalidTensor(v) => CliError::validation("invalid tensor structure", v),
            E::InvalidEmbedding(v) => CliError::validation("invalid embedding", v),
            other => CliError::validation("invalid input", vec![Violation::new("input", other.to_string())]),
        }
    }
}

fn join(v: &[Violation]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
}
