use cycloper::{CoreError, ErrorFamily};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error in {field}: {message}")]
    Parse { field: String, message: String },
    #[error("invalid problem: {0}")]
    Validation(String),
    #[error("{context}: {source}")]
    Core { context: String, source: CoreError },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io { .. } => 3,
            CliError::Parse { .. } => 4,
            CliError::Validation(_) => 5,
            CliError::Core { source, .. } => match source.family() {
                ErrorFamily::Parse => 4,
                ErrorFamily::Validation => 5,
                ErrorFamily::Algebra => 6,
                ErrorFamily::Analytic => 7,
                ErrorFamily::Cyclotomy => 8,
            },
        }
    }

    pub(crate) fn parse(field: impl Into<String>, message: impl ToString) -> Self {
        CliError::Parse { field: field.into(), message: message.to_string() }
    }
}

/// Attaches the command or step name to a core error.
pub(crate) trait Context<T> {
    fn context(self, what: &str) -> Result<T, CliError>;
}

impl<T> Context<T> for Result<T, CoreError> {
    fn context(self, what: &str) -> Result<T, CliError> {
        self.map_err(|source| CliError::Core { context: what.to_string(), source })
    }
}

impl<T> Context<T> for Result<T, cycloper::lie::LieError> {
    fn context(self, what: &str) -> Result<T, CliError> {
        self.map_err(|e| CliError::Core { context: what.to_string(), source: e.into() })
    }
}
