use thiserror::Error;

/// A failed command. Each variant has a fixed exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable file, bad JSON, malformed simplex or cochain, bad flag.
    #[error("{0}")]
    Invalid(String),
    /// Well-formed input that does not fit the complex.
    #[error("{0}")]
    Semantic(String),
    #[error("not a cocycle")]
    NotACocycle,
    #[error("{0}")]
    TableMismatch(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Semantic(_) => 3,
            CliError::NotACocycle => 4,
            CliError::TableMismatch(_) => 5,
        }
    }
}

impl From<cupsq::Error> for CliError {
    fn from(e: cupsq::Error) -> CliError {
        use cupsq::Error as E;
        match e {
            E::NotACocycle => CliError::NotACocycle,
            E::NotInComplex(_) | E::SupportNotInComplex(_) => CliError::Semantic(e.to_string()),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
