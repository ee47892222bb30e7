use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable, malformed or inconsistent input.
    #[error("input error: {0}")]
    Input(String),
    /// Input is well formed but fails a structural verification.
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) | CliError::Io { .. } => 2,
        }
    }
}

impl From<tphopf::repcat::RepError> for CliError {
    fn from(e: tphopf::repcat::RepError) -> Self {
        match e {
            tphopf::repcat::RepError::Shape(_) => CliError::Input(e.to_string()),
            _ => CliError::Verification(e.to_string()),
        }
    }
}

impl From<tphopf::tpalg::TpError> for CliError {
    fn from(e: tphopf::tpalg::TpError) -> Self {
        match e {
            tphopf::tpalg::TpError::Shape(_) => CliError::Input(e.to_string()),
            _ => CliError::Verification(e.to_string()),
        }
    }
}

impl From<tphopf::fundamental::FundamentalError> for CliError {
    fn from(e: tphopf::fundamental::FundamentalError) -> Self {
        match e {
            tphopf::fundamental::FundamentalError::Rep(r) => r.into(),
            other => CliError::Verification(other.to_string()),
        }
    }
}
