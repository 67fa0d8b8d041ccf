use std::fmt;

/// Why a command did not succeed; each kind maps to an exit code.
#[derive(Debug)]
pub enum Failure {
    /// The command ran and a check did not hold (exit 1).
    Check(String),
    /// The command could not run as invoked (exit 2).
    Usage(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Check(m) | Failure::Usage(m) => f.write_str(m),
        }
    }
}

impl From<psreg::Error> for Failure {
    fn from(e: psreg::Error) -> Self {
        use psreg::Error::*;
        match e {
            InvalidArgument(_) | Precondition(_) | ExactLimit { .. } | Parse { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}
