use std::fmt;

use johnson_cover::Error;

pub const IO: u8 = 1;
pub const USAGE: u8 = 2;
pub const PARSE: u8 = 3;
pub const PRECONDITION: u8 = 4;
pub const VERIFICATION: u8 = 5;
pub const BUDGET: u8 = 6;

#[derive(Debug)]
pub enum Failure {
    Lib(Error),
    /// A cover or code failed its check.
    Verification(String),
    /// The solver stopped before proving optimality.
    Budget(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Lib(e) => match e {
                Error::Parse { .. } => PARSE,
                Error::Io(_) => IO,
                Error::BudgetExceeded(_) => BUDGET,
                _ => PRECONDITION,
            },
            Failure::Verification(_) => VERIFICATION,
            Failure::Budget(_) => BUDGET,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
            Failure::Budget(m) => write!(f, "budget exhausted: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Lib(Error::from(e))
    }
}
