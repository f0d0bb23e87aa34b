use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum SimError {
    /// dt too large for the advective speed on this grid.
    CflViolation { dt: f64, limit: f64 },
    BadConfig(String),
    /// A term of the right side stopped being finite.
    NonFinite { xi: f64 },
}

impl fmt::Display for SimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimError::CflViolation { dt, limit } => {
                write!(f, "time step {dt} exceeds the advective limit {limit}")
            }
            SimError::BadConfig(msg) => write!(f, "bad configuration: {msg}"),
            SimError::NonFinite { xi } => write!(f, "non-finite value near xi = {xi}"),
        }
    }
}

impl std::error::Error for SimError {}
