use std::fmt;

/// Errors raised by grid construction and operator application.
#[derive(Debug, Clone, PartialEq)]
pub enum CoreError {
    /// Grid parameters violate an invariant (even point count, nonpositive width, ...).
    InvalidGrid(String),
    /// A field was paired with an operator or field living on a different grid.
    GridMismatch,
    /// A field that must vanish at ξ = 0 does not, beyond tolerance.
    GaugeViolation { value_at_zero: f64 },
    /// Value array length does not match the grid.
    LengthMismatch { expected: usize, got: usize },
}

impl fmt::Display for CoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreError::InvalidGrid(msg) => write!(f, "invalid grid: {msg}"),
            CoreError::GridMismatch => write!(f, "grid mismatch between field and operator"),
            CoreError::GaugeViolation { value_at_zero } => {
                write!(f, "field must vanish at xi = 0, got |v(0)| = {value_at_zero:e}")
            }
            CoreError::LengthMismatch { expected, got } => {
                write!(f, "value array has length {got}, grid has {expected} nodes")
            }
        }
    }
}

impl std::error::Error for CoreError {}
