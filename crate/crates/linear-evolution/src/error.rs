use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum EvolveError {
    /// Initial data must vanish at ξ = 0 (the ṽ-gauge).
    GaugeViolation { value_at_zero: f64 },
    NegativeTime { t: f64 },
    /// A norm required positive values (log fit) but was not.
    NonPositiveNorm { t: f64, value: f64 },
    /// Growth-rate window contains fewer than two samples.
    WindowTooSmall,
    /// Requested times are not strictly increasing.
    TimesNotIncreasing,
}

impl fmt::Display for EvolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvolveError::GaugeViolation { value_at_zero } => {
                write!(f, "initial data must vanish at xi = 0, got |v(0)| = {value_at_zero:e}")
            }
            EvolveError::NegativeTime { t } => write!(f, "time must be nonnegative, got {t}"),
            EvolveError::NonPositiveNorm { t, value } => {
                write!(f, "nonpositive norm {value:e} at t = {t} inside the fit window")
            }
            EvolveError::WindowTooSmall => write!(f, "fit window holds fewer than two samples"),
            EvolveError::TimesNotIncreasing => write!(f, "times must be strictly increasing"),
        }
    }
}

impl std::error::Error for EvolveError {}
