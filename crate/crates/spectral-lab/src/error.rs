use std::fmt;

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub enum SpectralError {
    /// λ on the imaginary axis is spectrum in every space; the resolvent
    /// construction is rejected there.
    ImaginaryAxis,
    /// The minus-side resolvent integrand behaves like 1/ξ^(3−λ)/2 at 0 and
    /// is non-integrable for 0 < Re λ ≤ 1.
    NonIntegrableSingularity { exponent: Complex64 },
    /// Probe preconditions: Re λ > 2 and at least one trial.
    ProbeOutsideHalfPlane { re: f64 },
    NoTrials,
    /// Witness construction requires Re λ = 0.
    NotImaginary { re: f64 },
    /// Residual of the zero function is undefined.
    ZeroField,
    /// Hardy check needs f(0) = 0.
    NotGauged { value_at_zero: f64 },
    /// Grid too small for a meaningful matrix section.
    GridTooSmall { n_points: usize },
    /// Shifted QR failed to deflate within the iteration cap.
    EigensolverStalled { remaining: usize },
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::ImaginaryAxis => {
                write!(f, "Re lambda = 0 rejected: the imaginary axis is spectrum in every space")
            }
            SpectralError::NonIntegrableSingularity { exponent } => write!(
                f,
                "resolvent integrand ~ 1/xi^({} + {}i) at 0 is not integrable",
                exponent.re, exponent.im
            ),
            SpectralError::ProbeOutsideHalfPlane { re } => {
                write!(f, "resolvent bound probe needs Re lambda > 2, got {re}")
            }
            SpectralError::NoTrials => write!(f, "probe needs at least one trial"),
            SpectralError::NotImaginary { re } => {
                write!(f, "continuous-spectrum witness needs Re lambda = 0, got {re}")
            }
            SpectralError::ZeroField => write!(f, "residual of the zero field is undefined"),
            SpectralError::NotGauged { value_at_zero } => {
                write!(f, "field must vanish at xi = 0, got |f(0)| = {value_at_zero:e}")
            }
            SpectralError::GridTooSmall { n_points } => {
                write!(f, "matrix section needs at least 31 nodes, got {n_points}")
            }
            SpectralError::EigensolverStalled { remaining } => {
                write!(f, "shifted QR hit the iteration cap with {remaining} eigenvalues left")
            }
        }
    }
}

impl std::error::Error for SpectralError {}
