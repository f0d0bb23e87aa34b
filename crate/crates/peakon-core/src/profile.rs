//! The peakon profile φ(ξ) = e^{−|ξ|} and its pointwise building blocks.
//!
//! φ is the steady traveling profile after scaling the wave speed to 1. Its
//! derivative jumps at ξ = 0; everywhere else φ′ = −sign(ξ)·φ, so φ′² = φ²
//! pointwise. All operator coefficients are assembled from these samples.
//! The classical value φ′(0) does not exist; the convention φ′(0) := 0 (the
//! mean of the one-sided limits ±1) is used wherever a single sample at the
//! node ξ = 0 is required. The transport coefficient 1 − φ² vanishes there,
//! so operator rows at the peak are insensitive to this choice.

/// φ(ξ) = e^{−|ξ|}.
pub fn peakon_phi(xi: f64) -> f64 {
    (-xi.abs()).exp()
}

/// φ′(ξ) = −sign(ξ)·e^{−|ξ|} for ξ ≠ 0; returns the convention value 0 at ξ = 0.
pub fn peakon_phi_prime(xi: f64) -> f64 {
    if xi == 0.0 {
        0.0
    } else {
        -xi.signum() * (-xi.abs()).exp()
    }
}

/// One-sided derivative pair (φ′(0⁻), φ′(0⁺)) = (1, −1), valid limits at the peak.
pub fn peakon_phi_prime_at_zero() -> (f64, f64) {
    (1.0, -1.0)
}

/// φ(ξ)·φ′(ξ) = −sign(ξ)·e^{−2|ξ|}, with the value 0 at ξ = 0.
pub fn phi_phi_prime(xi: f64) -> f64 {
    if xi == 0.0 {
        0.0
    } else {
        -xi.signum() * (-2.0 * xi.abs()).exp()
    }
}

/// Transport coefficient 1 − φ²(ξ) = 1 − e^{−2|ξ|} ≥ 0, vanishing only at the peak.
pub fn one_minus_phi_sq(xi: f64) -> f64 {
    -(-2.0 * xi.abs()).exp_m1()
}
