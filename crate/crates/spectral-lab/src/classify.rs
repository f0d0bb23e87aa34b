//! Analytic spectrum classifier for the three function-space settings.
//!
//! The verdicts are a pure case analysis on Re λ, transcribing the three
//! spectrum theorems; numerics elsewhere corroborate but never define them.
//!
//! - L²(ℝ): spectrum is the closed strip |Re λ| ≤ 2 — point spectrum on
//!   0 < |Re λ| < 2, continuous on Re λ ∈ {0, ±2}, no residual spectrum.
//! - H¹₀ ∩ C¹₀ (continuous, v(0) = 0, one-sided C¹): spectrum is |Re λ| ≤ 1 —
//!   no point spectrum, residual on 0 < |Re λ| < 1, continuous on
//!   Re λ ∈ {0, ±1}.
//! - H¹₀ (v(0) = 0): spectrum is the imaginary axis, continuous only.
//!
//! Boundary lines use closed comparisons exactly as the theorems state them.

use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionSpace {
    /// L²(ℝ).
    L2,
    /// H¹₀ ∩ C¹₀: continuous fields vanishing at 0 with bounded one-sided C¹ data.
    H1ZeroC10,
    /// H¹₀: H¹ fields vanishing at 0.
    H1Zero,
}

impl FunctionSpace {
    pub const ALL: [FunctionSpace; 3] =
        [FunctionSpace::L2, FunctionSpace::H1ZeroC10, FunctionSpace::H1Zero];

    pub fn label(&self) -> &'static str {
        match self {
            FunctionSpace::L2 => "l2",
            FunctionSpace::H1ZeroC10 => "h1zeroc10",
            FunctionSpace::H1Zero => "h1zero",
        }
    }

    pub fn parse(s: &str) -> Option<FunctionSpace> {
        match s.to_ascii_lowercase().as_str() {
            "l2" => Some(FunctionSpace::L2),
            "h1zeroc10" => Some(FunctionSpace::H1ZeroC10),
            "h1zero" => Some(FunctionSpace::H1Zero),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Point,
    Continuous,
    Residual,
    Resolvent,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Point => "point",
            Verdict::Continuous => "continuous",
            Verdict::Residual => "residual",
            Verdict::Resolvent => "resolvent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralClassification {
    pub lambda: Complex64,
    pub space: FunctionSpace,
    pub verdict: Verdict,
}

pub fn classify_lambda(lambda: Complex64, space: FunctionSpace) -> SpectralClassification {
    let re = lambda.re.abs();
    let verdict = match space {
        FunctionSpace::L2 => {
            if re == 0.0 || re == 2.0 {
                Verdict::Continuous
            } else if re < 2.0 {
                Verdict::Point
            } else {
                Verdict::Resolvent
            }
        }
        FunctionSpace::H1ZeroC10 => {
            if re == 0.0 || re == 1.0 {
                Verdict::Continuous
            } else if re < 1.0 {
                Verdict::Residual
            } else {
                Verdict::Resolvent
            }
        }
        FunctionSpace::H1Zero => {
            if re == 0.0 {
                Verdict::Continuous
            } else {
                Verdict::Resolvent
            }
        }
    };
    SpectralClassification { lambda, space, verdict }
}
