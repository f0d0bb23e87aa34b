//! Finite-dimensional section of L = (1 − φ²)∂ξ + φφ′ and its eigenvalue
//! cloud.
//!
//! The transport term is differenced centrally inside each half-line (the
//! peak node is never straddled: the rows at ξ = ±h reach the peak node only
//! as a stencil endpoint). A diagonal similarity by (1 − φ²)^{1/2} turns each
//! half-line block into an antisymmetric matrix plus diag(φφ′), which pins
//! every eigenvalue's real part inside (−1, 1) ⊂ [−2, 2]: the cloud can
//! never leak past the spectral strip. One-sided (upwinded) differencing was
//! tried and rejected: it makes the blocks triangular, and the eigenvalues
//! collapse onto the diagonal entries b ∓ 3a/(2h) = O(1/h), two orders
//! outside the strip at n = 401.
//!
//! Boundary rows at ±X use constant outflow extrapolation (a ghost node
//! copying the boundary value), which zeroes the transport term there; the
//! two artificial eigenvalues land at φφ′(±X) ≈ ∓e^{−2X}. The peak row is
//! zero — the transport coefficient vanishes and φφ′(0) := 0 — contributing
//! one eigenvalue at 0. For the gauged spaces the row enforcing v(0) = 0
//! decouples the peak column as well.

use num_complex::Complex64;

use peakon_core::grid::GridSpec;
use peakon_core::profile::{one_minus_phi_sq, phi_phi_prime};

use crate::classify::FunctionSpace;
use crate::eig::{eigenvalues, CMat};
use crate::error::SpectralError;

pub fn discretize_l(grid: GridSpec, space: FunctionSpace) -> Result<CMat, SpectralError> {
    let n = grid.n_points();
    if n < 31 {
        return Err(SpectralError::GridTooSmall { n_points: n });
    }
    let c = grid.center_index();
    let h = grid.spacing();
    let mut m = CMat::zeros(n);
    for i in 0..n {
        if i == c {
            continue;
        }
        let xi = grid.node(i);
        let a = one_minus_phi_sq(xi);
        let b = phi_phi_prime(xi);
        m[(i, i)] = Complex64::new(b, 0.0);
        if i == 0 || i == n - 1 {
            continue; // outflow closure: transport drops at the outermost rows
        }
        let w = a / (2.0 * h);
        m[(i, i - 1)] -= Complex64::new(w, 0.0);
        m[(i, i + 1)] += Complex64::new(w, 0.0);
    }
    if space != FunctionSpace::L2 {
        // gauge v(0) = 0: project the peak node out entirely
        for i in 0..n {
            m[(i, c)] = Complex64::new(0.0, 0.0);
        }
    }
    Ok(m)
}

#[derive(Debug, Clone)]
pub struct EigencloudResult {
    pub grid: GridSpec,
    pub weighting: FunctionSpace,
    /// Sorted by real part, ties by imaginary part.
    pub eigenvalues: Vec<Complex64>,
}

impl EigencloudResult {
    pub fn max_abs_re(&self) -> f64 {
        self.eigenvalues.iter().map(|z| z.re.abs()).fold(0.0, f64::max)
    }

    pub fn max_re(&self) -> f64 {
        self.eigenvalues.iter().map(|z| z.re).fold(f64::NEG_INFINITY, f64::max)
    }

    /// Largest distance from any eigenvalue to the conjugate of another.
    pub fn conjugation_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for z in &self.eigenvalues {
            let best = self
                .eigenvalues
                .iter()
                .map(|w| (w - z.conj()).norm())
                .fold(f64::MAX, f64::min);
            worst = worst.max(best);
        }
        worst
    }
}

pub fn eigencloud(grid: GridSpec, space: FunctionSpace) -> Result<EigencloudResult, SpectralError> {
    let m = discretize_l(grid, space)?;
    let vals = eigenvalues(&m)?;
    Ok(EigencloudResult { grid, weighting: space, eigenvalues: vals })
}
