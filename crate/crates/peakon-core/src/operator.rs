//! The linearized transport operator L = (1 − φ²)∂ξ + φφ′ and its
//! L²-adjoint L* = −(1 − φ²)∂ξ + 3φφ′.
//!
//! Both act nodewise through one-sided stencils. At the peak the transport
//! coefficient vanishes and the zeroth-order coefficient uses the φ′(0) := 0
//! convention, so the operator row at ξ = 0 evaluates to zero; the node is
//! non-classical and excluded from residual measurements.

use num_complex::Complex64;

use crate::error::CoreError;
use crate::grid::{GridFunction, GridSpec};
use crate::profile::{one_minus_phi_sq, phi_phi_prime};

/// Coefficient samples of L (and L*) bound to one grid.
#[derive(Debug, Clone)]
pub struct PeakonOperator {
    spec: GridSpec,
    transport: Vec<f64>,   // 1 − φ²
    zeroth: Vec<f64>,      // φφ′
}

impl PeakonOperator {
    pub fn new(spec: GridSpec) -> Self {
        let transport = (0..spec.n_points()).map(|i| one_minus_phi_sq(spec.node(i))).collect();
        let zeroth = (0..spec.n_points()).map(|i| phi_phi_prime(spec.node(i))).collect();
        PeakonOperator { spec, transport, zeroth }
    }

    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    /// (1 − φ²)v′ + φφ′v.
    pub fn apply(&self, v: &GridFunction) -> Result<GridFunction, CoreError> {
        self.apply_impl(v, false)
    }

    /// −(1 − φ²)v′ + 3φφ′v.
    pub fn apply_adjoint(&self, v: &GridFunction) -> Result<GridFunction, CoreError> {
        self.apply_impl(v, true)
    }

    fn apply_impl(&self, v: &GridFunction, adjoint: bool) -> Result<GridFunction, CoreError> {
        if v.spec() != self.spec {
            return Err(CoreError::GridMismatch);
        }
        let d = v.derivative_values();
        let vals = v.values();
        let mut out = Vec::with_capacity(vals.len());
        for i in 0..vals.len() {
            let (sign, weight) = if adjoint { (-1.0, 3.0) } else { (1.0, 1.0) };
            out.push(sign * self.transport[i] * d[i] + weight * self.zeroth[i] * vals[i]);
        }
        // transport vanishes at the peak and φφ′(0) := 0, so the row is zero there
        out[self.spec.center_index()] = Complex64::new(0.0, 0.0);
        GridFunction::from_values(self.spec, out)
    }
}

/// One-shot L application (builds the coefficient samples on v's own grid).
pub fn apply_l(v: &GridFunction) -> GridFunction {
    PeakonOperator::new(v.spec()).apply(v).expect("same grid")
}

/// One-shot L* application.
pub fn apply_l_adjoint(v: &GridFunction) -> GridFunction {
    PeakonOperator::new(v.spec()).apply_adjoint(v).expect("same grid")
}

/// Trapezoid L² pairing ⟨u, w⟩ = ∫ u·conj(w).
pub fn inner_product(u: &GridFunction, w: &GridFunction) -> Complex64 {
    assert_eq!(u.spec(), w.spec());
    let h = u.spec().spacing();
    let n = u.spec().n_points();
    let mut acc = Complex64::new(0.0, 0.0);
    for i in 0..n {
        let weight = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        acc += weight * u.values()[i] * w.values()[i].conj();
    }
    acc * h
}
