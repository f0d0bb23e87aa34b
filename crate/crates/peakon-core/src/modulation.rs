//! The modulation transform between a perturbation v and its gauged form
//! ṽ = v − v(0)·φ with ṽ(0) = 0.
//!
//! Subtracting v(0)·φ absorbs the translation mode of the peak; the gauged
//! field evolves by ṽ_t = Lṽ with no forcing term. The modulation speed is
//! a′(t) = 2·v(0, t) at linear order.

use num_complex::Complex64;

use crate::error::CoreError;
use crate::grid::GridFunction;
use crate::profile::{peakon_phi, peakon_phi_prime_at_zero};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModulationState {
    /// v(0, t).
    pub v0: Complex64,
    /// a′(t) = 2·v(0, t) at linear order.
    pub a_rate: Complex64,
}

impl ModulationState {
    pub fn new(v0: Complex64) -> Self {
        ModulationState { v0, a_rate: 2.0 * v0 }
    }
}

/// v ↦ (ṽ, m) with ṽ = v − v(0)·φ. The center node of ṽ is exactly zero.
pub fn modulation_split(v: &GridFunction) -> (GridFunction, ModulationState) {
    let spec = v.spec();
    let v0 = v.value_at_zero();
    let mut values: Vec<Complex64> = (0..spec.n_points())
        .map(|i| v.values()[i] - v0 * peakon_phi(spec.node(i)))
        .collect();
    values[spec.center_index()] = Complex64::new(0.0, 0.0);
    let (pl, pr) = peakon_phi_prime_at_zero();
    let vtilde = GridFunction::from_values(spec, values)
        .expect("length preserved")
        .with_derivs_at_zero(
            v.left_deriv_at_zero() - v0 * pl,
            v.right_deriv_at_zero() - v0 * pr,
        );
    (vtilde, ModulationState::new(v0))
}

/// (ṽ, m) ↦ ṽ + m.v0·φ. Requires ṽ(0) = 0 up to a tolerance scaled by the
/// field size.
pub fn modulation_join(
    vtilde: &GridFunction,
    m: &ModulationState,
) -> Result<GridFunction, CoreError> {
    let gauge = vtilde.value_at_zero().norm();
    if gauge > 1e-10 * vtilde.max_abs().max(1.0) {
        return Err(CoreError::GaugeViolation { value_at_zero: gauge });
    }
    let spec = vtilde.spec();
    let values: Vec<Complex64> = (0..spec.n_points())
        .map(|i| vtilde.values()[i] + m.v0 * peakon_phi(spec.node(i)))
        .collect();
    let (pl, pr) = peakon_phi_prime_at_zero();
    Ok(GridFunction::from_values(spec, values)
        .expect("length preserved")
        .with_derivs_at_zero(
            vtilde.left_deriv_at_zero() + m.v0 * pl,
            vtilde.right_deriv_at_zero() + m.v0 * pr,
        ))
}
