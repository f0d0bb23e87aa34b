//! Exact evolution of the gauged linearized equation ṽ_t = Lṽ.
//!
//! The solution is reconstructed on the fixed ξ-grid from the closed-form
//! characteristics: for each node, pull back to the label s, read the initial
//! data there, and scale by the amplitude factor. Off-node initial values come
//! from one-sided cubic interpolation on the node's half-line; the window
//! never includes the ξ = 0 node, whose stored value is the gauge value and
//! not a one-sided limit (initial data in Dom(L) ⊂ L² may jump at the peak).
//!
//! Derivatives of the evolved field use the chain rule
//! ṽ_ξ(q(s,t), t) = √D·(𝔳₀′(s) + r·𝔳₀(s)) with the closed-form Jacobian,
//! never numerical differencing across the compressed region near the peak.

use num_complex::Complex64;

use peakon_core::grid::{GridFunction, GridSpec};

use crate::characteristics::{
    characteristic_inverse, d_squared_minus, d_squared_plus, derivative_mix_factor,
};
use crate::error::EvolveError;

/// Evolved field on the fixed grid plus its chain-rule derivative samples.
#[derive(Debug, Clone)]
pub struct EvolvedField {
    pub field: GridFunction,
    /// ṽ_ξ at each grid node (one-sided limits at the peak are stored on the
    /// field's derivative slots).
    pub derivative: Vec<Complex64>,
}

/// Initial data seen as a pair of one-sided functions of the label.
pub trait InitialData {
    fn value(&self, s: f64) -> Complex64;
    fn deriv(&self, s: f64) -> Complex64;
    /// One-sided slopes (𝔳₀′(0⁻), 𝔳₀′(0⁺)).
    fn slopes_at_zero(&self) -> (Complex64, Complex64);
}

/// Closed-form initial data given by closures, with the one-sided slopes at
/// the peak supplied explicitly (a closure cannot distinguish 0⁻ from 0⁺).
pub struct AnalyticData<F, G> {
    pub value: F,
    pub deriv: G,
    pub slope_left: Complex64,
    pub slope_right: Complex64,
}

impl<F, G> InitialData for AnalyticData<F, G>
where
    F: Fn(f64) -> Complex64,
    G: Fn(f64) -> Complex64,
{
    fn value(&self, s: f64) -> Complex64 {
        (self.value)(s)
    }
    fn deriv(&self, s: f64) -> Complex64 {
        (self.deriv)(s)
    }
    fn slopes_at_zero(&self) -> (Complex64, Complex64) {
        (self.slope_left, self.slope_right)
    }
}

/// Sampled initial data read through one-sided cubic interpolation.
pub struct SampledData<'a> {
    v0: &'a GridFunction,
    interp: peakon_core::interp::HalfLineCubic<'a>,
}

impl<'a> SampledData<'a> {
    pub fn new(v0: &'a GridFunction) -> Self {
        SampledData { v0, interp: peakon_core::interp::HalfLineCubic::new(v0) }
    }
}

impl<'a> InitialData for SampledData<'a> {
    fn value(&self, s: f64) -> Complex64 {
        self.interp.value(s)
    }
    fn deriv(&self, s: f64) -> Complex64 {
        self.interp.value_and_deriv(s).1
    }
    fn slopes_at_zero(&self) -> (Complex64, Complex64) {
        (self.v0.left_deriv_at_zero(), self.v0.right_deriv_at_zero())
    }
}

fn check_gauge(v0: &GridFunction) -> Result<(), EvolveError> {
    let gauge = v0.value_at_zero().norm();
    if gauge > 1e-10 * v0.max_abs().max(1.0) {
        return Err(EvolveError::GaugeViolation { value_at_zero: gauge });
    }
    Ok(())
}

/// Evolve arbitrary initial data to time t on `grid`.
pub fn evolve_data(data: &impl InitialData, grid: GridSpec, t: f64) -> Result<EvolvedField, EvolveError> {
    if !(t >= 0.0) {
        return Err(EvolveError::NegativeTime { t });
    }
    let n = grid.n_points();
    let c = grid.center_index();
    let mut values = vec![Complex64::new(0.0, 0.0); n];
    let mut derivative = vec![Complex64::new(0.0, 0.0); n];
    for i in 0..n {
        if i == c {
            continue; // gauge: ṽ(0, t) = 0 for all t
        }
        let xi = grid.node(i);
        let s = characteristic_inverse(xi, t);
        let d_sq = if s > 0.0 { d_squared_plus(s, t) } else { d_squared_minus(s, t) };
        let sqrt_d = d_sq.sqrt();
        let v = data.value(s);
        values[i] = v / sqrt_d;
        let r = derivative_mix_factor(s, t);
        derivative[i] = sqrt_d * (data.deriv(s) + r * v);
    }
    // one-sided chain-rule limits at the peak: √D(0∓) = e^{∓t}
    let (slope_l, slope_r) = data.slopes_at_zero();
    let left = (-t).exp() * slope_l;
    let right = t.exp() * slope_r;
    derivative[c] = 0.5 * (left + right);
    let field = GridFunction::from_values(grid, values)
        .expect("length matches")
        .with_derivs_at_zero(left, right);
    Ok(EvolvedField { field, derivative })
}

/// Evolve sampled initial data in the ṽ-gauge; returns field and derivatives.
pub fn evolve_linear_full(v0: &GridFunction, t: f64) -> Result<EvolvedField, EvolveError> {
    check_gauge(v0)?;
    if t == 0.0 {
        let derivative = v0.derivative_values();
        return Ok(EvolvedField { field: v0.clone(), derivative });
    }
    evolve_data(&SampledData::new(v0), v0.spec(), t)
}

/// Evolve sampled initial data in the ṽ-gauge; field only.
pub fn evolve_linear(v0: &GridFunction, t: f64) -> Result<GridFunction, EvolveError> {
    Ok(evolve_linear_full(v0, t)?.field)
}
