//! Graded-mesh helpers for integrands with power singularities at ξ = 0.
//!
//! Closed-form eigenfunctions behave like |ξ|^(1−Re λ)/2 near the peak, so
//! uniform trapezoid stalls at low order there. Two tools cover every use in
//! the workspace:
//!
//! - `power_graded_nodes`: nodes ξ_k = (g·k)^p clustering at 0, for residual
//!   norms of singular modes;
//! - `power_substituted_integral`: ∫₀^b x^q F(x) dx with F smooth, computed by
//!   substituting x = y^(1/(1+q)) so the transformed integrand is smooth and
//!   plain trapezoid is second order again.

/// Nodes (g·k)^p for k = 1..=count with (g·count)^p = upper; excludes 0.
pub fn power_graded_nodes(upper: f64, count: usize, p: f64) -> Vec<f64> {
    let g = upper.powf(1.0 / p) / count as f64;
    (1..=count).map(|k| (g * k as f64).powf(p)).collect()
}

/// ∫₀^b x^q·F(x) dx for q > −1 and smooth F, via the substitution x = y^m,
/// m = 1/(1+q): the integrand becomes m·F(y^m) with no singularity.
pub fn power_substituted_integral(q: f64, b: f64, count: usize, f_smooth: impl Fn(f64) -> f64) -> f64 {
    assert!(q > -1.0, "non-integrable power {q}");
    let m = 1.0 / (1.0 + q);
    let y_max = b.powf(1.0 + q);
    let hy = y_max / count as f64;
    let mut acc = 0.0;
    for k in 0..=count {
        let y = hy * k as f64;
        let x = y.powf(m);
        let val = m * f_smooth(x);
        let w = if k == 0 || k == count { 0.5 } else { 1.0 };
        acc += w * val;
    }
    acc * hy
}
