//! Right side of the weak-form equation in the traveling frame,
//!
//!   u_t = c·u_ξ − u²u_ξ − ½ φ∗[(3/2·u·u_ξ² + u³)_ξ + ½·u_ξ³],
//!
//! with the outer ∂ξ of the convolution moved onto the kernel:
//! ∂ξ(φ∗g) = φ′∗g. Differencing the C¹ convolution output across the data's
//! kink would pollute the order; the kernel derivative avoids it entirely.
//!
//! u-derivatives are upwinded: the advective speed is −(c − u²) ≤ 0 on
//! peakon-sized data, information arrives from the right on both half-lines,
//! and forward stencils make the semidiscrete symbol dissipative (the
//! away-from-the-peak convention used by the operator module is downwind on
//! ξ < 0 here and blows up within a fraction of a time unit). The only
//! forward window that would straddle the peak — the node at −h — drops to
//! first order over [−h, 0], which stays inside the closed left half-line;
//! the transport coefficient ~2h there keeps the local error second order.
//! The two outermost right nodes read decay ghosts (fields are ~e^{−X} at
//! the truncation boundary).

use peakon_core::green::{phi_convolve, phi_prime_convolve};
use peakon_core::grid::{GridFunction, GridSpec};
use peakon_core::Complex64;

use crate::error::SimError;

/// Upwind (forward) derivative of real samples, with a kink detector: where
/// the centered second difference is comparable to the first differences —
/// at a derivative jump, wherever the crest currently sits — the stencil
/// drops to dissipative first-order upwind. Smooth regions keep second
/// order. Without the local dissipation, truncation noise injected at the
/// crest is amplified at the linear-instability rate ~e^t and wrecks long
/// runs. Returns the nodewise values plus the one-sided pair at the peak
/// node (used by kink-aware quadrature of the nonlinear terms).
pub(crate) fn deriv_real(spec: &GridSpec, u: &[f64]) -> (Vec<f64>, f64, f64) {
    let n = spec.n_points();
    let c = spec.center_index();
    let h = spec.spacing();
    // a node is kink-flagged when its centered second difference is
    // comparable to the neighboring first differences AND to h·(local
    // amplitude): a derivative jump has |d2| ~ h·|slope jump|, while a smooth
    // extremum has |d2| ~ h²·|u″| and must not trip
    let mut kink = vec![false; n];
    for i in 1..n - 1 {
        let d2 = u[i + 1] - 2.0 * u[i] + u[i - 1];
        let d1 = (u[i + 1] - u[i]).abs() + (u[i] - u[i - 1]).abs();
        let amp = u[i - 1].abs().max(u[i].abs()).max(u[i + 1].abs());
        kink[i] = d2.abs() > 0.25 * d1 + 1e-13 && d2.abs() > 0.25 * h * amp;
    }
    let mut d = vec![0.0; n];
    for i in 0..n {
        d[i] = if i + 2 < n {
            // the second-order window {i, i+1, i+2} must not span a kink
            if kink[i] || kink[i + 1] {
                (u[i + 1] - u[i]) / h
            } else {
                (-3.0 * u[i] + 4.0 * u[i + 1] - u[i + 2]) / (2.0 * h)
            }
        } else if i + 1 < n {
            (u[i + 1] - u[i]) / h
        } else {
            // decay ghost beyond +X
            -u[i] / h
        };
    }
    let left = (3.0 * u[c] - 4.0 * u[c - 1] + u[c - 2]) / (2.0 * h);
    let right = (-3.0 * u[c] + 4.0 * u[c + 1] - u[c + 2]) / (2.0 * h);
    // crest node: the transport coefficient changes sign with the slope jump,
    // so the principal value (mean of the one-sided slopes) is the convention
    // that does not inject jump content into the crest value
    d[c] = 0.5 * (left + right);
    (d, left, right)
}

pub(crate) fn rhs_real(spec: &GridSpec, u: &[f64], c_speed: f64) -> Result<Vec<f64>, SimError> {
    let n = spec.n_points();
    let c = spec.center_index();
    let h = spec.spacing();
    let (du, dl, dr) = deriv_real(spec, u);

    let mut g = vec![0.0; n]; // 3/2·u·u_ξ² + u³
    let mut cube = vec![0.0; n]; // u_ξ³
    for i in 0..n {
        let du_sq = if i == c { 0.5 * (dl * dl + dr * dr) } else { du[i] * du[i] };
        let du_cu = if i == c { 0.5 * (dl * dl * dl + dr * dr * dr) } else { du[i] * du[i] * du[i] };
        g[i] = 1.5 * u[i] * du_sq + u[i] * u[i] * u[i];
        cube[i] = du_cu;
    }
    let conv_g = phi_prime_convolve(&g, h);
    let conv_cube = phi_convolve(&cube, h);

    let mut out = vec![0.0; n];
    for i in 0..n {
        out[i] = (c_speed - u[i] * u[i]) * du[i] - 0.5 * conv_g[i] - 0.25 * conv_cube[i];
        if !out[i].is_finite() {
            return Err(SimError::NonFinite { xi: spec.node(i) });
        }
    }
    Ok(out)
}

/// Right side of the traveling-frame equation for a real-valued field.
pub fn weak_form_rhs(u: &GridFunction, c_speed: f64) -> Result<GridFunction, SimError> {
    let spec = u.spec();
    let samples: Vec<f64> = u.values().iter().map(|z| z.re).collect();
    let out = rhs_real(&spec, &samples, c_speed)?;
    Ok(GridFunction::from_values(
        spec,
        out.into_iter().map(|x| Complex64::new(x, 0.0)).collect(),
    )
    .expect("length preserved"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use peakon_core::fields::BumpField;
    use peakon_core::norms::{norm, NormKind};
    use peakon_core::profile::{one_minus_phi_sq, peakon_phi, peakon_phi_prime, phi_phi_prime};

    fn grid(h: f64) -> GridSpec {
        GridSpec::new(20.0, (2.0 * 20.0 / h).round() as usize | 1).unwrap()
    }

    #[test]
    fn zero_field_is_steady() {
        let g = grid(1e-2);
        let rhs = weak_form_rhs(&GridFunction::zero(g), 1.0).unwrap();
        assert_eq!(rhs.max_abs(), 0.0);
    }

    #[test]
    fn peakon_is_a_steady_state_to_first_order() {
        // residual O(h), improving under refinement with observed order ≥ 1
        let res = |h: f64| {
            let g = grid(h);
            let phi = GridFunction::from_real_fn(g, peakon_phi);
            let rhs = weak_form_rhs(&phi, 1.0).unwrap();
            norm(&rhs, NormKind::L2Full)
        };
        let coarse = res(2e-2);
        let fine = res(1e-2);
        assert!(coarse < 0.05, "steady residual {coarse:e}");
        let order = (coarse / fine).log2();
        assert!(order >= 1.0, "observed order {order}");
    }

    #[test]
    fn directional_derivative_matches_the_linearization() {
        // (rhs(φ+εw) − rhs(φ))/ε → Lw − w(0)·φ′ as ε → 0, with the target
        // evaluated fully analytically from the bump field's closed form
        let g = grid(2e-3);
        let phi: Vec<f64> = (0..g.n_points()).map(|i| peakon_phi(g.node(i))).collect();
        let w = BumpField::seeded(3, 4);
        let wv: Vec<f64> = (0..g.n_points()).map(|i| w.eval(g.node(i))).collect();
        let w0 = w.eval(0.0);
        let base = rhs_real(&g, &phi, 1.0).unwrap();
        let target: Vec<f64> = (0..g.n_points())
            .map(|i| {
                let xi = g.node(i);
                one_minus_phi_sq(xi) * w.eval_deriv(xi) + phi_phi_prime(xi) * w.eval(xi)
                    - w0 * peakon_phi_prime(xi)
            })
            .collect();

        let err_at = |eps: f64| -> f64 {
            let pert: Vec<f64> = phi.iter().zip(&wv).map(|(p, q)| p + eps * q).collect();
            let r = rhs_real(&g, &pert, 1.0).unwrap();
            let mut num = 0.0;
            for i in 0..g.n_points() {
                let dd = (r[i] - base[i]) / eps;
                num += (dd - target[i]) * (dd - target[i]) * g.spacing();
            }
            num.sqrt()
        };
        let e2 = err_at(1e-2);
        let e3 = err_at(1e-3);
        let floor = err_at(1e-5);
        assert!(e2 < 0.1, "eps=1e-2 error {e2:e}");
        let slope = (e2 / e3).log10();
        assert!(
            slope > 0.9 || e3 < 2.0 * floor,
            "slope {slope}, e3 {e3:e}, floor {floor:e}"
        );
    }

    #[test]
    fn rhs_flags_non_finite_input() {
        let g = grid(1e-1);
        let mut u = vec![0.0; g.n_points()];
        u[3] = f64::INFINITY;
        assert!(matches!(rhs_real(&g, &u, 1.0), Err(SimError::NonFinite { .. })));
    }
}
