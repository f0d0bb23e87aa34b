//! Convolution against the Green kernel φ = e^{−|ξ|} of 1 − ∂², and against
//! its derivative kernel φ′ = −sign(ξ)e^{−|ξ|}.
//!
//! The map g ↦ ½·(φ∗g) inverts 1 − ∂² on decaying data. Both convolutions are
//! trapezoid quadratures of the convolution integral, evaluated in O(n) by
//! exponential recursion: with P_i the left accumulation Σ_{j≤i} w_j e^{−(ξ_i−ξ_j)} g_j
//! and Q_i the right one, P_i = e^{−h} P_{i−1} + w_i g_i, and
//!
//!   (φ ∗ g)(ξ_i)  ≈ h (P_i + Q_i − w_i g_i),
//!   (φ′ ∗ g)(ξ_i) ≈ h (Q_i − P_i)          (the j = i term carries φ′(0) := 0).
//!
//! These equal the direct O(n²) trapezoid sums up to roundoff; the direct sums
//! serve as the test oracle.

use num_complex::Complex64;

use crate::grid::GridFunction;

fn accumulate(g: &[f64], h: f64) -> (Vec<f64>, Vec<f64>) {
    let n = g.len();
    let decay = (-h).exp();
    let weight = |i: usize| if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
    let mut left = vec![0.0; n];
    let mut right = vec![0.0; n];
    left[0] = weight(0) * g[0];
    for i in 1..n {
        left[i] = decay * left[i - 1] + weight(i) * g[i];
    }
    right[n - 1] = weight(n - 1) * g[n - 1];
    for i in (0..n - 1).rev() {
        right[i] = decay * right[i + 1] + weight(i) * g[i];
    }
    (left, right)
}

/// Trapezoid approximation of (φ ∗ g)(ξ_i) on the grid, real samples.
pub fn phi_convolve(g: &[f64], h: f64) -> Vec<f64> {
    let n = g.len();
    let (left, right) = accumulate(g, h);
    let weight = |i: usize| if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
    (0..n).map(|i| h * (left[i] + right[i] - weight(i) * g[i])).collect()
}

/// Trapezoid approximation of (φ′ ∗ g)(ξ_i) on the grid, real samples.
pub fn phi_prime_convolve(g: &[f64], h: f64) -> Vec<f64> {
    let n = g.len();
    let (left, right) = accumulate(g, h);
    let weight = |i: usize| if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
    // remove the diagonal term from each accumulation; φ′(0) contributes nothing
    (0..n)
        .map(|i| {
            let w = weight(i) * g[i];
            h * ((right[i] - w) - (left[i] - w))
        })
        .collect()
}

/// ½·(φ ∗ g): the solution w of (1 − ∂²)w = g on decaying data.
pub fn helmholtz_green_convolve(g: &GridFunction) -> GridFunction {
    let spec = g.spec();
    let h = spec.spacing();
    let re: Vec<f64> = g.values().iter().map(|z| z.re).collect();
    let im: Vec<f64> = g.values().iter().map(|z| z.im).collect();
    let wre = phi_convolve(&re, h);
    let wim = phi_convolve(&im, h);
    let values = wre
        .iter()
        .zip(&wim)
        .map(|(&a, &b)| 0.5 * Complex64::new(a, b))
        .collect();
    GridFunction::from_values(spec, values).expect("length preserved")
}

/// Relative size of g at the truncation boundary; large values mean the
/// convolution tail ∫_{|y|>X} has been dropped on non-negligible data.
pub fn truncation_defect(g: &GridFunction) -> f64 {
    let n = g.spec().n_points();
    let ends = g.values()[0].norm().max(g.values()[n - 1].norm());
    let scale = g.max_abs();
    if scale == 0.0 {
        0.0
    } else {
        ends / scale
    }
}

/// Discrete (1 − D²) with the standard central second difference, for
/// verifying the Green identity on interior nodes.
pub fn one_minus_second_difference(w: &GridFunction) -> GridFunction {
    let spec = w.spec();
    let h = spec.spacing();
    let v = w.values();
    let n = v.len();
    let mut out = v.to_vec();
    for i in 1..n - 1 {
        let second = (v[i + 1] - 2.0 * v[i] + v[i - 1]) / (h * h);
        out[i] = v[i] - second;
    }
    GridFunction::from_values(spec, out).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::profile::peakon_phi;

    fn direct_phi_convolve(g: &[f64], spec: &GridSpec, kernel: impl Fn(f64) -> f64) -> Vec<f64> {
        let n = g.len();
        let h = spec.spacing();
        let mut out = vec![0.0; n];
        for i in 0..n {
            let mut acc = 0.0;
            for j in 0..n {
                let w = if j == 0 || j == n - 1 { 0.5 } else { 1.0 };
                acc += w * kernel(spec.node(i) - spec.node(j)) * g[j];
            }
            out[i] = h * acc;
        }
        out
    }

    #[test]
    fn recursion_matches_direct_trapezoid_sum() {
        let spec = GridSpec::new(8.0, 321).unwrap();
        let g: Vec<f64> = (0..spec.n_points())
            .map(|i| {
                let x = spec.node(i);
                (x * 0.8).cos() * (-0.4 * x * x).exp()
            })
            .collect();
        let fast = phi_convolve(&g, spec.spacing());
        let slow = direct_phi_convolve(&g, &spec, peakon_phi);
        for i in 0..g.len() {
            assert!((fast[i] - slow[i]).abs() < 1e-12, "node {i}");
        }
        let fast_d = phi_prime_convolve(&g, spec.spacing());
        let slow_d = direct_phi_convolve(&g, &spec, crate::profile::peakon_phi_prime);
        for i in 0..g.len() {
            assert!((fast_d[i] - slow_d[i]).abs() < 1e-12, "derivative node {i}");
        }
    }

    #[test]
    fn zero_maps_to_zero() {
        let spec = GridSpec::new(10.0, 201).unwrap();
        let w = helmholtz_green_convolve(&GridFunction::zero(spec));
        assert_eq!(w.max_abs(), 0.0);
    }

    #[test]
    fn green_convolve_of_phi_matches_closed_form() {
        // φ∗φ = (1+|ξ|)e^{−|ξ|}, so ½φ∗φ = ½(1+|ξ|)e^{−|ξ|}.
        let check = |h: f64| -> f64 {
            let n = (2.0 * 20.0 / h).round() as usize + 1;
            let spec = GridSpec::new(20.0, n | 1).unwrap();
            let phi = GridFunction::from_real_fn(spec, peakon_phi);
            let w = helmholtz_green_convolve(&phi);
            let mut worst = 0.0f64;
            for i in 0..spec.n_points() {
                let xi = spec.node(i);
                let exact = 0.5 * (1.0 + xi.abs()) * (-xi.abs()).exp();
                worst = worst.max((w.values()[i].re - exact).abs());
            }
            worst
        };
        let coarse = check(2e-2);
        let fine = check(1e-2);
        assert!(coarse < 1e-3, "max error {coarse:e}");
        assert!(coarse / fine > 3.5, "not O(h²): {coarse:e} vs {fine:e}");
    }

    #[test]
    fn green_convolve_inverts_one_minus_d2() {
        let spec = GridSpec::new(15.0, 3001).unwrap();
        let g = GridFunction::from_real_fn(spec, |x| (-0.5 * (x - 1.0) * (x - 1.0)).exp());
        let w = helmholtz_green_convolve(&g);
        let back = one_minus_second_difference(&w);
        let h = spec.spacing();
        let mut worst = 0.0f64;
        for i in 1..spec.n_points() - 1 {
            worst = worst.max((back.values()[i] - g.values()[i]).norm());
        }
        assert!(worst <= 20.0 * h * h, "identity defect {worst:e} at h={h}");
    }

    #[test]
    fn truncation_defect_flags_slow_decay() {
        let spec = GridSpec::new(10.0, 201).unwrap();
        let wide = GridFunction::from_real_fn(spec, |_| 1.0);
        assert!(truncation_defect(&wide) > 0.9);
        let narrow = GridFunction::from_real_fn(spec, |x| (-x * x).exp());
        assert!(truncation_defect(&narrow) < 1e-12);
    }
}
