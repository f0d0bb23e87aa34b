//! Uniform truncated grids on [−X, X] and complex-valued grid functions.
//!
//! The node count is odd so that ξ = 0 is exactly a grid node: the peakon
//! profile has a derivative jump there, and every differentiation stencil in
//! this crate works one-sided per half-line, never differencing across 0.

use num_complex::Complex64;

use crate::error::CoreError;

/// Uniform symmetric grid on [−X, X] with an odd number of nodes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    half_width: f64,
    n_points: usize,
}

impl GridSpec {
    pub fn new(half_width: f64, n_points: usize) -> Result<Self, CoreError> {
        if !(half_width.is_finite() && half_width > 0.0) {
            return Err(CoreError::InvalidGrid(format!(
                "half width must be positive and finite, got {half_width}"
            )));
        }
        if n_points < 3 {
            return Err(CoreError::InvalidGrid(format!(
                "need at least 3 nodes, got {n_points}"
            )));
        }
        if n_points % 2 == 0 {
            return Err(CoreError::InvalidGrid(format!(
                "node count must be odd so that xi = 0 is a node, got {n_points}"
            )));
        }
        Ok(GridSpec { half_width, n_points })
    }

    pub fn half_width(&self) -> f64 {
        self.half_width
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    /// Node spacing h = 2X/(n−1).
    pub fn spacing(&self) -> f64 {
        2.0 * self.half_width / (self.n_points - 1) as f64
    }

    /// Index of the ξ = 0 node.
    pub fn center_index(&self) -> usize {
        (self.n_points - 1) / 2
    }

    /// i-th node. Computed as (i − center)·h so that node(center) is exactly 0
    /// and the grid is exactly reflection-symmetric in floating point.
    pub fn node(&self, i: usize) -> f64 {
        (i as f64 - self.center_index() as f64) * self.spacing()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.node(i)).collect()
    }
}

/// Complex samples on a [`GridSpec`], plus one-sided derivative data at ξ = 0.
///
/// The one-sided derivatives are second-order stencils by default; callers
/// with analytic knowledge (closed-form eigenfunctions, chain-rule evolution)
/// may prescribe them instead.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    spec: GridSpec,
    values: Vec<Complex64>,
    left_deriv_at_zero: Complex64,
    right_deriv_at_zero: Complex64,
}

impl GridFunction {
    pub fn from_values(spec: GridSpec, values: Vec<Complex64>) -> Result<Self, CoreError> {
        if values.len() != spec.n_points() {
            return Err(CoreError::LengthMismatch {
                expected: spec.n_points(),
                got: values.len(),
            });
        }
        let (l, r) = one_sided_derivs_at_center(&spec, &values);
        Ok(GridFunction {
            spec,
            values,
            left_deriv_at_zero: l,
            right_deriv_at_zero: r,
        })
    }

    /// Sample a complex-valued function of ξ.
    pub fn from_fn(spec: GridSpec, f: impl Fn(f64) -> Complex64) -> Self {
        let values = (0..spec.n_points()).map(|i| f(spec.node(i))).collect();
        Self::from_values(spec, values).expect("length matches by construction")
    }

    /// Sample a real-valued function of ξ.
    pub fn from_real_fn(spec: GridSpec, f: impl Fn(f64) -> f64) -> Self {
        Self::from_fn(spec, |x| Complex64::new(f(x), 0.0))
    }

    pub fn zero(spec: GridSpec) -> Self {
        Self::from_values(spec, vec![Complex64::new(0.0, 0.0); spec.n_points()]).unwrap()
    }

    /// Replace the stencil-computed one-sided derivatives at 0 with prescribed values.
    pub fn with_derivs_at_zero(mut self, left: Complex64, right: Complex64) -> Self {
        self.left_deriv_at_zero = left;
        self.right_deriv_at_zero = right;
        self
    }

    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value_at_zero(&self) -> Complex64 {
        self.values[self.spec.center_index()]
    }

    pub fn left_deriv_at_zero(&self) -> Complex64 {
        self.left_deriv_at_zero
    }

    pub fn right_deriv_at_zero(&self) -> Complex64 {
        self.right_deriv_at_zero
    }

    /// Nodewise derivative by one-sided stencils: backward on ξ < 0, forward
    /// on ξ > 0, so no stencil reaches across the peak. The center slot holds
    /// the mean of the two one-sided values; integral norms use the one-sided
    /// values directly.
    pub fn derivative_values(&self) -> Vec<Complex64> {
        derivative_one_sided(&self.spec, &self.values)
    }

    /// ξ ↦ −ξ. Values reverse; one-sided derivatives at 0 swap and flip sign.
    pub fn reflect(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        GridFunction {
            spec: self.spec,
            values,
            left_deriv_at_zero: -self.right_deriv_at_zero,
            right_deriv_at_zero: -self.left_deriv_at_zero,
        }
    }

    /// Largest |value| over the grid.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// One-sided derivative samples for a value array on `spec`.
///
/// Interior stencils are second order. The two outermost nodes on each side
/// fall back to first order (there is no third point on their half-line side);
/// fields of interest decay to ~1e−9 there at the default X = 20.
pub fn derivative_one_sided(spec: &GridSpec, values: &[Complex64]) -> Vec<Complex64> {
    let n = spec.n_points();
    let c = spec.center_index();
    let h = spec.spacing();
    let mut out = vec![Complex64::new(0.0, 0.0); n];
    for i in 0..n {
        out[i] = if i < c {
            backward_deriv(values, i, h)
        } else if i > c {
            forward_deriv(values, i, n, h)
        } else {
            let (l, r) = one_sided_derivs_at_center(spec, values);
            0.5 * (l + r)
        };
    }
    out
}

fn forward_deriv(v: &[Complex64], i: usize, n: usize, h: f64) -> Complex64 {
    if i + 2 < n {
        (-3.0 * v[i] + 4.0 * v[i + 1] - v[i + 2]) / (2.0 * h)
    } else if i + 1 < n {
        (v[i + 1] - v[i]) / h
    } else {
        (v[i] - v[i - 1]) / h
    }
}

fn backward_deriv(v: &[Complex64], i: usize, h: f64) -> Complex64 {
    if i >= 2 {
        (3.0 * v[i] - 4.0 * v[i - 1] + v[i - 2]) / (2.0 * h)
    } else if i >= 1 {
        (v[i] - v[i - 1]) / h
    } else {
        (v[i + 1] - v[i]) / h
    }
}

fn one_sided_derivs_at_center(spec: &GridSpec, values: &[Complex64]) -> (Complex64, Complex64) {
    let c = spec.center_index();
    let h = spec.spacing();
    let left = backward_deriv(values, c, h);
    let right = forward_deriv(values, c, values.len(), h);
    (left, right)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn center_node_is_exactly_zero() {
        for &(x, n) in &[(20.0, 4001usize), (7.0, 31), (13.3, 999)] {
            let g = GridSpec::new(x, n).unwrap();
            assert_eq!(g.node(g.center_index()), 0.0);
            // exact reflection symmetry of the node set
            for k in 0..g.center_index() {
                assert_eq!(g.node(g.center_index() - k - 1), -g.node(g.center_index() + k + 1));
            }
        }
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(GridSpec::new(0.0, 11).is_err());
        assert!(GridSpec::new(-1.0, 11).is_err());
        assert!(GridSpec::new(10.0, 10).is_err());
        assert!(GridSpec::new(10.0, 1).is_err());
        assert!(GridSpec::new(f64::NAN, 11).is_err());
    }

    #[test]
    fn one_sided_derivatives_are_second_order_on_smooth_data() {
        let errs: Vec<f64> = [1e-2f64, 5e-3]
            .iter()
            .map(|&h| {
                let n = (2.0 * 5.0 / h).round() as usize + 1;
                let g = GridSpec::new(5.0, n | 1).unwrap();
                let f = GridFunction::from_real_fn(g, |x| (0.7 * x).sin());
                let d = f.derivative_values();
                let mut worst = 0.0f64;
                for i in 3..g.n_points() - 3 {
                    let exact = 0.7 * (0.7 * g.node(i)).cos();
                    worst = worst.max((d[i].re - exact).abs());
                }
                worst
            })
            .collect();
        assert!(errs[0] < 1e-3, "h=1e-2 error {}", errs[0]);
        // observed order ~2
        let order = (errs[0] / errs[1]).log2();
        assert!(order > 1.8, "observed order {order}");
    }

    #[test]
    fn reflect_is_an_involution_and_flips_derivs() {
        let g = GridSpec::new(4.0, 41).unwrap();
        let f = GridFunction::from_real_fn(g, |x| x * (-x.abs()).exp());
        let rr = f.reflect().reflect();
        assert_eq!(f.values(), rr.values());
        let r = f.reflect();
        assert_eq!(r.left_deriv_at_zero(), -f.right_deriv_at_zero());
    }
}
