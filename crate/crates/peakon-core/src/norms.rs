//! Grid-function norms: full-line and half-line L², H¹, and W^{1,∞}.
//!
//! Integral norms use the composite trapezoid rule. H¹ integrates |v′|² per
//! half-line with the one-sided derivative value at the ξ = 0 endpoint, so a
//! derivative jump at the peak never leaks across. W^{1,∞} takes the sup of
//! |v| and of the one-sided derivative samples (both one-sided limits at the
//! peak included, but no stencil reaching across it).

use crate::grid::GridFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormKind {
    L2Full,
    L2Plus,
    L2Minus,
    H1,
    W1Inf,
}

impl NormKind {
    pub const ALL: [NormKind; 5] = [
        NormKind::L2Full,
        NormKind::L2Plus,
        NormKind::L2Minus,
        NormKind::H1,
        NormKind::W1Inf,
    ];

    pub fn label(&self) -> &'static str {
        match self {
            NormKind::L2Full => "l2_full",
            NormKind::L2Plus => "l2_plus",
            NormKind::L2Minus => "l2_minus",
            NormKind::H1 => "h1",
            NormKind::W1Inf => "w1inf",
        }
    }
}

pub fn norm(v: &GridFunction, kind: NormKind) -> f64 {
    let spec = v.spec();
    let h = spec.spacing();
    let c = spec.center_index();
    let sq: Vec<f64> = v.values().iter().map(|z| z.norm_sqr()).collect();
    match kind {
        NormKind::L2Full => trapezoid_uniform(&sq, h).sqrt(),
        NormKind::L2Plus => trapezoid_uniform(&sq[c..], h).sqrt(),
        NormKind::L2Minus => trapezoid_uniform(&sq[..=c], h).sqrt(),
        NormKind::H1 => {
            let d = v.derivative_values();
            let mut dsq: Vec<f64> = d.iter().map(|z| z.norm_sqr()).collect();
            // minus half-line sees the left one-sided derivative at 0,
            // plus half-line the right one
            dsq[c] = v.left_deriv_at_zero().norm_sqr();
            let minus = trapezoid_uniform(&dsq[..=c], h);
            dsq[c] = v.right_deriv_at_zero().norm_sqr();
            let plus = trapezoid_uniform(&dsq[c..], h);
            (trapezoid_uniform(&sq, h) + minus + plus).sqrt()
        }
        NormKind::W1Inf => {
            let sup_v = v.max_abs();
            let d = v.derivative_values();
            let mut sup_d = v
                .left_deriv_at_zero()
                .norm()
                .max(v.right_deriv_at_zero().norm());
            for (i, z) in d.iter().enumerate() {
                if i != c {
                    sup_d = sup_d.max(z.norm());
                }
            }
            sup_v.max(sup_d)
        }
    }
}

/// Composite trapezoid with uniform spacing: h·(y₀/2 + y₁ + … + y_{m−1}/2).
pub fn trapezoid_uniform(ys: &[f64], h: f64) -> f64 {
    if ys.len() < 2 {
        return 0.0;
    }
    let inner: f64 = ys[1..ys.len() - 1].iter().sum();
    h * (0.5 * (ys[0] + ys[ys.len() - 1]) + inner)
}

/// Trapezoid on an arbitrary (sorted) node set.
pub fn trapezoid_nodes(xs: &[f64], ys: &[f64]) -> f64 {
    assert_eq!(xs.len(), ys.len());
    let mut acc = 0.0;
    for i in 1..xs.len() {
        acc += 0.5 * (ys[i] + ys[i - 1]) * (xs[i] - xs[i - 1]);
    }
    acc
}
