//! Norm time series of the linearized flow and exponential-rate fits.
//!
//! The flow distorts the two half-lines in opposite ways, and the quadrature
//! coordinates follow suit:
//!
//! - On ξ > 0 data advects into the peak and features compress to width
//!   ~e^{−2t} in ξ, but stay O(1)-wide in the label s. Plus-half norms are
//!   integrated in label coordinates: with ξ = q(s,t) and q_s = 1/D,
//!   ∫|ṽ|²dξ = ∫|𝔳₀(s)|²/D² ds and ∫|ṽ_ξ|²dξ = ∫|𝔳₀′ + r·𝔳₀|² ds, sampled
//!   on the fixed label grid with no interpolation. Pointwise domination
//!   (D₊ increasing in t) makes the discrete L²(0,∞) decay exact.
//!
//! - On ξ < 0 the map expands a shrinking label neighborhood of the peak, so
//!   the label-space integrands develop e^{−2t}-wide features while the
//!   ξ-space field stays O(1)-smooth. Minus-half norms integrate the
//!   reconstructed field on the ξ-grid with its chain-rule derivatives.
//!
//! Sups for W^{1,∞} combine both samplings plus the one-sided limits at the
//! peak.

use peakon_core::grid::GridFunction;
use peakon_core::norms::{trapezoid_uniform, NormKind};

use crate::characteristics::{d_squared_plus, derivative_mix_factor};
use crate::error::EvolveError;
use crate::evolve::evolve_linear_full;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormRecord {
    pub l2_full: f64,
    pub l2_plus: f64,
    pub l2_minus: f64,
    pub h1: f64,
    pub w1inf: f64,
}

impl NormRecord {
    pub fn get(&self, kind: NormKind) -> f64 {
        match kind {
            NormKind::L2Full => self.l2_full,
            NormKind::L2Plus => self.l2_plus,
            NormKind::L2Minus => self.l2_minus,
            NormKind::H1 => self.h1,
            NormKind::W1Inf => self.w1inf,
        }
    }
}

/// Time-indexed record of the five norms of an evolving field.
#[derive(Debug, Clone)]
pub struct NormSeries {
    pub times: Vec<f64>,
    pub records: Vec<NormRecord>,
}

impl NormSeries {
    pub fn column(&self, kind: NormKind) -> Vec<f64> {
        self.records.iter().map(|r| r.get(kind)).collect()
    }
}

/// All five norms of the evolved field at time t.
pub fn norms_at(v0: &GridFunction, t: f64) -> Result<NormRecord, EvolveError> {
    if !(t >= 0.0) {
        return Err(EvolveError::NegativeTime { t });
    }
    let spec = v0.spec();
    let h = spec.spacing();
    let c = spec.center_index();
    let n = spec.n_points();
    let vals = v0.values();
    let derivs = v0.derivative_values();

    // plus half: label-space integrands on the fixed grid
    let mut l2_int = vec![0.0; n - c];
    let mut h1d_int = vec![0.0; n - c];
    let mut sup_v = 0.0f64;
    let mut sup_d = 0.0f64;
    for i in c..n {
        let s = spec.node(i);
        let k = i - c;
        if i == c {
            continue; // gauge endpoint; one-sided limit added below
        }
        let d_sq = d_squared_plus(s, t);
        let r = derivative_mix_factor(s, t);
        let v = vals[i];
        l2_int[k] = v.norm_sqr() / (d_sq * d_sq);
        let slope = derivs[i] + r * v;
        h1d_int[k] = slope.norm_sqr();
        sup_v = sup_v.max(v.norm() / d_sq.sqrt());
        sup_d = sup_d.max(d_sq.sqrt() * slope.norm());
    }
    // label integrand |𝔳₀′ + r𝔳₀|² tends to |𝔳₀′(0⁺)|² at the s = 0 endpoint;
    // the ξ-space one-sided slope e^t·𝔳₀′(0⁺) only enters the sup
    let slope_right = t.exp() * v0.right_deriv_at_zero().norm();
    h1d_int[0] = v0.right_deriv_at_zero().norm_sqr();
    let l2_plus_sq = trapezoid_uniform(&l2_int, h);
    let h1d_plus = trapezoid_uniform(&h1d_int, h);

    // minus half: reconstructed field on the ξ-grid with chain-rule derivatives
    let ev = evolve_linear_full(v0, t)?;
    let minus_vals_sq: Vec<f64> = ev.field.values()[..=c].iter().map(|z| z.norm_sqr()).collect();
    let mut minus_deriv_sq: Vec<f64> = ev.derivative[..=c].iter().map(|z| z.norm_sqr()).collect();
    let slope_left = ev.field.left_deriv_at_zero().norm();
    minus_deriv_sq[c] = slope_left * slope_left;
    let l2_minus_sq = trapezoid_uniform(&minus_vals_sq, h);
    let h1d_minus = trapezoid_uniform(&minus_deriv_sq, h);
    for i in 0..c {
        sup_v = sup_v.max(ev.field.values()[i].norm());
        sup_d = sup_d.max(ev.derivative[i].norm());
    }
    sup_d = sup_d.max(slope_left).max(slope_right);

    Ok(NormRecord {
        l2_full: (l2_minus_sq + l2_plus_sq).sqrt(),
        l2_plus: l2_plus_sq.sqrt(),
        l2_minus: l2_minus_sq.sqrt(),
        h1: (l2_minus_sq + l2_plus_sq + h1d_minus + h1d_plus).sqrt(),
        w1inf: sup_v.max(sup_d),
    })
}

/// Evaluate the evolved field's norms at each requested time.
pub fn norm_series(v0: &GridFunction, times: &[f64]) -> Result<NormSeries, EvolveError> {
    for w in times.windows(2) {
        if w[1] <= w[0] {
            return Err(EvolveError::TimesNotIncreasing);
        }
    }
    let records = times
        .iter()
        .map(|&t| norms_at(v0, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(NormSeries { times: times.to_vec(), records })
}

/// Least-squares exponential rate of one norm over a time window.
#[derive(Debug, Clone, Copy)]
pub struct RateFit {
    pub rate: f64,
    /// Largest |log-norm − fit| over the window.
    pub residual: f64,
}

pub fn growth_rate_fit(
    series: &NormSeries,
    kind: NormKind,
    window: (f64, f64),
) -> Result<RateFit, EvolveError> {
    let mut ts = Vec::new();
    let mut logs = Vec::new();
    for (i, &t) in series.times.iter().enumerate() {
        if t < window.0 - 1e-12 || t > window.1 + 1e-12 {
            continue;
        }
        let value = series.records[i].get(kind);
        if !(value > 0.0) {
            return Err(EvolveError::NonPositiveNorm { t, value });
        }
        ts.push(t);
        logs.push(value.ln());
    }
    if ts.len() < 2 {
        return Err(EvolveError::WindowTooSmall);
    }
    let n = ts.len() as f64;
    let mean_t = ts.iter().sum::<f64>() / n;
    let mean_l = logs.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var = 0.0;
    for (&t, &l) in ts.iter().zip(&logs) {
        cov += (t - mean_t) * (l - mean_l);
        var += (t - mean_t) * (t - mean_t);
    }
    let rate = cov / var;
    let intercept = mean_l - rate * mean_t;
    let residual = ts
        .iter()
        .zip(&logs)
        .map(|(&t, &l)| (l - rate * t - intercept).abs())
        .fold(0.0, f64::max);
    Ok(RateFit { rate, residual })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolve::evolve_linear_full;
    use peakon_core::fields::BumpField;
    use peakon_core::grid::GridSpec;
    use peakon_core::norms::norm;

    fn grid(h: f64) -> GridSpec {
        let n = (2.0 * 20.0 / h).round() as usize | 1;
        GridSpec::new(20.0, n).unwrap()
    }

    #[test]
    fn jump_eigenmode_grows_at_its_eigenvalue_in_l2_minus() {
        // ṽ(·,t) = e^t·𝔳₀ pointwise for the λ₀ = 1 mode, so the discrete
        // L²(−∞,0) ratio of the reconstructed field is e^t up to the
        // pointwise reconstruction error.
        let g = grid(1e-3);
        let v0 = GridFunction::from_real_fn(g, |x| if x < 0.0 { x.exp() } else { 0.0 });
        let times = [0.5, 1.0, 2.0, 3.0];
        let base = norm(&v0, NormKind::L2Minus);
        let series = norm_series(&v0, &times).unwrap();
        for (i, &t) in times.iter().enumerate() {
            let ratio = series.records[i].l2_minus / base;
            let expect = t.exp();
            assert!(
                (ratio / expect - 1.0).abs() < 1e-6,
                "t={t}: ratio {ratio} vs {expect}"
            );
        }
        let fit = growth_rate_fit(&series, NormKind::L2Minus, (0.5, 3.0)).unwrap();
        assert!((fit.rate - 1.0).abs() < 1e-4, "rate {}", fit.rate);
    }

    #[test]
    fn constant_series_fits_rate_zero() {
        let series = NormSeries {
            times: vec![0.0, 1.0, 2.0],
            records: vec![
                NormRecord { l2_full: 2.0, l2_plus: 1.0, l2_minus: 1.0, h1: 2.0, w1inf: 1.0 };
                3
            ],
        };
        let fit = growth_rate_fit(&series, NormKind::L2Full, (0.0, 2.0)).unwrap();
        assert_eq!(fit.rate, 0.0);
        assert!(fit.residual < 1e-15);
    }

    #[test]
    fn fit_rejects_nonpositive_norms_and_empty_windows() {
        let series = NormSeries {
            times: vec![0.0, 1.0],
            records: vec![
                NormRecord { l2_full: 1.0, l2_plus: 0.0, l2_minus: 1.0, h1: 1.0, w1inf: 1.0 };
                2
            ],
        };
        assert!(matches!(
            growth_rate_fit(&series, NormKind::L2Plus, (0.0, 1.0)),
            Err(EvolveError::NonPositiveNorm { .. })
        ));
        assert!(matches!(
            growth_rate_fit(&series, NormKind::L2Full, (5.0, 6.0)),
            Err(EvolveError::WindowTooSmall)
        ));
    }

    #[test]
    fn label_space_norms_match_grid_norms_at_time_zero() {
        let g = grid(1e-3);
        let v0 = BumpField::seeded(21, 4).gauged().sample(g);
        let rec = norms_at(&v0, 0.0).unwrap();
        for kind in NormKind::ALL {
            let direct = norm(&v0, kind);
            let label = rec.get(kind);
            assert!(
                (direct - label).abs() <= 1e-10 * direct.max(1.0),
                "{kind:?}: {direct} vs {label}"
            );
        }
    }

    #[test]
    fn label_space_norms_agree_with_reconstructed_grid_norms() {
        let g = grid(1e-3);
        let v0 = BumpField::seeded(2, 4).gauged().sample(g);
        let t = 1.2;
        let rec = norms_at(&v0, t).unwrap();
        let ev = evolve_linear_full(&v0, t).unwrap();
        let grid_l2 = norm(&ev.field, NormKind::L2Full);
        assert!(
            (rec.l2_full - grid_l2).abs() < 1e-5 * grid_l2.max(1.0),
            "label {} vs grid {}",
            rec.l2_full,
            grid_l2
        );
    }

    #[test]
    fn one_sided_monotone_bounds_hold_for_an_ensemble() {
        let g = grid(1e-2);
        for seed in 0..10u64 {
            let v0 = BumpField::seeded(seed, 4).gauged().sample(g);
            let times = [0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0];
            let series = norm_series(&v0, &times).unwrap();
            let base = norms_at(&v0, 0.0).unwrap();
            let mut prev_plus = base.l2_plus;
            let mut prev_scaled_minus = base.l2_minus;
            for (i, &t) in times.iter().enumerate() {
                let r = &series.records[i];
                assert!(r.l2_plus <= prev_plus * (1.0 + 1e-12), "seed {seed}, t={t}");
                assert!(
                    r.l2_minus <= (2.0 * t).exp() * base.l2_minus * (1.0 + 1e-8),
                    "seed {seed}, t={t}: e^2t bound"
                );
                let scaled = r.l2_minus * (-2.0 * t).exp();
                assert!(scaled <= prev_scaled_minus * (1.0 + 1e-12), "seed {seed}, t={t}: scaled minus");
                prev_plus = r.l2_plus;
                prev_scaled_minus = scaled;
            }
        }
    }

    #[test]
    fn h1_norm_is_conserved_for_gauged_smooth_data() {
        let g = grid(1e-3);
        let v0 = BumpField::seeded(17, 4).gauged().sample(g);
        let base = norms_at(&v0, 0.0).unwrap().h1;
        for &t in &[0.5, 1.5, 3.0] {
            let h1 = norms_at(&v0, t).unwrap().h1;
            assert!((h1 / base - 1.0).abs() < 1e-4, "t={t}: {h1} vs {base}");
        }
    }

    #[test]
    fn w1inf_grows_like_e_to_the_t_for_slope_seeded_data() {
        let g = grid(1e-2);
        let v0 = BumpField::seeded_gauged_with_slope(33, 4).sample(g);
        let times: Vec<f64> = (0..=16).map(|k| 1.0 + 0.25 * k as f64).collect();
        let series = norm_series(&v0, &times).unwrap();
        let fit = growth_rate_fit(&series, NormKind::W1Inf, (1.0, 5.0)).unwrap();
        assert!(
            fit.rate > 0.9 && fit.rate < 1.1,
            "W1inf rate {} outside [0.9, 1.1]",
            fit.rate
        );
    }
}
