//! The acceptance suite: twelve property checks at pinned tolerances, each
//! reporting one pass/fail line. `verify-all` and the `acceptance`
//! integration test target both run exactly these functions.

use num_complex::Complex64;

use linear_evolution::characteristics::d_squared_minus;
use linear_evolution::series::{growth_rate_fit, norm_series, norms_at};
use nonlinear_sim::integrate::{evolve_nonlinear, SimConfig, Termination};
use nonlinear_sim::orbit::orbit_distance;
use nonlinear_sim::weak_form_rhs;
use peakon_core::fields::{BumpField, SplitMix64};
use peakon_core::grid::{GridFunction, GridSpec};
use peakon_core::norms::{norm, NormKind};
use peakon_core::operator::apply_l;
use peakon_core::profile::{one_minus_phi_sq, peakon_phi, peakon_phi_prime, phi_phi_prime};
use spectral_lab::classify::{classify_lambda, FunctionSpace, Verdict};
use spectral_lab::closed_form::{eigenfunction, graded_point_residual, EigenfunctionSpec};
use spectral_lab::discretize::eigencloud;
use spectral_lab::hardy::hardy_check;
use spectral_lab::resolvent::resolvent_bound_probe;

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub name: &'static str,
    pub pass: bool,
    /// Worst measured quantity, in the units of `tolerance`.
    pub value: f64,
    pub tolerance: f64,
    pub detail: String,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "{} {:<28} value={:.3e} tolerance={:.3e}  {}",
            if self.pass { "PASS" } else { "FAIL" },
            self.name,
            self.value,
            self.tolerance,
            self.detail
        )
    }
}

fn grid(h: f64, x: f64) -> GridSpec {
    GridSpec::new(x, (2.0 * x / h).round() as usize | 1).unwrap()
}

/// 1. Lφ = φ′ and Lφ′ = φ: nodewise error ≤ 10h² away from the peak at
/// h ∈ {1e−2, 5e−3}, observed order ≥ 1.9.
pub fn criterion_01_operator_identities() -> CriterionResult {
    let measure = |h: f64| -> f64 {
        let g = grid(h, 20.0);
        let phi = GridFunction::from_real_fn(g, peakon_phi);
        let phi_p = GridFunction::from_real_fn(g, peakon_phi_prime);
        let l_phi = apply_l(&phi);
        let l_phi_p = apply_l(&phi_p);
        let mut worst = 0.0f64;
        for i in 0..g.n_points() {
            if g.node(i).abs() < 2.0 * h {
                continue;
            }
            worst = worst.max((l_phi.values()[i] - phi_p.values()[i]).norm());
            worst = worst.max((l_phi_p.values()[i] - phi.values()[i]).norm());
        }
        worst
    };
    let coarse = measure(1e-2);
    let fine = measure(5e-3);
    let ratio_coarse = coarse / (1e-2f64 * 1e-2);
    let ratio_fine = fine / (5e-3f64 * 5e-3);
    let order = (coarse / fine).log2();
    let pass = ratio_coarse <= 10.0 && ratio_fine <= 10.0 && order >= 1.9;
    CriterionResult {
        name: "01-operator-identities",
        pass,
        value: ratio_coarse.max(ratio_fine),
        tolerance: 10.0,
        detail: format!("max|err|/h2 at both h; observed order {order:.2}"),
    }
}

/// Closed-form L²(−∞,0) norm of the evolved eigenmode at λ₀ by the
/// label-space change of variables: with σ = −s,
///
///   ‖ṽ(t)‖² = ∫₀^X e^{−2λ₀σ}(1 − e^{−2σ})^{1−λ₀} / D(−σ,t)² dσ.
///
/// The integrand has a σ^{1−λ₀} endpoint power and an amplitude feature of
/// width ~e^{−2t}; integrating in ln σ (Simpson) resolves both uniformly —
/// the power becomes a smooth exponential decay toward −∞ and the feature is
/// O(1) wide in the log variable.
pub fn eigenmode_l2_minus_closed_form(lambda0: f64, t: f64, x: f64) -> f64 {
    let g = |sigma: f64| -> f64 {
        let d = d_squared_minus(-sigma, t);
        let base = -(-2.0 * sigma).exp_m1();
        (-2.0 * lambda0 * sigma).exp() * base.powf(1.0 - lambda0) / (d * d)
    };
    // the dropped (0, σ_min) mass is ≲ σ_min^{2−λ₀}·e^{4t} ≪ 1e−8·‖ṽ‖²
    let u_min = (1e-18f64).ln() - 2.0 * t;
    let u_max = x.ln();
    let pairs = 8000usize;
    let du = (u_max - u_min) / (2 * pairs) as f64;
    let mut acc = 0.0;
    for k in 0..=2 * pairs {
        let u = u_min + du * k as f64;
        let sigma = u.exp();
        let w = if k == 0 || k == 2 * pairs {
            1.0
        } else if k % 2 == 1 {
            4.0
        } else {
            2.0
        };
        acc += w * sigma * g(sigma);
    }
    (acc * du / 3.0).sqrt()
}

/// 2. Eigenmode growth ‖ṽ(t)‖_{L²(−∞,0)} = e^{λ₀t}‖𝔳₀‖ to 1e−6 for
/// λ₀ ∈ {0.5, 1.0, 1.5}, t ∈ {0.5, 1, 2, 3}; the smooth λ₀ = 1 mode is also
/// pushed through the public sampled-data path.
pub fn criterion_02_eigenmode_growth() -> CriterionResult {
    let mut worst = 0.0f64;
    for &lambda0 in &[0.5, 1.0, 1.5] {
        let base = eigenmode_l2_minus_closed_form(lambda0, 0.0, 20.0);
        for &t in &[0.5, 1.0, 2.0, 3.0] {
            let ratio = eigenmode_l2_minus_closed_form(lambda0, t, 20.0) / base;
            worst = worst.max((ratio / (lambda0 * t).exp() - 1.0).abs());
        }
    }
    // sampled public path on the smooth mode
    let g = grid(1e-3, 20.0);
    let v0 = GridFunction::from_real_fn(g, |x| if x < 0.0 { x.exp() } else { 0.0 });
    let base = norm(&v0, NormKind::L2Minus);
    for &t in &[0.5, 1.0, 2.0, 3.0] {
        let rec = norms_at(&v0, t).expect("gauged data");
        worst = worst.max((rec.l2_minus / base / t.exp() - 1.0).abs());
    }
    CriterionResult {
        name: "02-eigenmode-growth",
        pass: worst <= 1e-6,
        value: worst,
        tolerance: 1e-6,
        detail: "relative error of e^{lambda0 t} reproduction".into(),
    }
}

/// 3. 100 seeded gauged fields: L²(0,∞) nonincreasing and
/// L²(−∞,0) ≤ e^{2t}·initial·(1+1e−8) for t ≤ 3. Zero violations.
pub fn criterion_03_one_sided_bounds() -> CriterionResult {
    let g = grid(1e-2, 20.0);
    let times: Vec<f64> = (1..=12).map(|k| 0.25 * k as f64).collect();
    let mut violations = 0usize;
    let mut worst_margin = 0.0f64;
    for seed in 0..100u64 {
        let v0 = BumpField::seeded(seed, 4).gauged().sample(g);
        let base = norms_at(&v0, 0.0).expect("gauged");
        let series = norm_series(&v0, &times).expect("gauged");
        let mut prev_plus = base.l2_plus;
        for (i, &t) in times.iter().enumerate() {
            let r = &series.records[i];
            if r.l2_plus > prev_plus * (1.0 + 1e-12) {
                violations += 1;
            }
            let bound = (2.0 * t).exp() * base.l2_minus * (1.0 + 1e-8);
            if r.l2_minus > bound {
                violations += 1;
            }
            worst_margin = worst_margin.max(r.l2_minus / ((2.0 * t).exp() * base.l2_minus));
            prev_plus = r.l2_plus;
        }
    }
    CriterionResult {
        name: "03-one-sided-bounds",
        pass: violations == 0,
        value: violations as f64,
        tolerance: 0.0,
        detail: format!("100 seeds, t <= 3; worst e^2t-margin {worst_margin:.3e}"),
    }
}

/// 4. H¹ conservation |H¹(t)/H¹(0) − 1| ≤ 1e−4 for the ensemble at h = 1e−3.
pub fn criterion_04_h1_conservation() -> CriterionResult {
    let g = grid(1e-3, 20.0);
    let mut worst = 0.0f64;
    for seed in 0..100u64 {
        let v0 = BumpField::seeded(seed, 4).gauged().sample(g);
        let base = norms_at(&v0, 0.0).expect("gauged").h1;
        for &t in &[0.5, 1.0, 2.0, 3.0] {
            let h1 = norms_at(&v0, t).expect("gauged").h1;
            worst = worst.max((h1 / base - 1.0).abs());
        }
    }
    CriterionResult {
        name: "04-h1-conservation",
        pass: worst <= 1e-4,
        value: worst,
        tolerance: 1e-4,
        detail: "100 seeds, t <= 3, h = 1e-3".into(),
    }
}

/// 5. W^{1,∞} instability rate: fitted growth over t ∈ [1, 5] lies in
/// [0.9, 1.1] for 10 seeded fields with nonzero one-sided slope at the peak.
pub fn criterion_05_w1inf_rate() -> CriterionResult {
    let g = grid(1e-2, 20.0);
    let times: Vec<f64> = (0..=16).map(|k| 1.0 + 0.25 * k as f64).collect();
    let mut lo = f64::MAX;
    let mut hi = f64::MIN;
    for seed in 0..10u64 {
        let v0 = BumpField::seeded_gauged_with_slope(seed, 4).sample(g);
        let series = norm_series(&v0, &times).expect("gauged");
        let fit = growth_rate_fit(&series, NormKind::W1Inf, (1.0, 5.0)).expect("positive norms");
        lo = lo.min(fit.rate);
        hi = hi.max(fit.rate);
    }
    let pass = lo >= 0.9 && hi <= 1.1;
    CriterionResult {
        name: "05-w1inf-rate",
        pass,
        value: if (hi - 1.0).abs() > (lo - 1.0).abs() { hi } else { lo },
        tolerance: 0.1,
        detail: format!("10 seeds; fitted rates in [{lo:.4}, {hi:.4}]"),
    }
}

/// 6. Point-spectrum residuals ≤ 1e−6 on the graded mesh for 20 λ in the
/// band, and the ξ<0 branch flagged non-L² at Re λ ∈ {2.2, 2.5}.
pub fn criterion_06_point_residuals() -> CriterionResult {
    let mut rng = SplitMix64::new(0);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let lambda = Complex64::new(rng.range(0.2, 1.8), rng.range(-3.0, 3.0));
        worst = worst.max(graded_point_residual(lambda, false, 4000));
    }
    let mut flags_ok = true;
    for &re in &[2.2, 2.5] {
        let spec = EigenfunctionSpec::minus_mode(Complex64::new(re, 0.0));
        let sample = eigenfunction(&spec, grid(1e-2, 20.0));
        flags_ok &= sample.non_square_integrable_near_zero;
    }
    CriterionResult {
        name: "06-point-residuals",
        pass: worst <= 1e-6 && flags_ok,
        value: worst,
        tolerance: 1e-6,
        detail: format!("20 banded lambdas; strip-edge non-L2 flags ok: {flags_ok}"),
    }
}

/// 7. Resolvent bound at λ ∈ {2.5, 3, 4}, 20 trials each: all ratios within
/// 1/(Re λ−2)·(1+1e−3) and all residuals ≤ 1e−4.
pub fn criterion_07_resolvent_bound() -> CriterionResult {
    let g = grid(1e-2, 20.0);
    let mut pass = true;
    let mut worst_res = 0.0f64;
    let mut detail = String::new();
    for &re in &[2.5, 3.0, 4.0] {
        let report = resolvent_bound_probe(Complex64::new(re, 0.0), 20, 0, g).expect("probe preconditions");
        pass &= report.pass && report.max_residual <= 1e-4;
        worst_res = worst_res.max(report.max_residual);
        detail.push_str(&format!(
            "re={re}: max_ratio={:.4e} (bound {:.3}) ",
            report.max_ratio, report.bound
        ));
    }
    CriterionResult {
        name: "07-resolvent-bound",
        pass,
        value: worst_res,
        tolerance: 1e-4,
        detail,
    }
}

/// 8. Eigencloud strip containment |Re λ| ≤ 2.1 at n ∈ {101, 201, 401},
/// conjugation symmetry, and nondecreasing max Re.
pub fn criterion_08_eigencloud_strip() -> CriterionResult {
    let mut pass = true;
    let mut prev_max_re = f64::NEG_INFINITY;
    let mut worst_abs_re = 0.0f64;
    let mut detail = String::new();
    for &n in &[101usize, 201, 401] {
        let cloud = eigencloud(GridSpec::new(20.0, n).unwrap(), FunctionSpace::L2)
            .expect("eigensolver converged");
        pass &= cloud.eigenvalues.len() == n;
        pass &= cloud.max_abs_re() <= 2.1;
        pass &= cloud.conjugation_defect() <= 1e-8;
        pass &= cloud.max_re() >= prev_max_re - 1e-12;
        worst_abs_re = worst_abs_re.max(cloud.max_abs_re());
        detail.push_str(&format!("n={n}: maxRe={:.4} ", cloud.max_re()));
        prev_max_re = cloud.max_re();
    }
    CriterionResult {
        name: "08-eigencloud-strip",
        pass,
        value: worst_abs_re,
        tolerance: 2.1,
        detail,
    }
}

/// 9. Golden table of 30 verdicts transcribed from the three spectrum
/// theorems, including the boundary lines.
pub fn criterion_09_classifier_golden() -> CriterionResult {
    use FunctionSpace::{H1Zero, H1ZeroC10, L2};
    use Verdict::{Continuous, Point, Residual, Resolvent};
    let table: [(f64, f64, FunctionSpace, Verdict); 30] = [
        // L²: point on 0 < |Re| < 2, continuous on Re ∈ {0, ±2}, no residual
        (1.0, 2.0, L2, Point),
        (0.5, 0.0, L2, Point),
        (-0.5, 1.0, L2, Point),
        (1.9, -3.0, L2, Point),
        (-1.9, 0.0, L2, Point),
        (0.0, 0.0, L2, Continuous),
        (0.0, 5.0, L2, Continuous),
        (2.0, 0.0, L2, Continuous),
        (-2.0, 1.0, L2, Continuous),
        (3.0, 0.0, L2, Resolvent),
        (2.2, -1.0, L2, Resolvent),
        (-2.5, 4.0, L2, Resolvent),
        // H¹₀ ∩ C¹₀: residual band 0 < |Re| < 1, continuous on Re ∈ {0, ±1}
        (0.5, 0.0, H1ZeroC10, Residual),
        (-0.5, 3.0, H1ZeroC10, Residual),
        (0.99, -2.0, H1ZeroC10, Residual),
        (-0.2, 0.0, H1ZeroC10, Residual),
        (0.0, 0.0, H1ZeroC10, Continuous),
        (0.0, -7.0, H1ZeroC10, Continuous),
        (1.0, 0.0, H1ZeroC10, Continuous),
        (-1.0, 2.0, H1ZeroC10, Continuous),
        (1.01, 0.0, H1ZeroC10, Resolvent),
        (3.0, 1.0, H1ZeroC10, Resolvent),
        (-2.0, 0.0, H1ZeroC10, Resolvent),
        // H¹₀: imaginary axis only, continuous
        (0.0, 0.0, H1Zero, Continuous),
        (0.0, 9.0, H1Zero, Continuous),
        (0.0, -5.0, H1Zero, Continuous),
        (0.5, 0.0, H1Zero, Resolvent),
        (-0.5, 2.0, H1Zero, Resolvent),
        (1.0, 0.0, H1Zero, Resolvent),
        (2.0, -3.0, H1Zero, Resolvent),
    ];
    let mut mismatches = 0usize;
    for &(re, im, space, want) in &table {
        let got = classify_lambda(Complex64::new(re, im), space).verdict;
        if got != want {
            mismatches += 1;
        }
    }
    CriterionResult {
        name: "09-classifier-golden",
        pass: mismatches == 0,
        value: mismatches as f64,
        tolerance: 0.0,
        detail: "30 transcribed verdicts incl. boundary lines".into(),
    }
}

/// 10. Hardy inequality: 50 seeded f with f(0) = 0 satisfy the half-line
/// Hardy bound under quadrature, LHS ≤ 4·RHS·(1+1e−3) with the sharp
/// constant 4. (The unit-constant transcription is internally inconsistent —
/// its own closed-form anchor f = ξe^{−ξ} gives LHS = ½ > ¼ = RHS — so the
/// criterion checks the true inequality and reports the unit-constant count
/// for transparency.)
pub fn criterion_10_hardy() -> CriterionResult {
    let g = grid(1e-2, 20.0);
    let mut sharp_failures = 0usize;
    let mut unit_failures = 0usize;
    let mut worst_ratio = 0.0f64;
    for seed in 0..50u64 {
        let f = BumpField::seeded(seed, 4).gauged().sample(g);
        let report = hardy_check(&f).expect("gauged");
        if !report.within_sharp_constant {
            sharp_failures += 1;
        }
        if !report.within_unit_constant {
            unit_failures += 1;
        }
        if report.rhs > 0.0 {
            worst_ratio = worst_ratio.max(report.lhs / report.rhs);
        }
    }
    CriterionResult {
        name: "10-hardy-inequality",
        pass: sharp_failures == 0,
        value: worst_ratio,
        tolerance: 4.0 * (1.0 + 1e-3),
        detail: format!(
            "50 seeds; worst LHS/RHS {worst_ratio:.3} vs sharp constant 4; {unit_failures} exceed the (false) unit constant"
        ),
    }
}

/// 11. Linearization consistency: directional derivative of the nonlinear
/// right side at φ converges to Lw − w(0)φ′ with log-log slope ≥ 0.9 down to
/// the spatial floor.
pub fn criterion_11_linearization() -> CriterionResult {
    let g = grid(2e-3, 20.0);
    let phi: Vec<f64> = (0..g.n_points()).map(|i| peakon_phi(g.node(i))).collect();
    let phi_gf = GridFunction::from_real_fn(g, peakon_phi);
    let w = BumpField::seeded(3, 4);
    let w0 = w.eval(0.0);
    let target: Vec<f64> = (0..g.n_points())
        .map(|i| {
            let xi = g.node(i);
            one_minus_phi_sq(xi) * w.eval_deriv(xi) + phi_phi_prime(xi) * w.eval(xi)
                - w0 * peakon_phi_prime(xi)
        })
        .collect();
    let base = weak_form_rhs(&phi_gf, 1.0).expect("finite");
    let err_at = |eps: f64| -> f64 {
        let pert = GridFunction::from_values(
            g,
            (0..g.n_points())
                .map(|i| Complex64::new(phi[i] + eps * w.eval(g.node(i)), 0.0))
                .collect(),
        )
        .unwrap();
        let r = weak_form_rhs(&pert, 1.0).expect("finite");
        let mut num = 0.0;
        for i in 0..g.n_points() {
            let dd = (r.values()[i].re - base.values()[i].re) / eps;
            num += (dd - target[i]) * (dd - target[i]) * g.spacing();
        }
        num.sqrt()
    };
    let e2 = err_at(1e-2);
    let e3 = err_at(1e-3);
    let e4 = err_at(1e-4);
    let floor = err_at(1e-5);
    let slope23 = (e2 / e3).log10();
    let slope34 = (e3 / e4).log10();
    let ok23 = slope23 >= 0.9 || e3 <= 2.0 * floor;
    let ok34 = slope34 >= 0.9 || e4 <= 2.0 * floor;
    CriterionResult {
        name: "11-linearization",
        pass: ok23 && ok34,
        value: slope23.min(slope34),
        tolerance: 0.9,
        detail: format!("errors {e2:.2e}/{e3:.2e}/{e4:.2e}, floor {floor:.2e}"),
    }
}

/// 12. Nonlinear orbit robustness: the peakon holds station to 5·C·h over
/// T = 1 (C from the refinement pair), and five 1%-perturbed runs stay
/// within orbit distance 0.05 through T = 10 at h = 1e−2.
pub fn criterion_12_orbit_robustness() -> CriterionResult {
    let peakon_drift = |h: f64, t_end: f64| -> f64 {
        let g = grid(h, 20.0);
        let phi = GridFunction::from_real_fn(g, peakon_phi);
        let config = SimConfig::new(g, h / 2.0, t_end).unwrap().with_output_every(25);
        let traj = evolve_nonlinear(&phi, &config).expect("stable");
        assert!(matches!(traj.termination, Termination::Completed));
        traj.states
            .iter()
            .map(|s| {
                let diff = GridFunction::from_values(
                    g,
                    s.values().iter().zip(phi.values()).map(|(a, b)| a - b).collect(),
                )
                .unwrap();
                norm(&diff, NormKind::H1)
            })
            .fold(0.0, f64::max)
    };
    let c4 = peakon_drift(4e-2, 1.0) / 4e-2;
    let c2 = peakon_drift(2e-2, 1.0) / 2e-2;
    let c_ref = c4.max(c2);
    let drift_fine = peakon_drift(1e-2, 1.0);
    let peakon_ok = drift_fine <= 5.0 * c_ref * 1e-2;

    let g = grid(1e-2, 20.0);
    let phi = GridFunction::from_real_fn(g, peakon_phi);
    let mut worst_dist = 0.0f64;
    let mut all_ok = true;
    for seed in 0..5u64 {
        let w = BumpField::seeded(seed, 4).gauged();
        let w_gf = w.sample(g);
        let w_h1 = norm(&w_gf, NormKind::H1);
        let u0 = GridFunction::from_values(
            g,
            (0..g.n_points())
                .map(|i| phi.values()[i] + 0.01 / w_h1 * w_gf.values()[i])
                .collect(),
        )
        .unwrap();
        let config = SimConfig::new(g, 5e-3, 10.0).unwrap().with_output_every(100);
        let traj = evolve_nonlinear(&u0, &config).expect("stable");
        all_ok &= matches!(traj.termination, Termination::Completed);
        for s in &traj.states {
            let (d, _) = orbit_distance(s);
            worst_dist = worst_dist.max(d);
        }
    }
    let pass = peakon_ok && all_ok && worst_dist <= 0.05;
    CriterionResult {
        name: "12-orbit-robustness",
        pass,
        value: worst_dist,
        tolerance: 0.05,
        detail: format!(
            "peakon drift {drift_fine:.2e} vs 5Ch {:.2e}; 5 perturbed runs max dist {worst_dist:.3}",
            5.0 * c_ref * 1e-2
        ),
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    vec![
        criterion_01_operator_identities(),
        criterion_02_eigenmode_growth(),
        criterion_03_one_sided_bounds(),
        criterion_04_h1_conservation(),
        criterion_05_w1inf_rate(),
        criterion_06_point_residuals(),
        criterion_07_resolvent_bound(),
        criterion_08_eigencloud_strip(),
        criterion_09_classifier_golden(),
        criterion_10_hardy(),
        criterion_11_linearization(),
        criterion_12_orbit_robustness(),
    ]
}

/// Machine-readable report for `verify-all`.
pub fn report_json(results: &[CriterionResult]) -> String {
    let mut out = String::from("{\n  \"schema\": 1,\n  \"criteria\": [\n");
    for (k, r) in results.iter().enumerate() {
        out.push_str(&format!(
            "    {{\"name\": \"{}\", \"pass\": {}, \"value\": {:e}, \"tolerance\": {:e}}}{}\n",
            crate::io::json_escape(r.name),
            r.pass,
            r.value,
            r.tolerance,
            if k + 1 < results.len() { "," } else { "" }
        ));
    }
    out.push_str("  ]\n}\n");
    out
}
