//! Distance from a field to the orbit of the peakon: inf over shifts a of
//! ‖u − φ(·−a)‖_{H¹}, by a coarse scan plus golden-section refinement.
//!
//! The shifted peakon is sampled and both fields go through the same
//! discrete H¹ norm, so a field that *is* a sampled shifted peakon at a grid
//! shift has distance exactly zero.

use peakon_core::grid::GridFunction;
use peakon_core::norms::{norm, NormKind};
use peakon_core::profile::peakon_phi;
use peakon_core::Complex64;

/// ‖u − φ(·−a)‖_{H¹} with the shifted peakon sampled on u's grid.
pub fn h1_distance_to_peakon(u: &GridFunction, a: f64) -> f64 {
    let spec = u.spec();
    let diff: Vec<Complex64> = (0..spec.n_points())
        .map(|i| u.values()[i] - peakon_phi(spec.node(i) - a))
        .collect();
    let w = GridFunction::from_values(spec, diff).expect("length preserved");
    norm(&w, NormKind::H1)
}

/// (distance, minimizing shift) over a ∈ [−X/2, X/2]; ties toward smaller |a|.
pub fn orbit_distance(u: &GridFunction) -> (f64, f64) {
    let x = u.spec().half_width();
    let lo = -0.5 * x;
    let hi = 0.5 * x;
    // coarse scan, visiting shifts by increasing |a| so that flat minima
    // resolve toward the origin
    let coarse_n = 201usize;
    let step = (hi - lo) / (coarse_n - 1) as f64;
    let mut order: Vec<usize> = (0..coarse_n).collect();
    order.sort_by(|&p, &q| {
        let ap = (lo + step * p as f64).abs();
        let aq = (lo + step * q as f64).abs();
        ap.total_cmp(&aq)
    });
    let mut best_a = 0.0;
    let mut best_d = f64::MAX;
    for idx in order {
        let a = lo + step * idx as f64;
        let d = h1_distance_to_peakon(u, a);
        if d < best_d * (1.0 - 1e-12) {
            best_d = d;
            best_a = a;
        }
    }
    // golden-section refine inside the bracketing coarse interval
    let mut a_lo = (best_a - step).max(lo);
    let mut a_hi = (best_a + step).min(hi);
    let inv_phi = 0.5 * (5.0f64.sqrt() - 1.0);
    let mut c = a_hi - inv_phi * (a_hi - a_lo);
    let mut d = a_lo + inv_phi * (a_hi - a_lo);
    let mut fc = h1_distance_to_peakon(u, c);
    let mut fd = h1_distance_to_peakon(u, d);
    while a_hi - a_lo > 1e-7 {
        if fc <= fd {
            a_hi = d;
            d = c;
            fd = fc;
            c = a_hi - inv_phi * (a_hi - a_lo);
            fc = h1_distance_to_peakon(u, c);
        } else {
            a_lo = c;
            c = d;
            fc = fd;
            d = a_lo + inv_phi * (a_hi - a_lo);
            fd = h1_distance_to_peakon(u, d);
        }
    }
    let a_star = 0.5 * (a_lo + a_hi);
    let d_star = h1_distance_to_peakon(u, a_star);
    if d_star <= best_d {
        (d_star, a_star)
    } else {
        (best_d, best_a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use peakon_core::grid::GridSpec;

    fn grid(h: f64) -> GridSpec {
        GridSpec::new(20.0, (2.0 * 20.0 / h).round() as usize | 1).unwrap()
    }

    #[test]
    fn the_peakon_itself_is_on_the_orbit() {
        let g = grid(1e-2);
        let phi = GridFunction::from_real_fn(g, peakon_phi);
        let (d, a) = orbit_distance(&phi);
        assert!(d < 1e-8, "distance {d:e}");
        assert!(a.abs() < 1e-4, "shift {a}");
    }

    #[test]
    fn shifted_peakon_is_recovered() {
        let g = grid(1e-2);
        let u = GridFunction::from_real_fn(g, |x| peakon_phi(x - 0.3));
        let (d, a) = orbit_distance(&u);
        assert!(d <= 1e-8, "distance {d:e}");
        assert!((a - 0.3).abs() < 1e-4, "shift {a}");
    }

    #[test]
    fn doubled_peakon_sits_at_the_known_h1_distance() {
        // ‖2φ − φ(·−a)‖²_{H¹} = 10 − 8e^{−|a|}, minimized at a = 0 with √2.
        let g = grid(5e-3);
        let u = GridFunction::from_real_fn(g, |x| 2.0 * peakon_phi(x));
        let (d, a) = orbit_distance(&u);
        assert!((d - std::f64::consts::SQRT_2).abs() < 1e-6, "distance {d}");
        assert!(a.abs() < 1e-3, "shift {a}");
    }
}
