use nonlinear_sim::weak_form_rhs;
use peakon_core::grid::{GridFunction, GridSpec};
use peakon_core::norms::{norm, NormKind};
use peakon_core::profile::peakon_phi;

#[test]
#[ignore]
fn where_does_the_limiter_trip() {
    let h = 2e-2f64;
    let g = GridSpec::new(20.0, (2.0 * 20.0 / h).round() as usize | 1).unwrap();
    let u: Vec<f64> = (0..g.n_points()).map(|i| peakon_phi(g.node(i))).collect();
    let mut trips = Vec::new();
    for i in 1..g.n_points() - 2 {
        let d2 = u[i + 1] - 2.0 * u[i] + u[i - 1];
        let d1 = (u[i + 1] - u[i]).abs() + (u[i] - u[i - 1]).abs();
        if d2.abs() > 0.25 * d1 + 1e-13 {
            trips.push(g.node(i));
        }
    }
    println!("tripped nodes: {:?} (count {})", &trips[..trips.len().min(20)], trips.len());
    let phi = GridFunction::from_real_fn(g, peakon_phi);
    let rhs = weak_form_rhs(&phi, 1.0).unwrap();
    println!("|rhs(phi)| = {:.3e}", norm(&rhs, NormKind::L2Full));
    let mut worst = (0.0f64, 0.0f64);
    for i in 0..g.n_points() {
        let v = rhs.values()[i].norm();
        if v > worst.0 {
            worst = (v, g.node(i));
        }
    }
    println!("max rhs {:.3e} at xi={:+.3}", worst.0, worst.1);
}
