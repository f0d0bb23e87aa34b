use nonlinear_sim::integrate::{evolve_nonlinear, SimConfig};
use nonlinear_sim::orbit::orbit_distance;
use nonlinear_sim::weak_form_rhs;
use peakon_core::grid::{GridFunction, GridSpec};
use peakon_core::norms::{norm, NormKind};
use peakon_core::profile::peakon_phi;

fn grid(h: f64) -> GridSpec {
    GridSpec::new(20.0, (2.0 * 20.0 / h).round() as usize | 1).unwrap()
}

#[test]
#[ignore]
fn steady_residual_profile() {
    for &h in &[4e-2f64, 2e-2, 1e-2, 5e-3] {
        let g = grid(h);
        let phi = GridFunction::from_real_fn(g, peakon_phi);
        let rhs = weak_form_rhs(&phi, 1.0).unwrap();
        let l2 = norm(&rhs, NormKind::L2Full);
        // locate the worst nodes
        let mut worst = (0.0f64, 0.0f64);
        for i in 0..g.n_points() {
            let v = rhs.values()[i].norm();
            if v > worst.0 {
                worst = (v, g.node(i));
            }
        }
        println!("h={h:.0e}: |rhs(phi)|_L2={l2:.3e}  max={:.3e} at xi={:+.3}", worst.0, worst.1);
    }
}

#[test]
#[ignore]
fn pure_peakon_long_run() {
    for &h in &[2e-2f64, 1e-2] {
        let g = grid(h);
        let phi = GridFunction::from_real_fn(g, peakon_phi);
        let config = SimConfig::new(g, h / 2.0, 10.0).unwrap().with_output_every((2.0 / h) as usize);
        let traj = evolve_nonlinear(&phi, &config).unwrap();
        print!("h={h:.0e}: dist(t) =");
        for (k, s) in traj.states.iter().enumerate() {
            let (d, _) = orbit_distance(s);
            print!(" {:.3}@t={:.0}", d, traj.times[k]);
        }
        println!();
    }
}
