//! Fixed-step RK4 time loop with CFL monitoring, adaptive step halving, and
//! a gradient blow-up detector (wave breaking is gradient blow-up while the
//! field stays bounded, so the trip wire watches max|u_ξ|).

use peakon_core::grid::{GridFunction, GridSpec};
use peakon_core::Complex64;

use crate::error::SimError;
use crate::rhs::{deriv_real, rhs_real};

#[derive(Debug, Clone)]
pub struct SimConfig {
    pub grid: GridSpec,
    pub dt: f64,
    pub t_end: f64,
    pub wave_speed: f64,
    /// Snapshot stride: a state is recorded every `output_every` steps.
    pub output_every: usize,
}

impl SimConfig {
    pub fn new(grid: GridSpec, dt: f64, t_end: f64) -> Result<Self, SimError> {
        let h = grid.spacing();
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(SimError::BadConfig(format!("dt must be positive, got {dt}")));
        }
        if dt > 0.5 * h {
            return Err(SimError::CflViolation { dt, limit: 0.5 * h });
        }
        if t_end < dt {
            return Err(SimError::BadConfig(format!("t_end {t_end} shorter than one step {dt}")));
        }
        Ok(SimConfig { grid, dt, t_end, wave_speed: 1.0, output_every: 1 })
    }

    pub fn with_wave_speed(mut self, c: f64) -> Self {
        self.wave_speed = c;
        self
    }

    pub fn with_output_every(mut self, stride: usize) -> Self {
        self.output_every = stride.max(1);
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Termination {
    Completed,
    /// Gradient blow-up trip: max|u_ξ| exceeded 10³·its initial value.
    WaveBreaking { t: f64, xi: f64 },
    NonFinite { t: f64 },
}

#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<GridFunction>,
    pub termination: Termination,
    /// (time, new dt) for each mid-run CFL halving.
    pub halvings: Vec<(f64, f64)>,
}

fn to_field(spec: GridSpec, u: &[f64]) -> GridFunction {
    GridFunction::from_values(spec, u.iter().map(|&x| Complex64::new(x, 0.0)).collect())
        .expect("length preserved")
}

fn max_speed(u: &[f64], c: f64) -> f64 {
    u.iter().map(|&x| (x * x - c).abs()).fold(0.0, f64::max)
}

fn max_grad(spec: &GridSpec, u: &[f64]) -> (f64, f64) {
    let (d, dl, dr) = deriv_real(spec, u);
    let mut best = dl.abs().max(dr.abs());
    let mut at = 0.0;
    for (i, &v) in d.iter().enumerate() {
        if v.abs() > best {
            best = v.abs();
            at = spec.node(i);
        }
    }
    (best, at)
}

pub fn evolve_nonlinear(u0: &GridFunction, config: &SimConfig) -> Result<Trajectory, SimError> {
    let spec = config.grid;
    if u0.spec() != spec {
        return Err(SimError::BadConfig("initial data on a different grid".into()));
    }
    let h = spec.spacing();
    let c = config.wave_speed;
    let mut u: Vec<f64> = u0.values().iter().map(|z| z.re).collect();

    let limit = 0.5 * h / max_speed(&u, c).max(1.0);
    if config.dt > limit {
        return Err(SimError::CflViolation { dt: config.dt, limit });
    }
    let (grad0, _) = max_grad(&spec, &u);
    let trip = 1e3 * grad0.max(1e-8);

    let steps = (config.t_end / config.dt).round() as usize;
    let mut times = vec![0.0];
    let mut states = vec![to_field(spec, &u)];
    let mut halvings = Vec::new();
    let mut substeps = 1usize;

    let mut scratch = vec![0.0f64; u.len()];
    let mut termination = Termination::Completed;

    'outer: for step in 1..=steps {
        // mid-run CFL watch: halve the inner step while the advective speed demands it
        while config.dt / substeps as f64 > 0.5 * h / max_speed(&u, c).max(1.0) {
            substeps *= 2;
            halvings.push(((step - 1) as f64 * config.dt, config.dt / substeps as f64));
        }
        let dt = config.dt / substeps as f64;
        for _ in 0..substeps {
            match rk4_step(&spec, &mut u, &mut scratch, dt, c) {
                Ok(()) => {}
                Err(SimError::NonFinite { .. }) => {
                    termination = Termination::NonFinite { t: step as f64 * config.dt };
                    break 'outer;
                }
                Err(e) => return Err(e),
            }
        }
        let (grad, at) = max_grad(&spec, &u);
        if grad > trip {
            termination = Termination::WaveBreaking { t: step as f64 * config.dt, xi: at };
            break;
        }
        if step % config.output_every == 0 || step == steps {
            times.push(step as f64 * config.dt);
            states.push(to_field(spec, &u));
        }
    }

    Ok(Trajectory { times, states, termination, halvings })
}

fn rk4_step(
    spec: &GridSpec,
    u: &mut [f64],
    scratch: &mut [f64],
    dt: f64,
    c: f64,
) -> Result<(), SimError> {
    let n = u.len();
    let k1 = rhs_real(spec, u, c)?;
    for i in 0..n {
        scratch[i] = u[i] + 0.5 * dt * k1[i];
    }
    let k2 = rhs_real(spec, scratch, c)?;
    for i in 0..n {
        scratch[i] = u[i] + 0.5 * dt * k2[i];
    }
    let k3 = rhs_real(spec, scratch, c)?;
    for i in 0..n {
        scratch[i] = u[i] + dt * k3[i];
    }
    let k4 = rhs_real(spec, scratch, c)?;
    for i in 0..n {
        u[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use peakon_core::fields::BumpField;
    use peakon_core::norms::{norm, NormKind};
    use peakon_core::profile::peakon_phi;

    fn grid(h: f64) -> GridSpec {
        GridSpec::new(20.0, (2.0 * 20.0 / h).round() as usize | 1).unwrap()
    }

    #[test]
    fn zero_stays_zero() {
        let g = grid(2e-2);
        let config = SimConfig::new(g, 1e-2, 0.2).unwrap();
        let traj = evolve_nonlinear(&GridFunction::zero(g), &config).unwrap();
        assert_eq!(traj.termination, Termination::Completed);
        for s in &traj.states {
            assert_eq!(s.max_abs(), 0.0);
        }
    }

    #[test]
    fn config_rejects_oversized_steps() {
        let g = grid(1e-2);
        assert!(matches!(
            SimConfig::new(g, 1e-1, 1.0),
            Err(SimError::CflViolation { .. })
        ));
        assert!(matches!(
            SimConfig::new(g, 1e-3, 1e-4),
            Err(SimError::BadConfig(_))
        ));
    }

    #[test]
    fn peakon_stays_near_itself_under_refinement() {
        // max_t ‖u(t) − φ‖_{H¹} = O(h) over T = 1
        let run = |h: f64| -> f64 {
            let g = grid(h);
            let phi = GridFunction::from_real_fn(g, peakon_phi);
            let config = SimConfig::new(g, h / 2.0, 1.0).unwrap().with_output_every(10);
            let traj = evolve_nonlinear(&phi, &config).unwrap();
            assert_eq!(traj.termination, Termination::Completed);
            let mut worst = 0.0f64;
            for s in &traj.states {
                let diff = GridFunction::from_values(
                    g,
                    s.values().iter().zip(phi.values()).map(|(a, b)| a - b).collect(),
                )
                .unwrap();
                worst = worst.max(norm(&diff, NormKind::H1));
            }
            worst
        };
        let coarse = run(4e-2);
        let fine = run(2e-2);
        assert!(coarse < 0.2, "drift {coarse}");
        let order = (coarse / fine).log2();
        assert!(order >= 1.0, "observed order {order}");
    }

    #[test]
    fn two_small_steps_match_one_double_step_to_rk4_order() {
        let g = grid(2e-2);
        let w = BumpField::seeded(5, 4);
        let u0 = GridFunction::from_real_fn(g, |x| 0.3 * w.eval(x));
        let dt = 5e-3;
        let one = {
            let config = SimConfig::new(g, 2.0 * dt, 2.0 * dt).unwrap();
            evolve_nonlinear(&u0, &config).unwrap().states.pop().unwrap()
        };
        let two = {
            let config = SimConfig::new(g, dt, 2.0 * dt).unwrap();
            evolve_nonlinear(&u0, &config).unwrap().states.pop().unwrap()
        };
        let mut worst = 0.0f64;
        for i in 0..g.n_points() {
            worst = worst.max((one.values()[i] - two.values()[i]).norm());
        }
        // local error O(dt⁵) per step; the mismatch of the two routes is O(dt⁴)·dt-ish
        assert!(worst < 1e3 * dt.powi(4), "step-doubling defect {worst:e}");
    }

    #[test]
    fn smooth_data_conserves_the_h1_energy() {
        // ∫(u² + u_ξ²) is conserved by the flow; drift ≤ 1e−3 over T = 5
        let g = grid(1e-2);
        let u0 = GridFunction::from_real_fn(g, |x| 0.5 * (-0.5 * (x - 1.0) * (x - 1.0)).exp());
        let config = SimConfig::new(g, 2.5e-3, 5.0).unwrap().with_output_every(400);
        let traj = evolve_nonlinear(&u0, &config).unwrap();
        assert_eq!(traj.termination, Termination::Completed);
        let e0 = norm(&traj.states[0], NormKind::H1);
        for (k, s) in traj.states.iter().enumerate() {
            let e = norm(s, NormKind::H1);
            assert!(
                (e / e0 - 1.0).abs() <= 1e-3,
                "t={}: relative energy drift {:e}",
                traj.times[k],
                e / e0 - 1.0
            );
        }
    }

    #[test]
    fn steep_data_halts_with_a_blow_up_signal() {
        // strong negative slope drives gradient steepening in finite time;
        // the run must halt early through either blow-up signal rather than
        // march through garbage
        let g = grid(2e-2);
        let u0 = GridFunction::from_real_fn(g, |x| -6.0 * x * (-x * x).exp());
        let config = SimConfig::new(g, 6.5e-4, 6.0).unwrap().with_output_every(1000);
        let traj = evolve_nonlinear(&u0, &config).unwrap();
        assert!(
            matches!(traj.termination, Termination::WaveBreaking { .. } | Termination::NonFinite { .. }),
            "expected blow-up, got {:?}",
            traj.termination
        );
        assert!(traj.times.last().unwrap() < &1.0, "halt came too late");
    }
}
