//! Nonlinear validation layer for the linearized theory: a method-of-lines
//! RK4 integrator for the weak-form equation in the traveling frame, plus
//! the orbital-stability metric inf_a ‖u − φ(·−a)‖_{H¹}.

pub mod error;
pub mod integrate;
pub mod orbit;
pub mod rhs;

pub use error::SimError;
pub use integrate::{evolve_nonlinear, SimConfig, Termination, Trajectory};
pub use orbit::{h1_distance_to_peakon, orbit_distance};
pub use rhs::weak_form_rhs;
