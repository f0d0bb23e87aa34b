//! Core toolkit for desk-scale spectral analysis of Novikov-equation peakons:
//! the peakon profile φ = e^{−|ξ|}, truncated grids with one-sided stencils
//! around the derivative jump at ξ = 0, the linearized transport operator
//! L = (1 − φ²)∂ξ + φφ′ and its adjoint, the Green-kernel convolution
//! inverting 1 − ∂², norms, and the modulation transform into the ṽ-gauge.
//!
//! Everything is a pure function of its inputs; grid functions are immutable
//! after construction.

pub mod error;
pub mod fields;
pub mod green;
pub mod grid;
pub mod interp;
pub mod modulation;
pub mod norms;
pub mod operator;
pub mod profile;
pub mod quad;

pub use error::CoreError;
pub use grid::{GridFunction, GridSpec};
pub use modulation::{modulation_join, modulation_split, ModulationState};
pub use norms::{norm, NormKind};
pub use operator::{apply_l, apply_l_adjoint, PeakonOperator};
pub use profile::{one_minus_phi_sq, peakon_phi, peakon_phi_prime, phi_phi_prime};

pub use num_complex::Complex64;
