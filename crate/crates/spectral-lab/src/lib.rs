//! Spectral laboratory for the linearized peakon operator: closed-form
//! eigenfunctions and resolvent solutions, the three-space spectrum
//! classifier, a dense discretized eigenvalue cloud, and inequality
//! verifiers.

pub mod classify;
pub mod closed_form;
pub mod discretize;
pub mod eig;
pub mod error;
pub mod hardy;
pub mod resolvent;

pub use classify::{classify_lambda, FunctionSpace, SpectralClassification, Verdict};
pub use closed_form::{
    continuous_spectrum_witness, eigenfunction, graded_point_residual, operator_residual,
    EigenfunctionSample, EigenfunctionSpec, WitnessPair,
};
pub use discretize::{discretize_l, eigencloud, EigencloudResult};
pub use eig::{eigenvalues, CMat};
pub use error::SpectralError;
pub use hardy::{hardy_check, HardyReport};
pub use resolvent::{resolvent_bound_probe, resolvent_solve, ResolventProbeReport, ResolventResult};
