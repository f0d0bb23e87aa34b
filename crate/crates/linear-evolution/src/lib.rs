//! Exact solution of the gauged linearized peakon equation ṽ_t = Lṽ by
//! closed-form characteristics, with norm time series and growth-rate fits.
//!
//! No time stepping happens anywhere: the flow map is evaluated in closed
//! form at the requested times, so evaluations at different times are
//! independent.

pub mod characteristics;
pub mod error;
pub mod evolve;
pub mod series;

pub use characteristics::{characteristic_inverse, characteristic_map};
pub use error::EvolveError;
pub use evolve::{evolve_linear, evolve_linear_full, AnalyticData, EvolvedField, SampledData};
pub use series::{growth_rate_fit, norm_series, norms_at, NormRecord, NormSeries, RateFit};
