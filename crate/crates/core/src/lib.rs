//! Toolkit for size-dependent income distribution analysis.
//!
//! Fits the two-parameter generalized Lotka-Volterra (GLV) distribution to
//! binned cumulative income data, estimates how the scale parameter λ varies
//! with population, and checks the implied power-law (allometric) relation
//! between population and GDP.
//!
//! One module per pipeline stage:
//!
//! - [`specfun`] — log-gamma and upper incomplete gamma functions.
//! - [`quad`] — adaptive Gauss-Kronrod quadrature on the half line.
//! - [`model`] — GLV density, CCDF, moments, sampler, and the rescaled
//!   kernel family.
//! - [`ingest`] — CSV parsing and validation of binned distributions and
//!   population/GDP series.
//! - [`fit`] — two-step (α, λ) estimation on log-log cumulative curves.
//! - [`scaling`] — power-law regression, allometry reports, data collapse.
//! - [`synth`] — synthetic economies with known ground truth.
//! - [`numfmt`] — 12-significant-digit formatting for machine outputs.

pub mod fit;
pub mod ingest;
pub mod model;
pub mod numfmt;
pub mod quad;
pub mod scaling;
pub mod specfun;
pub mod synth;

pub use fit::{FitOptions, FitResult, TwoStepResult};
pub use ingest::{BinnedDistribution, TailPoint, YearRecord};
pub use model::{GlvParams, SizeScaling};
pub use scaling::{AllometryReport, ScalingFit};
pub use synth::SynthSpec;
