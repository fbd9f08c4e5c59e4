//! Kernel-based synthetic oversampling for imbalanced regression.
//!
//! This crate implements a family of synthetic data generators that all share
//! one weighted-kernel form: a seed observation is drawn according to a weight
//! vector, then a new sample is produced from a kernel centered at that seed.
//! Classical perturbation methods (smoothed bootstrap, ROSE, Gaussian noise)
//! and interpolation methods (SMOTE and its Beta-interpolant generalizations)
//! are all instances of this form and are available side by side.
//!
//! On top of the covariate generators sits a target-value step for regression:
//! a random forest is trained on the original sample and synthetic targets are
//! produced by an adapted wild bootstrap over the forest's per-tree residuals.
//! Seed-drawing weights default to the (trimmed) inverse kernel density
//! estimate of the target, so rare target regions are oversampled.
//!
//! The crate is `no_std`-compatible (`alloc` required); all randomness flows
//! through explicitly seeded streams so every pipeline is reproducible.
//!
//! Modules follow the pipeline order:
//!
//! * [`dataset`] — column-typed numeric tables and schema inference,
//! * [`kernels`] — support-adapted kernel densities, samplers and bandwidths,
//! * [`neighbors`] — exact k-nearest-neighbor tables,
//! * [`weights`] — inverse-KDE drawing weights and seed drawing,
//! * [`clustering`] — diagonal Gaussian mixtures for localized generation,
//! * [`generators`] — the synthetic covariate generators and output modes,
//! * [`target`] — random-forest regression and wild-bootstrap target values,
//! * [`bench`] — the imbalanced train/test protocol, learners and metrics.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bench;
pub mod clustering;
pub mod dataset;
mod error;
pub mod generators;
pub mod kernels;
pub mod matrix;
pub mod neighbors;
pub mod numeric;
pub mod rng;
pub mod target;
pub mod weights;

pub use error::{Error, Result};
pub use matrix::Matrix;
