//! Shared numeric plumbing: float transcendentals that work without `std`,
//! special functions, descriptive statistics and quadrature.

pub mod fx;
pub mod quad;
pub mod special;
pub mod stats;
