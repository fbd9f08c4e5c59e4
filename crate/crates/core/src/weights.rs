//! Seed-drawing weights.
//!
//! Imbalanced regression oversamples where the target is rare: each
//! observation gets weight proportional to the inverse (or squared inverse)
//! of the target's kernel density estimate at its own value. Isolated target
//! values can blow the inverse up, so raw weights are trimmed at
//! `trim_factor * median` before normalization.

use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::kernels::Kde;
use crate::numeric::stats;
use crate::rng::Stream;
use crate::{Error, Result};

/// How drawing weights are produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightMode {
    /// 1 / f(y): used by the `synth` and `mix` output modes.
    Inverse,
    /// 1 / f(y)^2: used by `augment`, which only adds rows and therefore
    /// pushes harder toward rare values.
    InverseSquared,
    Uniform,
    User,
}

/// Default trimming factor: raw weights are capped at twenty medians.
pub const DEFAULT_TRIM_FACTOR: f64 = 20.0;

/// Normalized drawing weights with their provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct DrawingWeights {
    w: Vec<f64>,
    pub mode: WeightMode,
    pub trim_factor: f64,
}

impl DrawingWeights {
    pub fn as_slice(&self) -> &[f64] {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.w.len()
    }

    pub fn is_empty(&self) -> bool {
        self.w.is_empty()
    }

    /// Uniform weights over `n` observations.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidWeights);
        }
        Ok(Self {
            w: vec![1.0 / n as f64; n],
            mode: WeightMode::Uniform,
            trim_factor: DEFAULT_TRIM_FACTOR,
        })
    }

    /// Caller-supplied weights: non-negative, positive sum; normalized as
    /// given (no trimming — the caller owns the shape, zeros allowed).
    pub fn user(raw: &[f64]) -> Result<Self> {
        if raw.is_empty() || raw.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) {
            return Err(Error::InvalidWeights);
        }
        let sum: f64 = raw.iter().sum();
        if sum <= 0.0 {
            return Err(Error::InvalidWeights);
        }
        Ok(Self {
            w: raw.iter().map(|&x| x / sum).collect(),
            mode: WeightMode::User,
            trim_factor: DEFAULT_TRIM_FACTOR,
        })
    }
}

/// Inverse-KDE drawing weights for the target values `y`.
///
/// The density is a Gaussian KDE with the Silverman bandwidth regardless of
/// the target's support. Raw weights `1/f` (or `1/f^2`) are clipped at
/// `trim_factor * median(raw)` and normalized; a final capping pass keeps
/// `max(w) <= trim_factor * median(w)` exact despite rounding in the
/// normalization. Degenerate targets (all values equal) fall back to uniform
/// weights with a warning.
pub fn inverse_kde_weights(y: &[f64], mode: WeightMode, trim_factor: f64) -> Result<DrawingWeights> {
    let n = y.len();
    if n < 2 {
        return Err(Error::SampleTooSmall { need: 2, got: n });
    }
    if y.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidWeights);
    }
    if !(trim_factor >= 1.0) {
        return Err(Error::InvalidConfig(alloc::format!(
            "trim factor must be >= 1, got {trim_factor}"
        )));
    }
    if !matches!(mode, WeightMode::Inverse | WeightMode::InverseSquared) {
        return Err(Error::InvalidConfig(
            "inverse_kde_weights expects mode inverse or inverse-squared".into(),
        ));
    }
    let min = y.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = y.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if min == max {
        log::warn!("degenerate target (all values equal); using uniform weights");
        let mut w = DrawingWeights::uniform(n)?;
        w.trim_factor = trim_factor;
        return Ok(w);
    }
    let kde = Kde::gaussian_silverman(y)?;
    let mut raw: Vec<f64> = y
        .iter()
        .map(|&v| {
            let f = kde.eval(v);
            match mode {
                WeightMode::Inverse => 1.0 / f,
                WeightMode::InverseSquared => 1.0 / (f * f),
                _ => unreachable!(),
            }
        })
        .collect();
    let cap = trim_factor * stats::median(&raw);
    for v in &mut raw {
        if *v > cap {
            *v = cap;
        }
    }
    let sum: f64 = raw.iter().sum();
    for v in &mut raw {
        *v /= sum;
    }
    // Normalization rounds each entry separately; re-cap so the trimming
    // bound holds exactly on the final vector.
    let cap = trim_factor * stats::median(&raw);
    for v in &mut raw {
        if *v > cap {
            *v = cap;
        }
    }
    Ok(DrawingWeights {
        w: raw,
        mode,
        trim_factor,
    })
}

/// Draw `n_draws` seed indices iid from the categorical distribution `w`.
pub fn draw_seeds(w: &DrawingWeights, n_draws: usize, rng: &mut Stream) -> Result<Vec<usize>> {
    if n_draws == 0 {
        return Err(Error::EmptyDraw);
    }
    let cumulative: Vec<f64> = w
        .as_slice()
        .iter()
        .scan(0.0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let total = *cumulative.last().expect("weights are non-empty");
    let last = w.len() - 1;
    let seeds = (0..n_draws)
        .map(|_| {
            let u: f64 = rng.random::<f64>() * total;
            cumulative.partition_point(|&c| c <= u).min(last)
        })
        .collect();
    Ok(seeds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::{substream, Domain};
    use approx::assert_relative_eq;
    use rand_distr::Distribution;

    #[test]
    fn isolated_point_gets_max_weight() {
        let y = [0.0, 0.0, 0.0, 0.0, 10.0];
        let w = inverse_kde_weights(&y, WeightMode::Inverse, 20.0).unwrap();
        let ws = w.as_slice();
        let max = ws.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        assert_eq!(ws[4], max);
        assert_relative_eq!(ws.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        assert!(ws.iter().all(|&v| v > 0.0));
    }

    #[test]
    fn degenerate_target_falls_back_to_uniform() {
        let y = [2.0; 6];
        let w = inverse_kde_weights(&y, WeightMode::Inverse, 20.0).unwrap();
        for &v in w.as_slice() {
            assert_eq!(v, 1.0 / 6.0);
        }
    }

    #[test]
    fn trimming_bound_is_exact() {
        // Heavily skewed sample produces raw weights far above the cap.
        let mut rng = substream(21, Domain::SeedDraw, 0);
        let gamma = rand_distr::Gamma::new(0.8, 1.0).unwrap();
        let y: Vec<f64> = (0..300).map(|_| gamma.sample(&mut rng)).collect();
        for &trim in &[1.0, 2.5, 20.0] {
            let w = inverse_kde_weights(&y, WeightMode::Inverse, trim).unwrap();
            let ws = w.as_slice();
            let max = ws.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
            let med = stats::median(ws);
            assert!(
                max <= trim * med,
                "trim {trim}: max {max} > {}",
                trim * med
            );
            assert_relative_eq!(ws.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn trim_factor_below_one_is_rejected() {
        let y = [1.0, 2.0, 3.0];
        assert!(inverse_kde_weights(&y, WeightMode::Inverse, 0.5).is_err());
    }

    #[test]
    fn affine_rescaling_leaves_weights_unchanged() {
        let mut rng = substream(22, Domain::SeedDraw, 0);
        let gamma = rand_distr::Gamma::new(2.0, 1.0).unwrap();
        let y: Vec<f64> = (0..200).map(|_| gamma.sample(&mut rng)).collect();
        let scaled: Vec<f64> = y.iter().map(|&v| -3.0 * v + 7.0).collect();
        for mode in [WeightMode::Inverse, WeightMode::InverseSquared] {
            let a = inverse_kde_weights(&y, mode, 20.0).unwrap();
            let b = inverse_kde_weights(&scaled, mode, 20.0).unwrap();
            for (x, z) in a.as_slice().iter().zip(b.as_slice()) {
                assert!((x - z).abs() <= 1e-9, "{x} vs {z}");
            }
        }
    }

    #[test]
    fn reweighted_resample_is_near_uniform() {
        // Resampling a skewed-Gamma target with inverse-KDE weights should
        // look approximately uniform over the sample range.
        let mut rng = substream(23, Domain::SeedDraw, 0);
        let gamma = rand_distr::Gamma::new(2.0, 1.0).unwrap();
        let y: Vec<f64> = (0..2000).map(|_| gamma.sample(&mut rng)).collect();
        let w = inverse_kde_weights(&y, WeightMode::Inverse, 20.0).unwrap();
        let seeds = draw_seeds(&w, 20_000, &mut rng).unwrap();
        let mut drawn: Vec<f64> = seeds.iter().map(|&s| y[s]).collect();
        drawn.sort_unstable_by(f64::total_cmp);
        let lo = y.iter().cloned().fold(f64::INFINITY, f64::min);
        let hi = y.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut ks: f64 = 0.0;
        for (i, &v) in drawn.iter().enumerate() {
            let f = ((v - lo) / (hi - lo)).clamp(0.0, 1.0);
            let lo_emp = i as f64 / drawn.len() as f64;
            let hi_emp = (i + 1) as f64 / drawn.len() as f64;
            ks = ks.max((f - lo_emp).abs()).max((f - hi_emp).abs());
        }
        assert!(ks < 0.15, "KS distance to uniform = {ks}");
    }

    #[test]
    fn point_mass_weights_draw_one_index() {
        let w = DrawingWeights::user(&[1.0, 0.0, 0.0]).unwrap();
        let mut rng = substream(24, Domain::SeedDraw, 0);
        let seeds = draw_seeds(&w, 500, &mut rng).unwrap();
        assert!(seeds.iter().all(|&s| s == 0));
    }

    #[test]
    fn uniform_draw_frequencies_within_multinomial_bound() {
        let n = 10usize;
        let w = DrawingWeights::uniform(n).unwrap();
        let mut rng = substream(25, Domain::SeedDraw, 0);
        let big = 1_000_000usize;
        let seeds = draw_seeds(&w, big, &mut rng).unwrap();
        let mut counts = vec![0usize; n];
        for s in seeds {
            counts[s] += 1;
        }
        let p = 1.0 / n as f64;
        let sigma = (big as f64 * p * (1.0 - p)).sqrt();
        for c in counts {
            assert!(
                (c as f64 - big as f64 * p).abs() < 3.0 * sigma,
                "count {c} outside 3 sigma"
            );
        }
    }

    #[test]
    fn draws_are_deterministic_given_stream() {
        let w = DrawingWeights::uniform(5).unwrap();
        let a = draw_seeds(&w, 100, &mut substream(9, Domain::SeedDraw, 3)).unwrap();
        let b = draw_seeds(&w, 100, &mut substream(9, Domain::SeedDraw, 3)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_draws_is_an_error() {
        let w = DrawingWeights::uniform(3).unwrap();
        assert!(matches!(
            draw_seeds(&w, 0, &mut substream(1, Domain::SeedDraw, 0)),
            Err(Error::EmptyDraw)
        ));
    }

    #[test]
    fn user_weights_validation() {
        assert!(DrawingWeights::user(&[]).is_err());
        assert!(DrawingWeights::user(&[0.0, 0.0]).is_err());
        assert!(DrawingWeights::user(&[-1.0, 2.0]).is_err());
        assert!(DrawingWeights::user(&[f64::NAN, 1.0]).is_err());
        let w = DrawingWeights::user(&[2.0, 6.0]).unwrap();
        assert_relative_eq!(w.as_slice()[0], 0.25);
    }
}
