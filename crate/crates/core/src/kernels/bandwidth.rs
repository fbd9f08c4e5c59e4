//! Bandwidth selection.
//!
//! * Gaussian kernel: Silverman's rule `h = 1.06 sigma n^(-1/5)` with
//!   `sigma = min(sd, IQR/1.34)`.
//! * Binomial kernel: likelihood cross-validation on a 50-point grid over
//!   (0, 1).
//! * Bounded / half-line kernels: least-squares cross-validation, minimized
//!   by golden-section search (bracketed by a coarse scan so a multimodal
//!   objective cannot trap the search in a side valley) over
//!   `[1e-4 * range, range]`.
//! * Dirac: the bandwidth is unused; 0 is returned.
//!
//! A zero-variance sample cannot drive any selector; a minimal positive
//! bandwidth `1e-6 * (1 + |mean|)` is returned with a warning.

use alloc::vec::Vec;

use crate::numeric::{fx, quad, stats};
use crate::{Error, Result};

use super::{FittedKernel, KernelKind};

/// Silverman's rule of thumb for a Gaussian kernel.
pub fn silverman_bandwidth(sample: &[f64]) -> f64 {
    let n = sample.len() as f64;
    let sd = stats::std_dev(sample);
    let iqr = stats::interquartile_range(sample);
    let sigma = if iqr > 0.0 { sd.min(iqr / 1.34) } else { sd };
    1.06 * sigma * fx::powf(n, -0.2)
}

/// Pick a bandwidth for `kind` from `sample`.
pub fn estimate_bandwidth(kind: &KernelKind, sample: &[f64]) -> Result<f64> {
    if matches!(kind, KernelKind::Dirac) {
        return Ok(0.0);
    }
    if sample.len() < 2 {
        return Err(Error::SampleTooSmall {
            need: 2,
            got: sample.len(),
        });
    }
    for &x in sample {
        kind.validate_center(x)?;
    }
    let min = sample.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = sample.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if min == max {
        log::warn!("zero-variance sample; falling back to a minimal bandwidth");
        let fallback = 1e-6 * (1.0 + stats::mean(sample).abs());
        return Ok(match kind {
            KernelKind::Binomial => fallback.min(0.5),
            _ => fallback,
        });
    }
    match *kind {
        KernelKind::Gaussian => Ok(silverman_bandwidth(sample)),
        KernelKind::Binomial => Ok(binomial_likelihood_cv(sample)),
        KernelKind::Dirac => unreachable!(),
        _ => Ok(lscv_bandwidth(kind, sample)),
    }
}

/// Grid size for the Binomial likelihood cross-validation.
const LCV_GRID: usize = 50;

fn binomial_likelihood_cv(sample: &[f64]) -> f64 {
    // Count columns repeat values heavily; grouping by distinct value turns
    // the n^2 leave-one-out sum into one over distinct pairs.
    let mut distinct: Vec<(f64, f64)> = Vec::new();
    let mut sorted = sample.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    for &v in &sorted {
        match distinct.last_mut() {
            Some((d, c)) if *d == v => *c += 1.0,
            _ => distinct.push((v, 1.0)),
        }
    }
    let n = sample.len() as f64;
    let mut best = (f64::NEG_INFINITY, 0.5);
    for t in 1..=LCV_GRID {
        let h = t as f64 / (LCV_GRID + 1) as f64;
        let kernel = FittedKernel { kind: KernelKind::Binomial, h };
        let conds: Vec<_> = distinct
            .iter()
            .map(|&(v, _)| kernel.conditional(v).expect("validated centers"))
            .collect();
        let mut loglik = 0.0;
        for (i, &(u, cu)) in distinct.iter().enumerate() {
            let mut mix = 0.0;
            for (j, &(_, cv)) in distinct.iter().enumerate() {
                mix += cv * conds[j].density(u);
            }
            // Leave one observation of value u out of its own estimate.
            mix -= conds[i].density(u);
            let f = mix / (n - 1.0);
            loglik += cu * if f > 0.0 { fx::ln(f) } else { -1e300 };
        }
        if loglik > best.0 {
            best = (loglik, h);
        }
    }
    best.1
}

/// Search interval for the least-squares cross-validation bandwidth:
/// `[1e-4 * range, range]` of the sample.
pub fn lscv_search_interval(sample: &[f64]) -> (f64, f64) {
    let min = sample.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = sample.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let range = max - min;
    (1e-4 * range, range)
}

/// Least-squares cross-validation objective
/// `J(h) = integral of fhat^2 - (2/n) sum_i fhat_{-i}(x_i)`,
/// with the squared-density integral taken by Simpson quadrature over a
/// window covering the kernel mass.
pub fn lscv_objective(kind: &KernelKind, sample: &[f64], h: f64) -> Result<f64> {
    let n = sample.len() as f64;
    let kernel = FittedKernel::with_bandwidth(*kind, h)?;
    let conds = sample
        .iter()
        .map(|&x| kernel.conditional(x))
        .collect::<Result<Vec<_>>>()?;
    let (lo, hi) = integration_window(kind, sample, h);
    let fhat = |u: f64| conds.iter().map(|c| c.density(u)).sum::<f64>() / n;
    let int_f2 = quad::simpson(|u| fhat(u) * fhat(u), lo, hi, 200);
    let mut loo = 0.0;
    for (i, &xi) in sample.iter().enumerate() {
        let mut mix = 0.0;
        for (j, c) in conds.iter().enumerate() {
            if j != i {
                mix += c.density(xi);
            }
        }
        loo += mix / (n - 1.0);
    }
    Ok(int_f2 - 2.0 / n * loo)
}

fn integration_window(kind: &KernelKind, sample: &[f64], h: f64) -> (f64, f64) {
    let min = sample.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = sample.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    match *kind {
        KernelKind::Beta01 => (0.0, 1.0),
        KernelKind::TruncatedGaussian { lower, upper } => (lower, upper),
        KernelKind::Gamma { lower } => {
            // A Gamma kernel at center x has mean x + h and variance
            // h (x - lower) + h^2; 12 standard deviations covers the tail.
            let sd = fx::sqrt(h * (max - lower) + h * h);
            (lower, max + h + 12.0 * sd)
        }
        KernelKind::NegativeGamma { upper } => {
            let sd = fx::sqrt(h * (upper - min) + h * h);
            (min - h - 12.0 * sd, upper)
        }
        _ => (min - 8.0 * h, max + 8.0 * h),
    }
}

const GOLDEN_RATIO_CONJ: f64 = 0.618_033_988_749_894_9;

fn lscv_bandwidth(kind: &KernelKind, sample: &[f64]) -> f64 {
    let (lo, hi) = lscv_search_interval(sample);
    let objective = |h: f64| {
        lscv_objective(kind, sample, h).unwrap_or(f64::INFINITY)
    };
    // Coarse scan to bracket the global minimum, then refine.
    const SCAN: usize = 32;
    let step = (hi - lo) / (SCAN - 1) as f64;
    let mut best = (f64::INFINITY, 0usize);
    for i in 0..SCAN {
        let j = objective(lo + step * i as f64);
        if j < best.0 {
            best = (j, i);
        }
    }
    let a = lo + step * best.1.saturating_sub(1) as f64;
    let b = (lo + step * (best.1 + 1) as f64).min(hi);
    golden_section_min(objective, a, b, 1e-4 * (hi - lo))
}

fn golden_section_min<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut c = b - GOLDEN_RATIO_CONJ * (b - a);
    let mut d = a + GOLDEN_RATIO_CONJ * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - GOLDEN_RATIO_CONJ * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + GOLDEN_RATIO_CONJ * (b - a);
            fd = f(d);
        }
    }
    0.5 * (a + b)
}
