//! Descriptive statistics over `f64` slices: moments, quantiles, skewness
//! and their weighted counterparts.

use alloc::vec::Vec;

use crate::numeric::fx;

pub fn mean(xs: &[f64]) -> f64 {
    debug_assert!(!xs.is_empty());
    xs.iter().sum::<f64>() / xs.len() as f64
}

/// Unbiased sample variance (n - 1 denominator); 0 for n < 2.
pub fn variance(xs: &[f64]) -> f64 {
    let n = xs.len();
    if n < 2 {
        return 0.0;
    }
    let m = mean(xs);
    xs.iter().map(|&x| (x - m) * (x - m)).sum::<f64>() / (n - 1) as f64
}

pub fn std_dev(xs: &[f64]) -> f64 {
    fx::sqrt(variance(xs))
}

/// Type-7 (linear interpolation) quantile of an unsorted sample.
pub fn quantile(xs: &[f64], p: f64) -> f64 {
    let mut sorted = xs.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    quantile_sorted(&sorted, p)
}

/// Type-7 quantile of an ascending-sorted sample.
pub fn quantile_sorted(sorted: &[f64], p: f64) -> f64 {
    debug_assert!(!sorted.is_empty());
    debug_assert!((0.0..=1.0).contains(&p));
    let n = sorted.len();
    if n == 1 {
        return sorted[0];
    }
    let h = (n - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = (lo + 1).min(n - 1);
    let frac = h - lo as f64;
    sorted[lo] + frac * (sorted[hi] - sorted[lo])
}

pub fn median(xs: &[f64]) -> f64 {
    quantile(xs, 0.5)
}

pub fn interquartile_range(xs: &[f64]) -> f64 {
    let mut sorted = xs.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    quantile_sorted(&sorted, 0.75) - quantile_sorted(&sorted, 0.25)
}

/// Moment-based sample skewness g1 = m3 / m2^(3/2); 0 for degenerate samples.
pub fn skewness(xs: &[f64]) -> f64 {
    let n = xs.len() as f64;
    if xs.len() < 3 {
        return 0.0;
    }
    let m = mean(xs);
    let m2 = xs.iter().map(|&x| (x - m) * (x - m)).sum::<f64>() / n;
    if m2 <= 0.0 {
        return 0.0;
    }
    let m3 = xs.iter().map(|&x| (x - m) * (x - m) * (x - m)).sum::<f64>() / n;
    m3 / fx::powf(m2, 1.5)
}

/// Weighted mean with weights summing to anything positive.
pub fn weighted_mean(xs: &[f64], w: &[f64]) -> f64 {
    debug_assert_eq!(xs.len(), w.len());
    let sw: f64 = w.iter().sum();
    xs.iter().zip(w).map(|(&x, &wi)| wi * x).sum::<f64>() / sw
}

/// Weighted standard deviation sqrt(sum w (x - m)^2 / sum w).
pub fn weighted_std_dev(xs: &[f64], w: &[f64]) -> f64 {
    let m = weighted_mean(xs, w);
    let sw: f64 = w.iter().sum();
    let v = xs
        .iter()
        .zip(w)
        .map(|(&x, &wi)| wi * (x - m) * (x - m))
        .sum::<f64>()
        / sw;
    fx::sqrt(v.max(0.0))
}

/// Weighted quantile by linear interpolation of the cumulative weight.
pub fn weighted_quantile(xs: &[f64], w: &[f64], p: f64) -> f64 {
    debug_assert_eq!(xs.len(), w.len());
    debug_assert!(!xs.is_empty());
    let mut order: Vec<usize> = (0..xs.len()).collect();
    order.sort_unstable_by(|&a, &b| xs[a].total_cmp(&xs[b]));
    let sw: f64 = w.iter().sum();
    let target = p * sw;
    let mut cum = 0.0;
    for (pos, &i) in order.iter().enumerate() {
        let next = cum + w[i];
        if next >= target || pos == order.len() - 1 {
            return xs[i];
        }
        cum = next;
    }
    xs[order[order.len() - 1]]
}

/// Kish effective sample size (sum w)^2 / sum w^2.
pub fn effective_sample_size(w: &[f64]) -> f64 {
    let sw: f64 = w.iter().sum();
    let sw2: f64 = w.iter().map(|&x| x * x).sum();
    if sw2 <= 0.0 {
        return 0.0;
    }
    sw * sw / sw2
}

pub fn pearson_correlation(a: &[f64], b: &[f64]) -> Option<f64> {
    debug_assert_eq!(a.len(), b.len());
    let n = a.len() as f64;
    if a.len() < 2 {
        return None;
    }
    let ma = mean(a);
    let mb = mean(b);
    let mut cov = 0.0;
    let mut va = 0.0;
    let mut vb = 0.0;
    for (&x, &y) in a.iter().zip(b) {
        cov += (x - ma) * (y - mb);
        va += (x - ma) * (x - ma);
        vb += (y - mb) * (y - mb);
    }
    let _ = n;
    if va <= 0.0 || vb <= 0.0 {
        return None;
    }
    Some(cov / fx::sqrt(va * vb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn quantiles_match_type7() {
        let xs = [1.0, 2.0, 3.0, 4.0];
        assert_relative_eq!(quantile(&xs, 0.5), 2.5);
        assert_relative_eq!(quantile(&xs, 0.25), 1.75);
        assert_relative_eq!(quantile(&xs, 0.0), 1.0);
        assert_relative_eq!(quantile(&xs, 1.0), 4.0);
        assert_relative_eq!(median(&[3.0, 1.0, 2.0]), 2.0);
    }

    #[test]
    fn moments() {
        let xs = [2.0, 4.0, 4.0, 4.0, 5.0, 5.0, 7.0, 9.0];
        assert_relative_eq!(mean(&xs), 5.0);
        assert_relative_eq!(variance(&xs), 32.0 / 7.0);
        // Symmetric sample has zero skewness.
        assert_relative_eq!(skewness(&[-1.0, 0.0, 1.0]), 0.0, epsilon = 1e-14);
        // Exponential-ish sample is right-skewed.
        assert!(skewness(&[0.1, 0.2, 0.3, 0.5, 0.9, 4.0]) > 1.0);
    }

    #[test]
    fn weighted_stats_reduce_to_unweighted() {
        let xs = [1.0, 2.0, 3.0, 10.0];
        let w = [1.0, 1.0, 1.0, 1.0];
        assert_relative_eq!(weighted_mean(&xs, &w), mean(&xs));
        let pop_sd = {
            let m = mean(&xs);
            let v = xs.iter().map(|&x| (x - m) * (x - m)).sum::<f64>() / 4.0;
            v.sqrt()
        };
        assert_relative_eq!(weighted_std_dev(&xs, &w), pop_sd);
        assert_relative_eq!(effective_sample_size(&w), 4.0);
    }

    #[test]
    fn weighted_quantile_point_mass() {
        let xs = [1.0, 5.0, 9.0];
        let w = [0.0, 1.0, 0.0];
        assert_relative_eq!(weighted_quantile(&xs, &w, 0.5), 5.0);
    }

    #[test]
    fn pearson_basics() {
        let a = [1.0, 2.0, 3.0];
        assert_relative_eq!(pearson_correlation(&a, &a).unwrap(), 1.0);
        let b = [3.0, 2.0, 1.0];
        assert_relative_eq!(pearson_correlation(&a, &b).unwrap(), -1.0);
        assert!(pearson_correlation(&a, &[2.0, 2.0, 2.0]).is_none());
    }
}
