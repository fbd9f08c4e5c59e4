//! Univariate kernels adapted to variable supports.
//!
//! A smoothed bootstrap draws a seed observation and perturbs it with kernel
//! noise. The classical choice is a Gaussian kernel, which leaks mass outside
//! bounded or discrete supports; the non-classical kernels here keep every
//! draw inside the variable's support:
//!
//! * `Gaussian` for the real line,
//! * `Binomial` for non-negative integers,
//! * `Gamma` / `NegativeGamma` for half-lines,
//! * `Beta01` for the unit interval,
//! * `TruncatedGaussian` for bounded intervals,
//! * `Dirac` (point mass), which degenerates to the plain bootstrap.
//!
//! For a center `x` and bandwidth `h`, [`kernel_density`] evaluates the
//! density (or probability mass) `K_h(u, x)` and [`kernel_sample`] draws from
//! exactly that distribution. [`estimate_bandwidth`] picks `h` from a sample:
//! Silverman's rule for the Gaussian kernel, likelihood cross-validation for
//! the Binomial and least-squares cross-validation for the bounded and
//! half-line kernels.

mod bandwidth;

use alloc::vec::Vec;

use rand::Rng;
use rand_distr::Distribution;

use crate::dataset::VariableKind;
use crate::numeric::{fx, special};
use crate::{Error, Result};

pub use bandwidth::{estimate_bandwidth, lscv_objective, lscv_search_interval, silverman_bandwidth};

/// Kernel family, carrying the support parameters it needs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KernelKind {
    Gaussian,
    Binomial,
    Gamma { lower: f64 },
    NegativeGamma { upper: f64 },
    Beta01,
    TruncatedGaussian { lower: f64, upper: f64 },
    Dirac,
}

impl KernelKind {
    /// The kernel matching a variable's support.
    pub fn for_variable(kind: &VariableKind) -> KernelKind {
        match *kind {
            VariableKind::RealLine => KernelKind::Gaussian,
            VariableKind::Count => KernelKind::Binomial,
            VariableKind::PositiveHalfLine { lower } => KernelKind::Gamma { lower },
            VariableKind::NegativeHalfLine { upper } => KernelKind::NegativeGamma { upper },
            VariableKind::UnitInterval => KernelKind::Beta01,
            VariableKind::BoundedInterval { lower, upper } => {
                KernelKind::TruncatedGaussian { lower, upper }
            }
        }
    }

    /// Whether this kernel may serve a column of the given kind. Dirac is
    /// compatible with everything (plain bootstrap never leaves the support).
    pub fn compatible_with(&self, kind: &VariableKind) -> bool {
        matches!(self, KernelKind::Dirac) || *self == KernelKind::for_variable(kind)
    }

    pub fn name(&self) -> &'static str {
        match self {
            KernelKind::Gaussian => "Gaussian",
            KernelKind::Binomial => "Binomial",
            KernelKind::Gamma { .. } => "Gamma",
            KernelKind::NegativeGamma { .. } => "NegativeGamma",
            KernelKind::Beta01 => "Beta01",
            KernelKind::TruncatedGaussian { .. } => "TruncatedGaussian",
            KernelKind::Dirac => "Dirac",
        }
    }

    /// Check that `x` is a valid kernel center (lies in the support; integer
    /// for the Binomial kernel).
    pub fn validate_center(&self, x: f64) -> Result<()> {
        let ok = match *self {
            KernelKind::Gaussian | KernelKind::Dirac => x.is_finite(),
            KernelKind::Binomial => x.is_finite() && x >= 0.0 && x.fract() == 0.0,
            KernelKind::Gamma { lower } => x >= lower,
            KernelKind::NegativeGamma { upper } => x <= upper,
            KernelKind::Beta01 => (0.0..=1.0).contains(&x),
            KernelKind::TruncatedGaussian { lower, upper } => x >= lower && x <= upper,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::CenterOutsideSupport { x })
        }
    }
}

/// A kernel kind with its bandwidth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FittedKernel {
    pub kind: KernelKind,
    pub h: f64,
}

impl FittedKernel {
    /// Estimate the bandwidth from `sample` and wrap it.
    pub fn fit(kind: KernelKind, sample: &[f64]) -> Result<Self> {
        let h = estimate_bandwidth(&kind, sample)?;
        Ok(Self { kind, h })
    }

    /// Use a caller-supplied bandwidth (h > 0; in (0,1) for Binomial; ignored
    /// for Dirac).
    pub fn with_bandwidth(kind: KernelKind, h: f64) -> Result<Self> {
        match kind {
            KernelKind::Dirac => return Ok(Self { kind, h: 0.0 }),
            KernelKind::Binomial => {
                if !(h > 0.0 && h < 1.0) {
                    return Err(Error::InvalidConfig(alloc::format!(
                        "Binomial bandwidth must lie in (0,1), got {h}"
                    )));
                }
            }
            _ => {
                if !(h > 0.0 && h.is_finite()) {
                    return Err(Error::InvalidConfig(alloc::format!(
                        "bandwidth must be positive and finite, got {h}"
                    )));
                }
            }
        }
        Ok(Self { kind, h })
    }

    /// The distribution of this kernel centered at `x`, with normalizing
    /// constants precomputed.
    pub fn conditional(&self, x: f64) -> Result<ConditionalKernel> {
        self.kind.validate_center(x)?;
        let h = self.h;
        let inner = match self.kind {
            KernelKind::Gaussian => Cond::Gaussian { x, h },
            KernelKind::Binomial => {
                let trials = x as u64 + 1;
                let p = (x + h) / (x + 1.0);
                Cond::Binomial {
                    trials,
                    p,
                    ln_p: fx::ln(x + h) - fx::ln(x + 1.0),
                    ln_1mp: fx::ln(1.0 - h) - fx::ln(x + 1.0),
                }
            }
            KernelKind::Gamma { lower } => {
                let shape = 1.0 + (x - lower) / h;
                Cond::Gamma {
                    lower,
                    shape,
                    h,
                    ln_norm: special::ln_gamma(shape) + shape * fx::ln(h),
                }
            }
            KernelKind::NegativeGamma { upper } => {
                let shape = 1.0 + (upper - x) / h;
                Cond::NegativeGamma {
                    upper,
                    shape,
                    h,
                    ln_norm: special::ln_gamma(shape) + shape * fx::ln(h),
                }
            }
            KernelKind::Beta01 => {
                let alpha = x / h + 1.0;
                let beta = (1.0 - x) / h + 1.0;
                Cond::Beta {
                    alpha,
                    beta,
                    ln_norm: special::ln_beta(alpha, beta),
                }
            }
            KernelKind::TruncatedGaussian { lower, upper } => {
                let lo_cdf = special::normal_cdf((lower - x) / h);
                let hi_cdf = special::normal_cdf((upper - x) / h);
                Cond::TruncatedGaussian {
                    x,
                    h,
                    lower,
                    upper,
                    lo_cdf,
                    hi_cdf,
                }
            }
            KernelKind::Dirac => Cond::Dirac { x },
        };
        Ok(ConditionalKernel { inner })
    }
}

/// A kernel pinned to one center: evaluates its density and draws from it.
#[derive(Debug, Clone, Copy)]
pub struct ConditionalKernel {
    inner: Cond,
}

#[derive(Debug, Clone, Copy)]
enum Cond {
    Gaussian {
        x: f64,
        h: f64,
    },
    Binomial {
        trials: u64,
        p: f64,
        ln_p: f64,
        ln_1mp: f64,
    },
    Gamma {
        lower: f64,
        shape: f64,
        h: f64,
        ln_norm: f64,
    },
    NegativeGamma {
        upper: f64,
        shape: f64,
        h: f64,
        ln_norm: f64,
    },
    Beta {
        alpha: f64,
        beta: f64,
        ln_norm: f64,
    },
    TruncatedGaussian {
        x: f64,
        h: f64,
        lower: f64,
        upper: f64,
        lo_cdf: f64,
        hi_cdf: f64,
    },
    Dirac {
        x: f64,
    },
}

impl ConditionalKernel {
    /// Density at `u` (probability mass for Binomial and Dirac). Zero outside
    /// the support.
    pub fn density(&self, u: f64) -> f64 {
        match self.inner {
            Cond::Gaussian { x, h } => special::normal_pdf((u - x) / h) / h,
            Cond::Binomial {
                trials,
                ln_p,
                ln_1mp,
                ..
            } => {
                if u < 0.0 || u.fract() != 0.0 || u > trials as f64 {
                    return 0.0;
                }
                let k = u as u64;
                fx::exp(
                    special::ln_choose(trials, k)
                        + k as f64 * ln_p
                        + (trials - k) as f64 * ln_1mp,
                )
            }
            Cond::Gamma {
                lower,
                shape,
                h,
                ln_norm,
            } => {
                let t = u - lower;
                gamma_pdf_shifted(t, shape, h, ln_norm)
            }
            Cond::NegativeGamma {
                upper,
                shape,
                h,
                ln_norm,
            } => {
                let t = upper - u;
                gamma_pdf_shifted(t, shape, h, ln_norm)
            }
            Cond::Beta {
                alpha,
                beta,
                ln_norm,
            } => {
                if !(0.0..=1.0).contains(&u) {
                    return 0.0;
                }
                // Edge values need the shape-one limits to avoid 0 * inf.
                if u == 0.0 {
                    return if alpha == 1.0 { fx::exp(-ln_norm) } else { 0.0 };
                }
                if u == 1.0 {
                    return if beta == 1.0 { fx::exp(-ln_norm) } else { 0.0 };
                }
                fx::exp((alpha - 1.0) * fx::ln(u) + (beta - 1.0) * fx::ln_1p(-u) - ln_norm)
            }
            Cond::TruncatedGaussian {
                x,
                h,
                lower,
                upper,
                lo_cdf,
                hi_cdf,
            } => {
                if u < lower || u > upper {
                    return 0.0;
                }
                special::normal_pdf((u - x) / h) / (h * (hi_cdf - lo_cdf))
            }
            Cond::Dirac { x } => {
                if u == x {
                    1.0
                } else {
                    0.0
                }
            }
        }
    }

    /// Exact draw from this kernel distribution.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match self.inner {
            Cond::Gaussian { x, h } => {
                let z: f64 = rand_distr::StandardNormal.sample(rng);
                x + h * z
            }
            Cond::Binomial { trials, p, .. } => {
                let d = rand_distr::Binomial::new(trials, p)
                    .expect("binomial parameters validated at construction");
                d.sample(rng) as f64
            }
            Cond::Gamma { lower, shape, h, .. } => {
                let d = rand_distr::Gamma::new(shape, h)
                    .expect("gamma parameters validated at construction");
                lower + d.sample(rng)
            }
            Cond::NegativeGamma { upper, shape, h, .. } => {
                let d = rand_distr::Gamma::new(shape, h)
                    .expect("gamma parameters validated at construction");
                upper - d.sample(rng)
            }
            Cond::Beta { alpha, beta, .. } => sample_beta(alpha, beta, rng),
            Cond::TruncatedGaussian {
                x,
                h,
                lower,
                upper,
                lo_cdf,
                hi_cdf,
            } => {
                let u: f64 = rng.random();
                let p = (lo_cdf + u * (hi_cdf - lo_cdf)).clamp(1e-300, 1.0 - 1e-16);
                (x + h * special::normal_quantile(p)).clamp(lower, upper)
            }
            Cond::Dirac { x } => x,
        }
    }
}

fn gamma_pdf_shifted(t: f64, shape: f64, h: f64, ln_norm: f64) -> f64 {
    if t < 0.0 {
        return 0.0;
    }
    if t == 0.0 {
        // Shape 1 is the exponential kernel with density 1/h at the origin.
        return if shape == 1.0 { 1.0 / h } else { 0.0 };
    }
    fx::exp((shape - 1.0) * fx::ln(t) - t / h - ln_norm)
}

/// Draw Beta(alpha, beta) as a two-Gamma ratio.
pub fn sample_beta<R: Rng + ?Sized>(alpha: f64, beta: f64, rng: &mut R) -> f64 {
    let ga = rand_distr::Gamma::new(alpha, 1.0)
        .expect("beta shape parameters must be positive")
        .sample(rng);
    let gb = rand_distr::Gamma::new(beta, 1.0)
        .expect("beta shape parameters must be positive")
        .sample(rng);
    if ga + gb == 0.0 {
        // Numerically possible for tiny shapes; fall back to the midpoint.
        return 0.5;
    }
    ga / (ga + gb)
}

/// Density `K_h(u, x)` of the kernel centered at `x`, evaluated at `u`.
pub fn kernel_density(k: &FittedKernel, u: f64, x: f64) -> Result<f64> {
    Ok(k.conditional(x)?.density(u))
}

/// Exact draw from `kernel_density(k, ., x)`.
pub fn kernel_sample<R: Rng + ?Sized>(k: &FittedKernel, x: f64, rng: &mut R) -> Result<f64> {
    Ok(k.conditional(x)?.sample(rng))
}

/// A kernel density estimate over a sample: the equal-weight mixture of the
/// kernel centered at each observation.
#[derive(Debug, Clone)]
pub struct Kde {
    conditionals: Vec<ConditionalKernel>,
}

impl Kde {
    pub fn fit(sample: &[f64], kind: KernelKind, h: f64) -> Result<Self> {
        if sample.is_empty() {
            return Err(Error::SampleTooSmall { need: 1, got: 0 });
        }
        let kernel = FittedKernel::with_bandwidth(kind, h)?;
        let conditionals = sample
            .iter()
            .map(|&x| kernel.conditional(x))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { conditionals })
    }

    /// Gaussian KDE with the Silverman bandwidth, the default for target
    /// weighting.
    pub fn gaussian_silverman(sample: &[f64]) -> Result<Self> {
        let h = estimate_bandwidth(&KernelKind::Gaussian, sample)?;
        Self::fit(sample, KernelKind::Gaussian, h)
    }

    pub fn eval(&self, u: f64) -> f64 {
        let n = self.conditionals.len() as f64;
        self.conditionals.iter().map(|c| c.density(u)).sum::<f64>() / n
    }
}

/// One-shot KDE evaluation `(1/n) sum_i K_h(u, x_i)`.
pub fn kde_eval(sample: &[f64], kind: KernelKind, h: f64, u: f64) -> Result<f64> {
    Ok(Kde::fit(sample, kind, h)?.eval(u))
}
