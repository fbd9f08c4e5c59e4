//! Transcendental float functions backed by `libm`.
//!
//! `core` provides `abs`, `floor`, `max` and friends for `f64` but not
//! `exp`/`ln`/`powf`/`sqrt`; routing those through `libm` keeps the crate
//! `no_std`-compatible and makes results identical across platforms.

#[inline(always)]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline(always)]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline(always)]
pub fn ln_1p(x: f64) -> f64 {
    libm::log1p(x)
}

#[inline(always)]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

#[inline(always)]
pub fn powf(x: f64, y: f64) -> f64 {
    libm::pow(x, y)
}

#[inline(always)]
pub fn sin(x: f64) -> f64 {
    libm::sin(x)
}

#[inline(always)]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline(always)]
pub fn trunc(x: f64) -> f64 {
    libm::trunc(x)
}

/// Whether a finite float is an exact integer.
#[inline(always)]
pub fn is_integer(x: f64) -> bool {
    libm::floor(x) == x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_std() {
        for &x in &[1e-9, 0.5, 1.0, 2.0, 10.0, 123.456] {
            assert!((exp(x) - x.exp()).abs() <= 1e-13 * x.exp());
            assert!((ln(x) - x.ln()).abs() <= 1e-13 * x.ln().abs().max(1.0));
            assert!((sqrt(x) - x.sqrt()).abs() <= 1e-15 * x.sqrt());
            assert!((powf(x, 1.7) - x.powf(1.7)).abs() <= 1e-12 * x.powf(1.7));
        }
    }
}
