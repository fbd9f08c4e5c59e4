//! Simpson quadrature: a fixed-grid rule for hot loops (cross-validation
//! objectives) and an adaptive rule for normalization checks.

/// Composite Simpson rule with `panels` panels (must be even and >= 2).
pub fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    debug_assert!(panels >= 2 && panels % 2 == 0);
    let h = (b - a) / panels as f64;
    let mut acc = f(a) + f(b);
    for i in 1..panels {
        let x = a + h * i as f64;
        acc += if i % 2 == 1 { 4.0 * f(x) } else { 2.0 * f(x) };
    }
    acc * h / 3.0
}

/// Adaptive Simpson with Richardson error control.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    adaptive_step(&f, a, b, fa, fb, fm, whole, tol, 50)
}

#[allow(clippy::too_many_arguments)]
fn adaptive_step<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fb: f64,
    fm: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    adaptive_step(f, a, m, fa, fm, flm, left, tol * 0.5, depth - 1)
        + adaptive_step(f, m, b, fm, fb, frm, right, tol * 0.5, depth - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn polynomials_are_exact() {
        // Simpson is exact for cubics.
        let f = |x: f64| 3.0 * x * x * x - x + 2.0;
        assert_relative_eq!(simpson(f, 0.0, 2.0, 2), 12.0 - 2.0 + 4.0, max_relative = 1e-14);
        assert_relative_eq!(adaptive_simpson(f, 0.0, 2.0, 1e-12), 14.0, max_relative = 1e-12);
    }

    #[test]
    fn exponential_integral() {
        // Integral of e^-x over [0, 10] = 1 - e^-10.
        let f = |x: f64| (-x).exp();
        let expect = 1.0 - (-10.0f64).exp();
        assert_relative_eq!(adaptive_simpson(f, 0.0, 10.0, 1e-10), expect, max_relative = 1e-9);
        assert_relative_eq!(simpson(f, 0.0, 10.0, 512), expect, max_relative = 1e-9);
    }

    #[test]
    fn sharp_peak() {
        // Narrow Gaussian needs the adaptive refinement.
        let f = |x: f64| (-0.5 * (x / 0.01) * (x / 0.01)).exp() / (0.01 * (2.0 * core::f64::consts::PI).sqrt());
        let got = adaptive_simpson(f, -1.0, 1.0, 1e-9);
        assert_relative_eq!(got, 1.0, max_relative = 1e-7);
    }
}
