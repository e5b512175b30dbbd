use num_complex::Complex64;
use std::f64::consts::PI;

use super::dd::{self, Dd};

/// Below this height θ comes from the complex log-gamma function; the
/// Stirling expansion is used from here up.
pub const ASYMPTOTIC_FROM: f64 = 10.0;

// Odd-power coefficients of the Stirling expansion of θ beyond the leading terms:
// 1/(48t) + 7/(5760t³) + 31/(80640t⁵) + 127/(430080t⁷) + 511/(1216512t⁹).
const THETA_TAIL: [f64; 5] = [
    1.0 / 48.0,
    7.0 / 5760.0,
    31.0 / 80640.0,
    127.0 / 430080.0,
    511.0 / 1216512.0,
];

fn theta_tail(t: f64) -> f64 {
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    let mut acc = 0.0;
    for c in THETA_TAIL.iter().rev() {
        acc = acc * inv2 + c;
    }
    acc * inv - PI / 8.0
}

/// Riemann–Siegel theta function θ(t) = arg Γ(¼ + it/2) − (t/2) ln π.
///
/// Odd in `t`. Uses the Stirling expansion (evaluated in double-double) for
/// `|t| ≥ 10` and a shifted Stirling series for the complex log-gamma below.
pub fn riemann_siegel_theta(t: f64) -> f64 {
    if t < 0.0 {
        return -riemann_siegel_theta(-t);
    }
    if t < ASYMPTOTIC_FROM {
        return theta_small(t);
    }
    theta_dd(t).to_f64()
}

/// θ(t) in double-double, for `t ≥ 10`.
pub fn theta_dd(t: f64) -> Dd {
    debug_assert!(t >= ASYMPTOTIC_FROM);
    // (t/2)·(ln(t/2π) − 1)
    let log_term = (Dd::new(t) / dd::TWO_PI).ln().add_f64(-1.0);
    let main = log_term.mul_f64(0.5 * t);
    main.add_f64(theta_tail(t))
}

/// θ′(t) = ½ ln(t/2π) − 1/(48t²) − 7/(1920t⁴) − 31/(16128t⁶), for `t ≥ 10`.
pub fn theta_derivative(t: f64) -> f64 {
    let inv2 = 1.0 / (t * t);
    0.5 * (t / (2.0 * PI)).ln() - inv2 * (1.0 / 48.0 + inv2 * (7.0 / 1920.0 + inv2 * (31.0 / 16128.0)))
}

fn theta_small(t: f64) -> f64 {
    let z = Complex64::new(0.25, 0.5 * t);
    ln_gamma(z).im - 0.5 * t * PI.ln()
}

// B_{2k} / (2k(2k−1)) for the Stirling series of ln Γ.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
];

/// Complex log-gamma on the continuous branch, for `Re z > 0`.
///
/// Shifts the argument up by 12 and applies the Stirling series; the
/// imaginary part is the continuous arg Γ(z) (not reduced mod 2π).
pub fn ln_gamma(z: Complex64) -> Complex64 {
    const SHIFT: usize = 12;
    let mut correction = Complex64::new(0.0, 0.0);
    let mut w = z;
    for _ in 0..SHIFT {
        correction += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut pow = inv;
    for c in STIRLING {
        series += pow * c;
        pow *= inv2;
    }
    (w - 0.5) * w.ln() - w + 0.5 * (2.0 * PI).ln() + series - correction
}
