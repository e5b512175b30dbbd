use num_complex::Complex64;
use std::f64::consts::PI;
use std::sync::OnceLock;

use super::tables::{BERNOULLI_OVER_FACTORIAL, C0, C1, C2, C3, C4};
use super::theta::riemann_siegel_theta;
use crate::error::{ensure, LabError, Result};

pub type ComplexValue = Complex64;

/// Heights above which double precision no longer keeps ζ near 10⁻⁶.
pub const MAX_RELIABLE_HEIGHT: f64 = 1e7;
/// Z(t) is evaluated by Euler–Maclaurin below this height and by the
/// Riemann–Siegel formula (corrections C₀..C₄) above it.
pub const RIEMANN_SIEGEL_FROM: f64 = 200.0;

const SIGMA_MIN: f64 = -1.0;
const SIGMA_MAX: f64 = 12.0;
const MIN_BERNOULLI_TERMS: usize = 6;
const LN_TABLE_LEN: usize = 1 << 20;

fn ln_table() -> &'static [f64] {
    static TABLE: OnceLock<Vec<f64>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut v = Vec::with_capacity(LN_TABLE_LEN);
        v.push(f64::NEG_INFINITY);
        for n in 1..LN_TABLE_LEN {
            v.push((n as f64).ln());
        }
        v
    })
}

#[inline]
fn ln_n(n: usize) -> f64 {
    if n < LN_TABLE_LEN {
        ln_table()[n]
    } else {
        (n as f64).ln()
    }
}

/// Number of direct-sum terms used by the Euler–Maclaurin evaluator at `s`.
///
/// The Bernoulli tail converges only while |s + 2k| < 2πN, so N has to grow
/// linearly with the height.
pub fn euler_maclaurin_terms(s: Complex64) -> usize {
    30 + (s.norm() / 4.0).ceil() as usize
}

fn check_domain(s: Complex64) -> Result<()> {
    ensure(s.re.is_finite() && s.im.is_finite(), || {
        LabError::Domain(format!("non-finite argument {s}"))
    })?;
    ensure((SIGMA_MIN..=SIGMA_MAX).contains(&s.re), || {
        LabError::Domain(format!(
            "Re s = {} outside [{SIGMA_MIN}, {SIGMA_MAX}]",
            s.re
        ))
    })?;
    ensure((s - 1.0).norm() > 1e-12, || LabError::Pole)?;
    if s.im.abs() > MAX_RELIABLE_HEIGHT {
        log::warn!("zeta evaluated at height {} beyond 1e7; precision degrades", s.im);
    }
    Ok(())
}

/// ζ(s) by Euler–Maclaurin summation.
///
/// Accepts `-1 ≤ Re s ≤ 12` (the contour counts need a little room on both
/// sides of the critical strip); negative heights go through conjugate
/// symmetry.
pub fn zeta(s: Complex64) -> Result<Complex64> {
    check_domain(s)?;
    Ok(zeta_em(s, euler_maclaurin_terms(s), false).0)
}

/// ζ(s) together with ζ′(s).
pub fn zeta_and_derivative(s: Complex64) -> Result<(Complex64, Complex64)> {
    check_domain(s)?;
    Ok(zeta_em(s, euler_maclaurin_terms(s), true))
}

/// ζ(s) with an explicit truncation: `n_terms` direct terms and exactly
/// `bernoulli_terms` correction terms (at most 30).
pub fn zeta_with_order(s: Complex64, n_terms: usize, bernoulli_terms: usize) -> Result<Complex64> {
    check_domain(s)?;
    ensure(n_terms >= 2 && (1..=30).contains(&bernoulli_terms), || {
        LabError::Domain(format!("bad truncation N={n_terms}, K={bernoulli_terms}"))
    })?;
    Ok(zeta_em_fixed(s, n_terms, bernoulli_terms))
}

fn zeta_em(s: Complex64, n: usize, want_deriv: bool) -> (Complex64, Complex64) {
    if s.im < 0.0 {
        let (z, d) = zeta_em(s.conj(), n, want_deriv);
        return (z.conj(), d.conj());
    }
    em_core(s, n, None, want_deriv)
}

fn zeta_em_fixed(s: Complex64, n: usize, k: usize) -> Complex64 {
    if s.im < 0.0 {
        return zeta_em_fixed(s.conj(), n, k).conj();
    }
    em_core(s, n, Some(k), false).0
}

/// Euler–Maclaurin core for `Im s ≥ 0`. With `fixed_k = None` the Bernoulli
/// tail runs until it drops below 1e-17 of the running sum (at least six
/// terms, at most thirty).
fn em_core(s: Complex64, n: usize, fixed_k: Option<usize>, want_deriv: bool) -> (Complex64, Complex64) {
    let sigma = s.re;
    let t = s.im;
    let (mut re, mut im) = (0.0, 0.0);
    let (mut dre, mut dim) = (0.0, 0.0);
    for m in 1..n {
        let l = ln_n(m);
        let mag = (-sigma * l).exp();
        let (sn, cs) = (t * l).sin_cos();
        re += mag * cs;
        im -= mag * sn;
        if want_deriv {
            dre -= l * mag * cs;
            dim += l * mag * sn;
        }
    }
    let mut sum = Complex64::new(re, im);
    let mut dsum = Complex64::new(dre, dim);

    let nf = n as f64;
    let ln_nf = ln_n(n);
    let n_pow = (-s * ln_nf).exp(); // N^{-s}
    let sm1 = s - 1.0;
    let head = n_pow * nf / sm1;
    sum += head + 0.5 * n_pow;
    if want_deriv {
        dsum += head * (-ln_nf - sm1.inv()) - 0.5 * ln_nf * n_pow;
    }

    // term_k = c_k · P_k(s) · N^{-s-2k+1},  P_k = s(s+1)…(s+2k−2)
    let mut poly = s;
    let mut dpoly = Complex64::new(1.0, 0.0);
    let mut scale = n_pow / nf; // N^{-s-1}
    let inv_n2 = 1.0 / (nf * nf);
    let max_k = fixed_k.unwrap_or(BERNOULLI_OVER_FACTORIAL.len());
    for k in 1..=max_k {
        let c = BERNOULLI_OVER_FACTORIAL[k - 1];
        let term = c * poly * scale;
        sum += term;
        if want_deriv {
            dsum += c * scale * (dpoly - poly * ln_nf);
        }
        if fixed_k.is_none() && k >= MIN_BERNOULLI_TERMS && term.norm() < 1e-17 * sum.norm().max(1e-300) {
            break;
        }
        let a = s + (2 * k - 1) as f64;
        let b = s + (2 * k) as f64;
        let q = a * b;
        let dq = a + b;
        dpoly = dpoly * q + poly * dq;
        poly *= q;
        scale *= inv_n2;
    }
    (sum, dsum)
}

fn horner(c: &[f64], z: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &x| acc * z + x)
}

/// Riemann–Siegel evaluation of Z(t) for `t ≥ 200`.
pub fn hardy_z_riemann_siegel(t: f64) -> f64 {
    let theta = riemann_siegel_theta(t);
    let tau = (t / (2.0 * PI)).sqrt();
    let n_main = tau.floor() as usize;
    let p = tau - n_main as f64;
    let mut main = 0.0;
    for n in 1..=n_main {
        let l = ln_n(n);
        main += (theta - t * l).cos() / (n as f64).sqrt();
    }
    let a = (2.0 * PI / t).sqrt();
    let z = 2.0 * p - 1.0;
    let corr = horner(&C0, z)
        + a * (horner(&C1, z) + a * (horner(&C2, z) + a * (horner(&C3, z) + a * horner(&C4, z))));
    let sign = if n_main % 2 == 1 { 1.0 } else { -1.0 }; // (−1)^{N−1}
    2.0 * main + sign * a.sqrt() * corr
}

/// Hardy's Z-function Z(t) = e^{iθ(t)} ζ(½ + it), real for real `t ≥ 10`.
pub fn hardy_z(t: f64) -> Result<f64> {
    ensure(t >= 10.0 && t.is_finite(), || {
        LabError::Domain(format!("hardy_z needs t >= 10, got {t}"))
    })?;
    if t < RIEMANN_SIEGEL_FROM {
        let s = Complex64::new(0.5, t);
        let z = zeta_em(s, euler_maclaurin_terms(s), false).0;
        return Ok((Complex64::from_polar(1.0, riemann_siegel_theta(t)) * z).re);
    }
    if t > MAX_RELIABLE_HEIGHT {
        log::warn!("hardy_z at height {t} beyond 1e7; precision degrades");
    }
    Ok(hardy_z_riemann_siegel(t))
}

/// ζ(½ + it) from the on-line evaluator: e^{−iθ(t)} Z(t).
pub fn zeta_critical(t: f64) -> Result<Complex64> {
    let z = hardy_z(t)?;
    Ok(Complex64::from_polar(z, -riemann_siegel_theta(t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pole_is_rejected() {
        assert_eq!(zeta(c(1.0, 0.0)), Err(LabError::Pole));
    }

    #[test]
    fn out_of_strip_is_rejected() {
        assert!(matches!(zeta(c(-3.0, 5.0)), Err(LabError::Domain(_))));
        assert!(matches!(zeta(c(20.0, 5.0)), Err(LabError::Domain(_))));
    }

    #[test]
    fn zeta_two_is_pi_squared_over_six() {
        let z = zeta(c(2.0, 0.0)).unwrap();
        assert!((z.re - PI * PI / 6.0).abs() < 1e-14);
        assert_eq!(z.im, 0.0);
    }

    #[test]
    fn zeta_at_zero_and_minus_one() {
        // ζ(0) = −½ and ζ(−1) = −1/12
        assert!((zeta(c(0.0, 0.0)).unwrap().re + 0.5).abs() < 1e-13);
        assert!((zeta(c(-1.0, 0.0)).unwrap().re + 1.0 / 12.0).abs() < 1e-13);
    }

    #[test]
    fn derivative_matches_central_difference() {
        let s = c(0.7, 123.4);
        let (_, d) = zeta_and_derivative(s).unwrap();
        let h = 1e-5;
        let fd = (zeta(s + h).unwrap() - zeta(s - h).unwrap()) / (2.0 * h);
        assert!((d - fd).norm() < 1e-7, "{d} vs {fd}");
        let fdi = (zeta(s + c(0.0, h)).unwrap() - zeta(s - c(0.0, h)).unwrap()) / c(0.0, 2.0 * h);
        assert!((d - fdi).norm() < 1e-7);
    }

    #[test]
    fn hardy_z_rejects_low_heights() {
        assert!(matches!(hardy_z(9.99), Err(LabError::Domain(_))));
    }

    #[test]
    fn evaluators_agree_at_handover() {
        for t in [200.0, 250.5, 400.0] {
            let em = (Complex64::from_polar(1.0, riemann_siegel_theta(t)) * zeta(c(0.5, t)).unwrap()).re;
            let rs = hardy_z_riemann_siegel(t);
            assert!((em - rs).abs() < 1e-7, "t={t}: {em} vs {rs}");
        }
    }
}
