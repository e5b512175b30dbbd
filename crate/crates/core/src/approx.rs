//! The approximate formula for log|ζ(½+it)| as a Dirichlet polynomial over
//! primes, with every error term evaluated explicitly, and Hough's
//! inequality.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{ensure, LabError, Result};
use crate::gram::ShiftedGramPoint;
use crate::quad::adaptive_simpson;
use crate::special_fn::{hardy_z, zeta, PrimeTable};
use crate::zeros_apoints::{eta, ZeroSet};

/// Empirical constant for Hough's inequality (margin ≥ −C₀). Over 913 star
/// Gram points spread evenly through (10⁵, 2·10⁵] the smallest margin seen
/// was +2.81 at X = 100 and +2.29 at X = 200, so no slack is needed.
pub const HOUGH_C0: f64 = 0.0;
/// Closer than this to a zero ordinate log|ζ(½+it)| is treated as −∞.
pub const SATURATION_DISTANCE: f64 = 1e-8;
/// Relative tolerance of the adaptive quadrature for the Dirichlet integral.
pub const DIRICHLET_TOL: f64 = 1e-9;
/// Upper quadrature limit is u = ½ + this/ln X; the rest is a tail bound.
const DIRICHLET_SPAN: f64 = 40.0;
/// Width (in ln p) of the prime bins used to evaluate the Dirichlet integrand.
const BIN_WIDTH: f64 = 0.01;
const BIN_MOMENTS: usize = 6;

/// Smoothing weight w_X(n).
pub fn weight_w(n: u64, x: f64) -> f64 {
    weight_ln((n as f64).ln(), x.ln())
}

/// w_X at ln n = `l`, with ln X = `lx`.
fn weight_ln(l: f64, lx: f64) -> f64 {
    if l <= lx {
        1.0
    } else if l <= 2.0 * lx {
        let a = 3.0 * lx - l;
        let b = 2.0 * lx - l;
        (a * a - 2.0 * b * b) / (2.0 * lx * lx)
    } else if l <= 3.0 * lx {
        let a = 3.0 * lx - l;
        a * a / (2.0 * lx * lx)
    } else {
        0.0
    }
}

fn check_x(x: f64) -> Result<()> {
    ensure(x >= 2.0 && x.is_finite(), || LabError::Domain(format!("X must be >= 2, got {x}")))
}

/// Half-width of the σ_{X,t} window for a zero at distance |β − ½| from the line.
fn window(x: f64, dev: f64) -> f64 {
    x.powf(3.0 * dev) / x.ln()
}

/// σ_{X,t} = ½ + 2·max(β − ½, 2/ln X) over zeros with |t − γ| ≤ X^{3|β−½|}/ln X.
///
/// Zeros on the line only contribute the 2/ln X floor, so a set without
/// off-line zeros gives ½ + 4/ln X.
pub fn sigma_xt(t: f64, x: f64, zeros: &ZeroSet) -> Result<f64> {
    check_x(x)?;
    let max_dev = zeros.off_line().iter().map(|z| (z.beta - 0.5).abs()).fold(0.0, f64::max);
    let reach = window(x, max_dev) + 1.0;
    zeros.require_cover(t - reach, t + reach)?;
    let mut m = 2.0 / x.ln();
    for z in zeros.off_line_in(t - reach, t + reach) {
        let dev = z.beta - 0.5;
        if (t - z.gamma).abs() <= window(x, dev.abs()) {
            m = m.max(dev);
        }
    }
    Ok(0.5 + 2.0 * m)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum FTerm {
    Finite(f64),
    /// t is a zero ordinate: F is +∞.
    Saturated,
}

impl FTerm {
    pub fn value(self) -> Option<f64> {
        match self {
            FTerm::Finite(v) => Some(v),
            FTerm::Saturated => None,
        }
    }
}

fn f_from(sigma: f64, x: f64, eta_t: f64) -> FTerm {
    if eta_t <= 0.0 {
        return FTerm::Saturated;
    }
    let lx = x.ln();
    let d = sigma - 0.5;
    let first = x.powf(-0.5 * d) / lx + d;
    let arg = 1.0 / (eta_t * lx);
    let log_plus = if arg > 1.0 { arg.ln() } else { 0.0 };
    FTerm::Finite(first * (d * lx + log_plus))
}

/// F(t; X) = (X^{(½−σ)/2}/ln X + (σ − ½))·((σ − ½) ln X + ln⁺(1/(η_t ln X))).
pub fn f_term(t: f64, x: f64, zeros: &ZeroSet) -> Result<FTerm> {
    let sigma = sigma_xt(t, x, zeros)?;
    let eta_t = eta(t, zeros)?;
    Ok(f_from(sigma, x, eta_t))
}

fn require_table(x: f64, table: &PrimeTable) -> Result<f64> {
    check_x(x)?;
    let x3 = x.powi(3);
    ensure(table.covers(x3), || LabError::TableTooSmall {
        limit: table.limit(),
        needed: x3.floor() as u64,
    })?;
    Ok(x3)
}

/// Σ_{p ≤ X³} cos(t ln p)/√p, summed in ascending p.
pub fn prime_sum(t: f64, x: f64, table: &PrimeTable) -> Result<f64> {
    let x3 = require_table(x, table)?;
    let k = table.count_up_to(x3);
    let mut s = 0.0;
    for (l, h) in table.logs()[..k].iter().zip(&table.half_powers()[..k]) {
        s += (t * l).cos() * h;
    }
    Ok(s)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ErrorTerms {
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
    pub dirichlet_integral: f64,
}

/// The coefficients ln p·ln(pX)·w_X(p)·p^{−it}, grouped into bins of
/// ln p with Taylor moments so that Σ c_p p^{−u} costs O(bins) per u.
struct BinnedSum {
    centres: Vec<f64>,
    // moments[b][k] = Σ_{p in b} c_p (ln p − centre)^k / k!
    moments: Vec<[Complex64; BIN_MOMENTS]>,
    abs_bound: Vec<f64>,
}

impl BinnedSum {
    fn eval(&self, u: f64) -> Complex64 {
        let mut total = Complex64::new(0.0, 0.0);
        for (c, m) in self.centres.iter().zip(&self.moments) {
            // e^{−u ln p} = e^{−u c}·Σ (−u d)^k/k!
            let mut acc = m[BIN_MOMENTS - 1];
            for k in (0..BIN_MOMENTS - 1).rev() {
                acc = acc * (-u) + m[k];
            }
            total += acc * (-u * c).exp();
        }
        total
    }

    /// Σ |c_p| p^{−u}, a majorant of |Σ c_p p^{−u}|.
    fn majorant(&self, u: f64) -> f64 {
        self.centres
            .iter()
            .zip(&self.abs_bound)
            .map(|(c, a)| a * (-u * (c - 0.5 * BIN_WIDTH)).exp())
            .sum()
    }
}

fn binned_coefficients(t: f64, x: f64, table: &PrimeTable, k: usize) -> BinnedSum {
    let lx = x.ln();
    let mut centres = Vec::new();
    let mut moments: Vec<[Complex64; BIN_MOMENTS]> = Vec::new();
    let mut abs_bound = Vec::new();
    let mut current = f64::NEG_INFINITY;
    for &l in &table.logs()[..k] {
        let bin = (l / BIN_WIDTH).floor();
        let centre = (bin + 0.5) * BIN_WIDTH;
        if centre != current {
            current = centre;
            centres.push(centre);
            moments.push([Complex64::new(0.0, 0.0); BIN_MOMENTS]);
            abs_bound.push(0.0);
        }
        let w = weight_ln(l, lx);
        let mag = l * (l + lx) * w;
        let c = Complex64::from_polar(mag, -t * l);
        let d = l - centre;
        let m = moments.last_mut().expect("bin exists");
        let mut dk = 1.0;
        for (j, slot) in m.iter_mut().enumerate() {
            *slot += c * dk;
            dk *= d / (j + 1) as f64;
        }
        *abs_bound.last_mut().expect("bin exists") += mag;
    }
    BinnedSum {
        centres,
        moments,
        abs_bound,
    }
}

/// ∫_{½}^∞ X^{½−u} |Σ_{p≤X³} ln p·ln(pX)·w_X(p) p^{−u−it}| du.
///
/// Adaptive Simpson on [½, ½ + 40/ln X] at relative tolerance `rel_tol`,
/// plus the analytic bound X^{½−U}·Σ|c_p|p^{−U}/ln X for the rest.
pub fn dirichlet_integral(t: f64, x: f64, table: &PrimeTable, rel_tol: f64) -> Result<f64> {
    let x3 = require_table(x, table)?;
    let k = table.count_up_to(x3);
    if k == 0 {
        return Ok(0.0);
    }
    let bins = binned_coefficients(t, x, table, k);
    Ok(integrate_binned(&bins, x, rel_tol))
}

fn integrate_binned(bins: &BinnedSum, x: f64, rel_tol: f64) -> f64 {
    let lx = x.ln();
    let upper = 0.5 + DIRICHLET_SPAN / lx;
    let integrand = |u: f64| (lx * (0.5 - u)).exp() * bins.eval(u).norm();
    // coarse estimate of the integral to turn rel_tol into an absolute one
    let h = (upper - 0.5) / 64.0;
    let coarse: f64 = (0..64).map(|k| h * integrand(0.5 + (k as f64 + 0.5) * h)).sum();
    let body = adaptive_simpson(integrand, 0.5, upper, rel_tol * coarse.max(f64::MIN_POSITIVE), 40);
    let tail = (lx * (0.5 - upper)).exp() * bins.majorant(upper) / lx;
    body + tail
}

/// E₁, E₂, E₃ and the Dirichlet integral at abscissa `sigma` (= σ_{X,t}).
///
/// * E₁ = |Σ_{n≤X³} Λ(n) w_X(n) n^{−σ−it}| over primes and prime powers.
/// * E₂ = |Σ_{p≤X³} (1 − w_X(p)) p^{−½−it}|.
/// * E₃ = |Σ_{p≤X^{3/2}} w_X(p²) p^{−1−2it}|.
pub fn error_terms(t: f64, x: f64, sigma: f64, table: &PrimeTable) -> Result<ErrorTerms> {
    let x3 = require_table(x, table)?;
    let lx = x.ln();
    let k = table.count_up_to(x3);
    let logs = &table.logs()[..k];
    let halves = &table.half_powers()[..k];

    let primes = &table.primes()[..k];
    let x32 = x.powf(1.5);

    let mut e1 = Complex64::new(0.0, 0.0);
    let mut e2 = Complex64::new(0.0, 0.0);
    let mut e3 = Complex64::new(0.0, 0.0);
    for ((&p, &l), &h) in primes.iter().zip(logs).zip(halves) {
        let w = weight_ln(l, lx);
        e2 += Complex64::from_polar((1.0 - w) * h, -t * l);
        // Λ(p^r) = ln p for every power p^r ≤ X³
        let mut pr = p as f64;
        let mut r = 1.0;
        while pr <= x3 {
            let lr = r * l;
            e1 += Complex64::from_polar(l * weight_ln(lr, lx) * (-sigma * lr).exp(), -t * lr);
            pr *= p as f64;
            r += 1.0;
        }
        if (p as f64) <= x32 {
            e3 += Complex64::from_polar(weight_ln(2.0 * l, lx) * h * h, -2.0 * t * l);
        }
    }
    let dirichlet_integral = if k == 0 {
        0.0
    } else {
        integrate_binned(&binned_coefficients(t, x, table, k), x, DIRICHLET_TOL)
    };
    Ok(ErrorTerms {
        e1: e1.norm(),
        e2: e2.norm(),
        e3: e3.norm(),
        dirichlet_integral,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ApproxDecomposition {
    pub t: f64,
    pub x: f64,
    pub prime_sum: f64,
    pub sigma_xt: f64,
    pub f: f64,
    pub e1: f64,
    pub e2: f64,
    pub e3: f64,
    pub dirichlet_integral: f64,
    /// log|ζ(½+it)|
    pub lhs_half: f64,
    /// log|ζ(σ_{X,t}+it)|
    pub lhs_sigma: f64,
    pub residual_half: f64,
    pub residual_sigma: f64,
    /// F·ln t + E₂ + E₃ + F·X^{σ−½}·D, the size of the first formula's error.
    pub budget_half: f64,
    /// The corresponding expression for the formula at σ_{X,t}.
    pub budget_sigma: f64,
}

/// Evaluates every term of the approximate formula at t.
///
/// Heights enter the error budget through ln t (the formula is stated for
/// T < t ≤ 2T, where ln T and ln t differ by less than ln 2).
pub fn decompose(t: f64, x: f64, zeros: &ZeroSet, table: &PrimeTable) -> Result<ApproxDecomposition> {
    let sigma = sigma_xt(t, x, zeros)?;
    let eta_t = eta(t, zeros)?;
    if eta_t < SATURATION_DISTANCE {
        return Err(LabError::Saturated(t));
    }
    let f = f_from(sigma, x, eta_t).value().ok_or(LabError::Saturated(t))?;
    let ps = prime_sum(t, x, table)?;
    let errs = error_terms(t, x, sigma, table)?;
    let lhs_half = hardy_z(t)?.abs().ln();
    let lhs_sigma = zeta(Complex64::new(sigma, t))?.norm().ln();
    let lt = t.ln();
    let d = sigma - 0.5;
    let budget_half = f * lt + errs.e2 + errs.e3 + f * x.powf(d) * errs.dirichlet_integral;
    let budget_sigma = (x.powf(-0.5 * d) / x.ln() + d) * lt
        + errs.e2
        + errs.e3
        + (x.powf(0.5 * d) / x.ln() + d * x.powf(d)) * errs.dirichlet_integral;
    Ok(ApproxDecomposition {
        t,
        x,
        prime_sum: ps,
        sigma_xt: sigma,
        f,
        e1: errs.e1,
        e2: errs.e2,
        e3: errs.e3,
        dirichlet_integral: errs.dirichlet_integral,
        lhs_half,
        lhs_sigma,
        residual_half: lhs_half - ps,
        residual_sigma: lhs_sigma - ps,
        budget_half,
        budget_sigma,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HoughCheck {
    pub lhs: f64,
    pub rhs: f64,
    /// rhs − lhs; Hough's inequality says this is ≥ −C for a uniform C.
    pub margin: f64,
}

/// Both sides of log|ζ(½+it)| ≤ log|ζ(σ+it)| + ½(σ − ½) ln t at a given σ.
///
/// At σ = ½ both sides come from the same evaluator, so the margin is 0.
pub fn hough_terms(t: f64, sigma: f64) -> Result<HoughCheck> {
    let lhs = hardy_z(t)?.abs().ln();
    let at_sigma = if sigma == 0.5 {
        lhs
    } else {
        zeta(Complex64::new(sigma, t))?.norm().ln()
    };
    let rhs = at_sigma + 0.5 * (sigma - 0.5) * t.ln();
    Ok(HoughCheck {
        lhs,
        rhs,
        margin: rhs - lhs,
    })
}

/// Hough's inequality at g with σ = σ_{X,g} and the O(1) set to 0.
pub fn hough_check(g: &ShiftedGramPoint, x: f64, zeros: &ZeroSet) -> Result<HoughCheck> {
    ensure(g.t > 10.0, || LabError::Domain(format!("hough_check needs t > 10, got {}", g.t)))?;
    if eta(g.t, zeros)? <= 1e-6 {
        return Err(LabError::Saturated(g.t));
    }
    hough_terms(g.t, sigma_xt(g.t, x, zeros)?)
}
