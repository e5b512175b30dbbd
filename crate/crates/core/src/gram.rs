//! Shifted Gram points: ordinates g with θ(g) = πn − φ.

use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::{E, PI};

use crate::error::{ensure, LabError, Result};
use crate::par;
use crate::special_fn::dd::{self, Dd};
use crate::special_fn::{hardy_z, lambert_w0, theta_dd, theta_derivative};
use crate::zeros_apoints::ZeroSet;

/// Target bound on |θ(t) + φ − πn|.
pub const RESIDUAL_TOL: f64 = 1e-9;
/// Smallest admissible seed; θ is only evaluated asymptotically above it.
pub const MIN_SEED: f64 = 10.0;
const NEWTON_MAX_ITER: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ShiftedGramPoint {
    pub n: i64,
    pub phi: f64,
    pub t: f64,
    pub residual: f64,
    pub seed_gap: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GramClass {
    /// At least the threshold distance away from every zero ordinate.
    Star,
    Substar,
}

/// φ ∈ (−π, π] with a = |a|e^{iφ}. The negative real axis maps to +π.
pub fn phase_of(a: Complex64) -> Result<f64> {
    ensure(a.re != 0.0 || a.im != 0.0, || LabError::ZeroInput)?;
    let phi = a.im.atan2(a.re);
    Ok(if phi <= -PI { PI } else { phi })
}

/// Closed-form seed g̃ₙ = 2π·exp(1 + W(n/e + 1/(8e) − φ/(πe))).
pub fn shifted_gram_seed(n: i64, phi: f64) -> Result<f64> {
    let arg = n as f64 / E + 1.0 / (8.0 * E) - phi / (PI * E);
    ensure(arg >= 0.0, || {
        LabError::Domain(format!("no Gram seed for n = {n}, phi = {phi}: W argument {arg} < 0"))
    })?;
    Ok(2.0 * PI * (1.0 + lambert_w0(arg)?).exp())
}

/// θ(t) + φ − πn, evaluated in double-double and rounded once.
#[inline]
pub fn phase_residual(t: f64, n: i64, phi: f64) -> f64 {
    (theta_dd(t).add_f64(phi) - dd::PI.mul_f64(n as f64)).to_f64()
}

/// A(t) = (θ(t) + φ)/π, the continuous Gram index.
pub fn gram_index(t: f64, phi: f64) -> Dd {
    theta_dd(t).add_f64(phi) / dd::PI
}

/// Best attainable residual at t in double precision: θ′(t) times one ulp.
fn residual_floor(t: f64) -> f64 {
    theta_derivative(t) * (t.next_up() - t)
}

fn accept_tol(t: f64) -> f64 {
    RESIDUAL_TOL.max(residual_floor(t))
}

/// Walks to the adjacent float while that lowers |f|.
fn polish(mut t: f64, mut f: f64, n: i64, phi: f64) -> (f64, f64) {
    for _ in 0..8 {
        let cand = if f > 0.0 { t.next_down() } else { t.next_up() };
        let fc = phase_residual(cand, n, phi);
        if fc.abs() < f.abs() {
            t = cand;
            f = fc;
        } else {
            break;
        }
    }
    (t, f)
}

/// Refines the nth shifted Gram point of phase φ by Newton's method from
/// the Lambert-W seed, falling back to bisection on a bracket of width
/// 4π/ln(seed).
///
/// Above t ≈ 2·10⁶ one ulp of t moves θ by more than 10⁻⁹; there the
/// residual is that of the best double-precision ordinate.
pub fn shifted_gram(n: i64, phi: f64) -> Result<ShiftedGramPoint> {
    let seed = shifted_gram_seed(n, phi)?;
    ensure(seed >= MIN_SEED, || {
        LabError::Domain(format!("Gram seed {seed} below {MIN_SEED} for n = {n}"))
    })?;
    let mut t = seed;
    let mut f = phase_residual(t, n, phi);
    for _ in 0..NEWTON_MAX_ITER {
        if f.abs() <= accept_tol(t) {
            break;
        }
        t -= f / theta_derivative(t);
        f = phase_residual(t, n, phi);
    }
    let (mut t, mut f) = polish(t, f, n, phi);
    if f.is_nan() || f.abs() > accept_tol(t) {
        log::debug!("Newton stalled for n = {n}, phi = {phi}; bisecting");
        (t, f) = bisect(seed, n, phi)?;
    }
    Ok(ShiftedGramPoint {
        n,
        phi,
        t,
        residual: f.abs(),
        seed_gap: (t - seed).abs(),
    })
}

fn bisect(seed: f64, n: i64, phi: f64) -> Result<(f64, f64)> {
    let half = 2.0 * PI / seed.ln();
    let (mut lo, mut hi) = ((seed - half).max(MIN_SEED), seed + half);
    let (mut flo, mut fhi) = (phase_residual(lo, n, phi), phase_residual(hi, n, phi));
    ensure(flo < 0.0 && fhi > 0.0, || {
        LabError::NonConvergence(format!("Gram point n = {n} not bracketed by [{lo}, {hi}]"))
    })?;
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = phase_residual(mid, n, phi);
        if fm < 0.0 {
            (lo, flo) = (mid, fm);
        } else {
            (hi, fhi) = (mid, fm);
        }
    }
    let (t, f) = if flo.abs() <= fhi.abs() { (lo, flo) } else { (hi, fhi) };
    ensure(f.abs() <= accept_tol(t), || {
        LabError::NonConvergence(format!("Gram point n = {n}: residual {f:e}"))
    })?;
    Ok((t, f))
}

/// Index range (A(t1), A(t2)] as a half-open `lo..hi` pair.
pub fn index_range(t1: f64, t2: f64, phi: f64) -> (i64, i64) {
    let lo = gram_index(t1, phi).floor() as i64 + 1;
    let hi = gram_index(t2, phi).floor() as i64 + 1;
    (lo, hi)
}

/// All shifted Gram points with T1 < t ≤ T2, for `10³ ≤ T1 < T2 ≤ 10⁷`.
pub fn grams_in_range(t1: f64, t2: f64, phi: f64) -> Result<Vec<ShiftedGramPoint>> {
    ensure(
        (1e3..=1e7).contains(&t1) && (1e3..=1e7).contains(&t2) && t1 < t2,
        || LabError::Range(format!("grams_in_range needs 1e3 <= T1 < T2 <= 1e7, got ({t1}, {t2}]")),
    )?;
    grams_between(t1, t2, phi)
}

/// As [`grams_in_range`] without the height restriction (`t1 ≥ 10`).
pub(crate) fn grams_between(t1: f64, t2: f64, phi: f64) -> Result<Vec<ShiftedGramPoint>> {
    debug_assert!(t1 >= MIN_SEED);
    let (lo, hi) = index_range(t1, t2, phi);
    let pts = par::try_collect(par::map_range(lo, hi, |n| shifted_gram(n, phi)))?;
    // A point can land one ulp outside its window when the endpoint is itself
    // (numerically) a Gram point.
    Ok(pts.into_iter().filter(|g| g.t > t1 && g.t <= t2).collect())
}

/// Max over consecutive pairs of |(g_ℓ − g_m)·ln T / (2π(ℓ − m)) − 1|.
///
/// Pairs with equal index are skipped; fewer than two points give 0.
pub fn spacing_check(points: &[ShiftedGramPoint], t: f64) -> f64 {
    let scale = t.ln() / (2.0 * PI);
    points
        .windows(2)
        .filter(|w| w[1].n != w[0].n)
        .map(|w| ((w[1].t - w[0].t) * scale / (w[1].n - w[0].n) as f64 - 1.0).abs())
        .fold(0.0, f64::max)
}

/// 1/(ln(|g|+2)·ln ln(|g|+3)): the distance separating g* from g_*.
pub fn star_threshold(t: f64) -> f64 {
    1.0 / ((t.abs() + 2.0).ln() * (t.abs() + 3.0).ln().ln())
}

/// Star iff the nearest zero ordinate is at least [`star_threshold`] away.
pub fn classify_gram(g: &ShiftedGramPoint, zeros: &ZeroSet) -> Result<GramClass> {
    zeros.require_cover(g.t - 1.0, g.t + 1.0)?;
    let eta = zeros.nearest_distance(g.t).unwrap_or(f64::INFINITY);
    Ok(if eta >= star_threshold(g.t) {
        GramClass::Star
    } else {
        GramClass::Substar
    })
}

/// Classification without a zero list: looks for a sign change of Z on a
/// five-point stencil spanning ±threshold around `t`.
///
/// Conservative in one direction only: a pair of zeros closer together than
/// half the threshold can be missed. At heights ≥ 10⁴ such pairs are far
/// rarer than the statistical resolution of any sample this is used on.
pub fn classify_local(t: f64) -> Result<GramClass> {
    Ok(classify_local_with_value(t)?.0)
}

/// [`classify_local`] together with Z(t), which the stencil evaluates anyway.
pub fn classify_local_with_value(t: f64) -> Result<(GramClass, f64)> {
    let d = star_threshold(t);
    let zs = [-2.0, -1.0, 0.0, 1.0, 2.0].map(|k| hardy_z(t + 0.5 * k * d));
    let mut vals = [0.0; 5];
    for (v, z) in vals.iter_mut().zip(zs) {
        *v = z?;
    }
    let star = vals.windows(2).all(|w| w[1] != 0.0 && w[1].signum() == w[0].signum());
    let class = if star { GramClass::Star } else { GramClass::Substar };
    Ok((class, vals[2]))
}
