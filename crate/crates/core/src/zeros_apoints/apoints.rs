use num_complex::Complex64;
use serde::Serialize;
use std::f64::consts::PI;

use super::contour::{counting_rect, winding_number, Rect};
use crate::error::{ensure, LabError, Result};
use crate::gram::{self, phase_of, ShiftedGramPoint, MIN_SEED};
use crate::par;
use crate::special_fn::{hardy_z, zeta, zeta_and_derivative};

/// Accepted |ζ(ρ) − a| for a located a-point.
pub const APOINT_TOL: f64 = 1e-7;
/// Roots closer than this are one root.
pub const DEDUP_RADIUS: f64 = 1e-5;
/// Height of the windows on which completeness is cross-checked.
pub const CHECK_WINDOW: f64 = 1e3;
const GRID_SIGMAS: [f64; 4] = [0.25, 0.75, 1.5, 3.0];
const DENSE_SIGMAS: [f64; 10] = [-0.25, 0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 4.0];
const DENSE_STEP: f64 = 0.05;
const DENSE_HEIGHT: f64 = 4.0;
const NEWTON_MAX_ITER: usize = 60;
const MAX_NEWTON_STEP: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeedKind {
    Gram,
    Midpoint,
    Grid,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct APoint {
    pub a: Complex64,
    pub beta: f64,
    pub gamma: f64,
    pub residual: f64,
    pub seed_kind: SeedKind,
    /// Newton iterations used from the seed.
    pub iterations: u32,
}

impl APoint {
    pub fn s(&self) -> Complex64 {
        Complex64::new(self.beta, self.gamma)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct APointCount {
    pub a: Complex64,
    /// Requested height.
    pub t: f64,
    pub count: i64,
    pub main_term: f64,
    /// Shift applied to the top edge after a near miss (0 when none).
    pub perturbation: f64,
}

/// Argument-principle count compared with the roots located in one window.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WindowCheck {
    pub t_lo: f64,
    pub t_hi: f64,
    pub counted: i64,
    pub found: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct APointScan {
    /// Nontrivial a-points (0 < β < 10), ordered by height.
    pub points: Vec<APoint>,
    /// Roots inside the counting rectangle with β ≤ 0, which are trivial
    /// by definition and left out of `points`.
    pub trivial_excluded: usize,
    pub windows: Vec<WindowCheck>,
}

impl APointScan {
    pub fn is_complete(&self) -> bool {
        self.windows.iter().all(|w| w.found >= w.counted)
    }
}

/// (T/2π)ln(T/2π) − T/2π, less (ln 2)·T/2π when a = 1.
pub fn apoint_main_term(a: Complex64, t: f64) -> f64 {
    let x = t / (2.0 * PI);
    let base = x * x.ln() - x;
    if a == Complex64::new(1.0, 0.0) {
        base - std::f64::consts::LN_2 * x
    } else {
        base
    }
}

/// N_a(T): a-points with 1 < γ ≤ T in [−½, σ_R], by the argument principle.
///
/// If the contour passes within 10⁻⁶ of a root the top edge is moved to
/// T + 1 (then T − 1) and the shift is reported.
pub fn count_apoints(a: Complex64, t: f64) -> Result<APointCount> {
    phase_of(a)?;
    ensure((1e2..=1e4).contains(&t), || {
        LabError::Range(format!("count_apoints needs 1e2 <= T <= 1e4, got {t}"))
    })?;
    let mut last_err = None;
    for shift in [0.0, 1.0, -1.0] {
        let top = t + shift;
        match winding_number(a, counting_rect(a, 1.0, top), 0) {
            Ok(count) => {
                if shift != 0.0 {
                    log::warn!("count_apoints: contour moved to T = {top} to avoid a root");
                }
                return Ok(APointCount {
                    a,
                    t,
                    count,
                    main_term: apoint_main_term(a, top),
                    perturbation: shift,
                });
            }
            Err(e @ LabError::BoundaryProximity { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one attempt"))
}

/// Damped complex Newton on ζ(s) − a. Returns the root and the iteration
/// count, or `None` when the iteration leaves the search box or stalls.
fn newton(a: Complex64, seed: Complex64, t_lo: f64, t_hi: f64) -> Option<(Complex64, f64, u32)> {
    let mut s = seed;
    for it in 0..NEWTON_MAX_ITER {
        let (z, dz) = zeta_and_derivative(s).ok()?;
        let f = z - a;
        if f.norm() <= 1e-13 * a.norm().max(1.0) {
            return Some((s, f.norm(), it as u32));
        }
        if dz.norm() == 0.0 {
            return None;
        }
        let mut step = f / dz;
        if step.norm() > MAX_NEWTON_STEP {
            step *= MAX_NEWTON_STEP / step.norm();
        }
        s -= step;
        if !(-0.75..=10.5).contains(&s.re) || s.im < t_lo - 5.0 || s.im > t_hi + 5.0 || s.im < 1.0 {
            return None;
        }
        if step.norm() <= 1e-15 * s.norm() {
            let r = (zeta(s).ok()? - a).norm();
            return Some((s, r, it as u32 + 1));
        }
    }
    let r = (zeta(s).ok()? - a).norm();
    (r <= APOINT_TOL).then_some((s, r, NEWTON_MAX_ITER as u32))
}

fn run_seeds(a: Complex64, seeds: &[(Complex64, SeedKind)], t_lo: f64, t_hi: f64) -> Vec<APoint> {
    par::map(seeds, |&(seed, kind)| {
        newton(a, seed, t_lo, t_hi).and_then(|(s, residual, iterations)| {
            (residual <= APOINT_TOL).then_some(APoint {
                a,
                beta: s.re,
                gamma: s.im,
                residual,
                seed_kind: kind,
                iterations,
            })
        })
    })
    .into_iter()
    .flatten()
    .collect()
}

/// Sorts by height and merges roots closer than [`DEDUP_RADIUS`], keeping
/// the first seed that reached each.
fn dedup(mut pts: Vec<APoint>) -> Vec<APoint> {
    pts.sort_by(|p, q| p.gamma.total_cmp(&q.gamma).then(p.beta.total_cmp(&q.beta)));
    let mut out: Vec<APoint> = Vec::with_capacity(pts.len());
    for p in pts {
        let dup = out
            .iter()
            .rev()
            .take_while(|q| p.gamma - q.gamma < DEDUP_RADIUS)
            .any(|q| (p.s() - q.s()).norm() < DEDUP_RADIUS);
        if !dup {
            out.push(p);
        }
    }
    out
}

fn seeds_for(t1: f64, t2: f64, phi: f64) -> Result<Vec<(Complex64, SeedKind)>> {
    let mut heights: Vec<f64> = Vec::new();
    let lo = t1.max(MIN_SEED);
    let grams: Vec<ShiftedGramPoint> = if lo < t2 {
        gram::grams_between(lo, t2, phi)?
    } else {
        Vec::new()
    };
    // below the first Gram point of this phase: unit-spaced heights
    let first = grams.first().map(|g| g.t).unwrap_or(t2);
    let mut h = t1.max(1.0) + 0.5;
    while h < first {
        heights.push(h);
        h += 1.0;
    }
    let mut seeds = Vec::with_capacity(6 * grams.len() + 5 * heights.len());
    for &h in &heights {
        seeds.push((Complex64::new(0.5, h), SeedKind::Midpoint));
        for s in GRID_SIGMAS {
            seeds.push((Complex64::new(s, h), SeedKind::Grid));
        }
    }
    for (k, g) in grams.iter().enumerate() {
        seeds.push((Complex64::new(0.5, g.t), SeedKind::Gram));
        if let Some(next) = grams.get(k + 1) {
            seeds.push((Complex64::new(0.5, 0.5 * (g.t + next.t)), SeedKind::Midpoint));
        }
        for s in GRID_SIGMAS {
            seeds.push((Complex64::new(s, g.t), SeedKind::Grid));
        }
    }
    Ok(seeds)
}

fn dense_seeds(t_lo: f64, t_hi: f64) -> Vec<(Complex64, SeedKind)> {
    let mut seeds = Vec::new();
    let mut t = t_lo + 0.5 * DENSE_STEP;
    while t < t_hi {
        for s in DENSE_SIGMAS {
            seeds.push((Complex64::new(s, t), SeedKind::Grid));
        }
        t += DENSE_STEP;
    }
    seeds
}

fn found_in(points: &[APoint], rect: &Rect) -> i64 {
    points.iter().filter(|p| rect.contains(p.s())).count() as i64
}

/// Counts on `[−½, σ_R] × [lo, hi]`, nudging both horizontal edges if the
/// contour runs into a root. Returns the rectangle actually used.
fn robust_count(a: Complex64, lo: f64, hi: f64) -> Result<(Rect, i64)> {
    let mut last_err = None;
    for d in [0.0, 1e-2, -1e-2, 3e-2] {
        let rect = counting_rect(a, (lo + d).max(1.0), hi + d);
        match winding_number(a, rect, 0) {
            Ok(n) => return Ok((rect, n)),
            Err(e @ LabError::BoundaryProximity { .. }) => last_err = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last_err.expect("at least one attempt"))
}

/// Brings one window up to its argument-principle count by bisecting it and
/// seeding a dense grid in the deficient pieces.
fn repair(a: Complex64, rect: Rect, counted: i64, points: &mut Vec<APoint>) -> Result<()> {
    if found_in(points, &rect) >= counted {
        return Ok(());
    }
    if rect.t_hi - rect.t_lo <= DENSE_HEIGHT {
        let extra = run_seeds(a, &dense_seeds(rect.t_lo, rect.t_hi), rect.t_lo, rect.t_hi);
        let merged = dedup(points.drain(..).chain(extra).collect());
        *points = merged;
        return Ok(());
    }
    let mid = 0.5 * (rect.t_lo + rect.t_hi);
    for (lo, hi) in [(rect.t_lo, mid), (mid, rect.t_hi)] {
        let (r, n) = robust_count(a, lo, hi)?;
        repair(a, r, n, points)?;
    }
    Ok(())
}

/// Locates the nontrivial a-points with T1 < γ ≤ T2 (T2 ≤ 10⁵).
///
/// Newton is seeded at ½ + ig for every shifted Gram point of phase φ(a),
/// at midpoints between them, and on the grid σ ∈ {0.25, 0.75, 1.5, 3}.
/// Each window of height ≤ 10³ is then checked against the argument
/// principle; short windows are repaired by dense re-seeding and any
/// remaining gap is reported in the returned window list. The rectangle
/// reaches σ = −½, so its count includes the few trivial a-points with
/// β ≤ 0; those are tallied separately.
pub fn find_apoints(a: Complex64, t1: f64, t2: f64) -> Result<APointScan> {
    let phi = phase_of(a)?;
    ensure(t1 >= 1.0 && t1 < t2 && t2 <= 1e5, || {
        LabError::Range(format!("find_apoints needs 1 <= T1 < T2 <= 1e5, got ({t1}, {t2}]"))
    })?;
    let seeds = seeds_for(t1, t2, phi)?;
    let mut points = dedup(run_seeds(a, &seeds, t1, t2));

    let n_windows = ((t2 - t1) / CHECK_WINDOW).ceil().max(1.0) as usize;
    let h = (t2 - t1) / n_windows as f64;
    let mut windows = Vec::with_capacity(n_windows);
    for k in 0..n_windows {
        let lo = t1 + k as f64 * h;
        let hi = if k + 1 == n_windows { t2 } else { lo + h };
        let (rect, counted) = robust_count(a, lo, hi)?;
        repair(a, rect, counted, &mut points)?;
        let found = found_in(&points, &rect);
        if found < counted {
            log::warn!("a-point capture incomplete on ({lo}, {hi}]: {found} of {counted}");
        }
        windows.push(WindowCheck {
            t_lo: rect.t_lo,
            t_hi: rect.t_hi,
            counted,
            found,
        });
    }
    points.retain(|p| p.gamma > t1 && p.gamma <= t2 && p.gamma > 1.0 && p.beta < 10.0);
    let before = points.len();
    points.retain(|p| p.beta > 0.0);
    Ok(APointScan {
        trivial_excluded: before - points.len(),
        points,
        windows,
    })
}

/// Necessary condition for an a-point on the line at g: ||ζ(½+ig)| − |a|| ≤ tol.
pub fn online_apoint_test(a: Complex64, g: &ShiftedGramPoint, tol: f64) -> bool {
    match hardy_z(g.t) {
        Ok(z) => (z.abs() - a.norm()).abs() <= tol,
        Err(_) => false,
    }
}
