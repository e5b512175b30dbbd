use std::f64::consts::PI;

use crate::error::{ensure, LabError, Result};
use crate::par;
use crate::quad::gauss_legendre;
use crate::special_fn::PrimeTable;

pub const MAX_EXACT_ORDER: u32 = 8;
pub const MAX_EXACT_PRIMES: usize = 10_000;
pub const MAX_TIME_ORDER: u32 = 6;
pub const MAX_TIME_Y: f64 = 1e3;
pub const MAX_TIME_T: f64 = 1e6;
/// Gauss–Legendre nodes per panel.
const GAUSS_NODES: usize = 8;
/// Panels per parallel work item.
const CHUNK: usize = 2048;

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// ∫₀¹ cos(2πθ)^k dθ: zero for odd k, C(k, k/2)/2^k for even k.
fn cos_moment(k: u32) -> f64 {
    if k % 2 == 1 {
        0.0
    } else {
        binomial(k, k / 2) / 2f64.powi(k as i32)
    }
}

fn require_table(table: &PrimeTable, y: f64) -> Result<usize> {
    ensure(y >= 2.0, || LabError::Domain(format!("Y must be at least 2, got {y}")))?;
    ensure(table.covers(y), || LabError::TableTooSmall {
        limit: table.limit(),
        needed: y.floor() as u64,
    })?;
    Ok(table.count_up_to(y))
}

/// E[(Σ_{p≤Y} cos(2πθ_p)/√p)^m] for independent uniform θ_p.
///
/// Moments of the partial sum are updated one prime at a time by the
/// binomial convolution, so every odd moment is an exact zero.
pub fn random_model_moment_exact(m: u32, y: f64, table: &PrimeTable) -> Result<f64> {
    ensure(m <= MAX_EXACT_ORDER, || {
        LabError::Cost(format!("exact moments are limited to m <= {MAX_EXACT_ORDER}, got {m}"))
    })?;
    let k = require_table(table, y)?;
    ensure(k <= MAX_EXACT_PRIMES, || {
        LabError::Cost(format!("pi(Y) = {k} exceeds {MAX_EXACT_PRIMES}"))
    })?;
    let c: Vec<f64> = (0..=m).map(cos_moment).collect();
    let binom: Vec<Vec<f64>> = (0..=m).map(|j| (0..=j).map(|i| binomial(j, i)).collect()).collect();
    let mut acc = vec![0.0; m as usize + 1];
    acc[0] = 1.0;
    let mut x = vec![0.0; m as usize + 1];
    for &h in &table.half_powers()[..k] {
        // moments of cos(2πθ)/√p
        let a = h;
        let mut pow = 1.0;
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = c[i] * pow;
            pow *= a;
        }
        for j in (1..=m as usize).rev() {
            acc[j] = (0..=j)
                .filter(|&i| x[i] != 0.0 && acc[j - i] != 0.0)
                .fold(0.0, |s, i| s + binom[j][i] * acc[j - i] * x[i]);
        }
    }
    Ok(acc[m as usize])
}

/// Panel count used by [`time_average_moment`]: width ≤ π/(3m ln Y).
pub fn default_panels(m: u32, y: f64, t: f64) -> usize {
    let width = PI / (3.0 * m.max(1) as f64 * y.ln());
    (t / width).ceil() as usize
}

/// (1/T)∫₀ᵀ (Σ_{p≤Y} cos(t ln p)/√p)^m dt by composite Gauss–Legendre.
pub fn time_average_moment(m: u32, y: f64, t: f64, table: &PrimeTable) -> Result<f64> {
    time_average_moment_with_panels(m, y, t, table, default_panels(m, y, t))
}

/// As [`time_average_moment`] with an explicit panel count.
pub fn time_average_moment_with_panels(m: u32, y: f64, t: f64, table: &PrimeTable, panels: usize) -> Result<f64> {
    ensure(m <= MAX_TIME_ORDER, || {
        LabError::Cost(format!("time averages are limited to m <= {MAX_TIME_ORDER}, got {m}"))
    })?;
    ensure(y <= MAX_TIME_Y, || LabError::Cost(format!("Y = {y} exceeds {MAX_TIME_Y}")))?;
    ensure(t > 0.0 && t.is_finite(), || LabError::Domain(format!("T must be positive, got {t}")))?;
    ensure(t <= MAX_TIME_T, || LabError::Cost(format!("T = {t} exceeds {MAX_TIME_T}")))?;
    ensure(panels >= 1, || LabError::Domain("at least one panel is required".into()))?;
    let k = require_table(table, y)?;
    if m == 0 {
        return Ok(1.0);
    }
    let logs = &table.logs()[..k];
    let amps = &table.half_powers()[..k];
    let (nodes, weights) = gauss_legendre(GAUSS_NODES);
    let h = t / panels as f64;
    let chunks = panels.div_ceil(CHUNK) as i64;
    let partial = par::map_range(0, chunks, |c| {
        let start = c as usize * CHUNK;
        let end = (start + CHUNK).min(panels);
        let mut sum = 0.0;
        for panel in start..end {
            let mid = (panel as f64 + 0.5) * h;
            let mut s = 0.0;
            for (x, w) in nodes.iter().zip(&weights) {
                let tau = mid + 0.5 * h * x;
                let v: f64 = logs.iter().zip(amps).map(|(l, a)| a * (tau * l).cos()).sum();
                s += w * v.powi(m as i32);
            }
            sum += 0.5 * h * s;
        }
        sum
    });
    Ok(par::pairwise_sum(&partial) / t)
}
