use serde::Serialize;
use std::f64::consts::PI;

use crate::error::{ensure, LabError, Result};
use crate::quad::adaptive_simpson;
use crate::zeros_apoints::ZeroSet;

/// No zero lies below this height, so a list starting here covers (0, T].
const FIRST_ZERO_FLOOR: f64 = 14.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairCorrStat {
    pub t: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Number of zeros in (0, T].
    pub zero_count: usize,
    pub pair_count: u64,
    pub normalized_count: f64,
    pub gue_value: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HypSStat {
    pub t: f64,
    pub n: u32,
    pub epsilon: f64,
    pub pair_count: u64,
    pub normalized: f64,
}

fn sinc_sq(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        let s = (PI * x).sin() / (PI * x);
        s * s
    }
}

/// ∫_α^β 1 − (sin πx/πx)² dx + 1_{[α,β]}(0).
pub fn gue_pair_value(alpha: f64, beta: f64, tol: f64) -> f64 {
    let integral = adaptive_simpson(|x| 1.0 - sinc_sq(x), alpha, beta, tol, 40);
    let diagonal = if alpha <= 0.0 && 0.0 <= beta { 1.0 } else { 0.0 };
    integral + diagonal
}

/// (1/N(T))·#{0 < γ, γ′ ≤ T : 2πα/ln T ≤ γ − γ′ ≤ 2πβ/ln T}, ordered pairs
/// including γ = γ′.
pub fn pair_correlation(zeros: &ZeroSet, t: f64, alpha: f64, beta: f64) -> Result<PairCorrStat> {
    ensure(alpha < beta, || LabError::Domain(format!("need alpha < beta, got [{alpha}, {beta}]")))?;
    ensure(t > FIRST_ZERO_FLOOR, || LabError::Domain(format!("T must exceed 14, got {t}")))?;
    zeros.require_cover(FIRST_ZERO_FLOOR.min(zeros.lo()), t)?;
    ensure(zeros.lo() <= FIRST_ZERO_FLOOR, || LabError::Coverage {
        lo: zeros.lo(),
        hi: zeros.hi(),
        need_lo: FIRST_ZERO_FLOOR,
        need_hi: t,
    })?;
    let g = zeros.ordinates_in(0.0, t);
    let scale = 2.0 * PI / t.ln();
    let (lo, hi) = (alpha * scale, beta * scale);
    let pairs: u64 = g
        .iter()
        .map(|&x| {
            // γ′ ∈ [x − hi, x − lo]
            let i = g.partition_point(|&y| x - y > hi);
            let j = g.partition_point(|&y| x - y >= lo);
            j.saturating_sub(i) as u64
        })
        .sum();
    let n = g.len();
    Ok(PairCorrStat {
        t,
        alpha,
        beta,
        zero_count: n,
        pair_count: pairs,
        normalized_count: if n == 0 { 0.0 } else { pairs as f64 / n as f64 },
        gue_value: gue_pair_value(alpha, beta, 1e-12),
    })
}

/// #{γ, γ′ ∈ (T, 2T] : |(γ − γ′)ln T/2π − n| < ε} / (T ln T).
pub fn hypothesis_s_stat(zeros: &ZeroSet, t: f64, n: u32, epsilon: f64) -> Result<HypSStat> {
    ensure(n >= 1, || LabError::Domain("n must be at least 1".into()))?;
    ensure(epsilon >= 0.0 && epsilon.is_finite(), || {
        LabError::Domain(format!("epsilon must be non-negative, got {epsilon}"))
    })?;
    ensure(t > 1.0, || LabError::Domain(format!("T must exceed 1, got {t}")))?;
    zeros.require_cover(t, 2.0 * t)?;
    let g = zeros.ordinates_in(t, 2.0 * t);
    let g = &g[g.partition_point(|&x| x <= t)..];
    let lt = t.ln();
    let target = n as f64;
    let u = |i: usize, j: usize| (g[i] - g[j]) * lt / (2.0 * PI);
    // For fixed i, u(i, j) decreases in j; both window edges only move right.
    let (mut a, mut b) = (0usize, 0usize);
    let mut pairs = 0u64;
    for i in 0..g.len() {
        while a < i && u(i, a) >= target + epsilon {
            a += 1;
        }
        b = b.max(a);
        while b < i && u(i, b) > target - epsilon {
            b += 1;
        }
        pairs += (b - a) as u64;
    }
    Ok(HypSStat {
        t,
        n,
        epsilon,
        pair_count: pairs,
        normalized: pairs as f64 / (t * lt),
    })
}
