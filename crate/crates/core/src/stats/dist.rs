use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use statrs::distribution::{ContinuousCDF, Normal};

use crate::error::{ensure, LabError, Result};
use crate::gram::{self, GramClass};
use crate::par;
use crate::special_fn::{bessel_j0, PrimeTable};

/// Ψ = ½ ln ln T.
pub fn psi(t: f64) -> f64 {
    0.5 * t.ln().ln()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DistSample {
    pub index: i64,
    pub g: f64,
    pub log_abs_zeta: f64,
    pub normalized: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistSummary {
    pub t: f64,
    pub phi: f64,
    pub psi: f64,
    /// Gram indices drawn before the g* filter.
    pub drawn: usize,
    /// Drawn points dropped as g_* (too close to a zero).
    pub dropped: usize,
    pub sample_count: usize,
    /// Retained points in ascending index order.
    pub samples: Vec<DistSample>,
    /// Sorted normalized values log|ζ(½+ig)|·Ψ^{−1/2}.
    pub values: Vec<f64>,
    pub ks_distance: f64,
    pub mean: f64,
    pub variance: f64,
}

impl DistSummary {
    /// Fraction of values in the closed interval [lo, hi].
    pub fn mass_in(&self, lo: f64, hi: f64) -> f64 {
        let i = self.values.partition_point(|&v| v < lo);
        let j = self.values.partition_point(|&v| v <= hi);
        (j.saturating_sub(i)) as f64 / self.values.len().max(1) as f64
    }

    /// Empirical CDF at v.
    pub fn ecdf(&self, v: f64) -> f64 {
        self.values.partition_point(|&x| x <= v) as f64 / self.values.len().max(1) as f64
    }
}

fn std_normal() -> Normal {
    Normal::new(0.0, 1.0).expect("unit normal")
}

pub fn normal_cdf(v: f64) -> f64 {
    std_normal().cdf(v)
}

/// Two-sided Kolmogorov–Smirnov distance of sorted `values` to N(0, 1).
pub fn ks_distance(values: &[f64]) -> f64 {
    let n = values.len() as f64;
    let nd = std_normal();
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let c = nd.cdf(v);
            ((i + 1) as f64 / n - c).max(c - i as f64 / n)
        })
        .fold(0.0, f64::max)
}

/// Normalized value distribution of log|ζ(½+ig)| over shifted Gram points
/// T < g ≤ 2T, for `10⁴ ≤ T ≤ 5·10⁶`.
///
/// Draws min(sample_cap, #points) distinct indices uniformly with a
/// ChaCha8 stream seeded by `seed`, drops g_* points, and normalizes by
/// Ψ^{1/2} with Ψ taken at T.
pub fn dist_log_zeta(t: f64, phi: f64, sample_cap: usize, seed: u64) -> Result<DistSummary> {
    ensure((1e4..=5e6).contains(&t), || {
        LabError::Range(format!("dist_log_zeta needs 1e4 <= T <= 5e6, got {t}"))
    })?;
    ensure(sample_cap >= 1000, || {
        LabError::Range(format!("sample cap must be at least 1000, got {sample_cap}"))
    })?;
    ensure(phi > -std::f64::consts::PI && phi <= std::f64::consts::PI, || {
        LabError::Domain(format!("phase {phi} outside (-pi, pi]"))
    })?;
    let (lo, hi) = gram::index_range(t, 2.0 * t, phi);
    let picked = sample_indices(lo, hi, sample_cap, seed);
    let amount = picked.len();

    let root_psi = psi(t).sqrt();
    let evaluated = par::try_collect(par::map(&picked, |&n| -> Result<Option<DistSample>> {
        let g = gram::shifted_gram(n, phi)?;
        let (class, z) = gram::classify_local_with_value(g.t)?;
        Ok(match class {
            GramClass::Substar => None,
            GramClass::Star => {
                let l = z.abs().ln();
                Some(DistSample {
                    index: n,
                    g: g.t,
                    log_abs_zeta: l,
                    normalized: l / root_psi,
                })
            }
        })
    }))?;
    let samples: Vec<DistSample> = evaluated.into_iter().flatten().collect();
    summarize(t, phi, amount, samples)
}

/// min(cap, hi − lo) distinct integers from `lo..hi`, drawn uniformly by a
/// ChaCha8 stream seeded with `seed`, in ascending order.
pub fn sample_indices(lo: i64, hi: i64, cap: usize, seed: u64) -> Vec<i64> {
    let total = (hi - lo).max(0) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut picked: Vec<i64> = rand::seq::index::sample(&mut rng, total, cap.min(total))
        .into_iter()
        .map(|k| lo + k as i64)
        .collect();
    picked.sort_unstable();
    picked
}

fn summarize(t: f64, phi: f64, drawn: usize, samples: Vec<DistSample>) -> Result<DistSummary> {
    ensure(!samples.is_empty(), || {
        LabError::Degenerate("every sampled Gram point was dropped".into())
    })?;
    let mut values: Vec<f64> = samples.iter().map(|s| s.normalized).collect();
    values.sort_by(f64::total_cmp);
    let n = values.len() as f64;
    let in_order: Vec<f64> = samples.iter().map(|s| s.normalized).collect();
    let mean = par::pairwise_sum(&in_order) / n;
    let sq: Vec<f64> = in_order.iter().map(|v| (v - mean) * (v - mean)).collect();
    let variance = if values.len() > 1 { par::pairwise_sum(&sq) / (n - 1.0) } else { 0.0 };
    Ok(DistSummary {
        t,
        phi,
        psi: psi(t),
        drawn,
        dropped: drawn - samples.len(),
        sample_count: samples.len(),
        ks_distance: ks_distance(&values),
        values,
        samples,
        mean,
        variance,
    })
}

/// φ_T(u) = (1/N) Σ e^{iu v_k}.
pub fn char_fn_empirical(u: f64, dist: &DistSummary) -> Complex64 {
    let n = dist.samples.len() as f64;
    if u == 0.0 {
        return Complex64::new(1.0, 0.0);
    }
    let re: Vec<f64> = dist.samples.iter().map(|s| (u * s.normalized).cos()).collect();
    let im: Vec<f64> = dist.samples.iter().map(|s| (u * s.normalized).sin()).collect();
    Complex64::new(par::pairwise_sum(&re) / n, par::pairwise_sum(&im) / n)
}

/// Π_{p≤Y} J₀(u/√(pΨ)).
pub fn char_fn_model(u: f64, y: f64, psi: f64, table: &PrimeTable) -> Result<f64> {
    ensure(psi > 0.0, || LabError::Domain(format!("Psi must be positive, got {psi}")))?;
    ensure(table.covers(y), || LabError::TableTooSmall {
        limit: table.limit(),
        needed: y.floor() as u64,
    })?;
    let k = table.count_up_to(y);
    Ok(table.half_powers()[..k]
        .iter()
        .map(|h| bessel_j0(u * h / psi.sqrt()))
        .product())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CharFnSample {
    pub u: f64,
    pub empirical: Complex64,
    pub model_j0: f64,
    pub gaussian: f64,
}

/// Empirical, J₀-product and Gaussian characteristic functions on a grid.
pub fn char_fn_samples(dist: &DistSummary, us: &[f64], y: f64, table: &PrimeTable) -> Result<Vec<CharFnSample>> {
    us.iter()
        .map(|&u| {
            Ok(CharFnSample {
                u,
                empirical: char_fn_empirical(u, dist),
                model_j0: char_fn_model(u, y, dist.psi, table)?,
                gaussian: (-0.5 * u * u).exp(),
            })
        })
        .collect()
}
