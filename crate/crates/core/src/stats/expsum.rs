use num_complex::Complex64;
use serde::Serialize;

use crate::error::{ensure, LabError, Result};
use crate::gram::{self, ShiftedGramPoint};
use crate::par;

pub const MAX_EXPSUM_T: f64 = 1e5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpSum {
    pub x: f64,
    pub t: f64,
    pub phi: f64,
    pub count: usize,
    pub sum: Complex64,
    pub bound: f64,
}

/// (T|ln x|/ln T)^{1/2} + (T ln³T/|ln x|)^{1/2} + |ln x|.
pub fn oscillation_bound(x: f64, t: f64) -> f64 {
    let lx = x.ln().abs();
    let lt = t.ln();
    (t * lx / lt).sqrt() + (t * lt.powi(3) / lx).sqrt() + lx
}

/// Σ x^{ig} over the given points, accumulated in a fixed order.
pub fn exp_sum_over(points: &[ShiftedGramPoint], x: f64) -> Complex64 {
    let lx = x.ln();
    let re: Vec<f64> = points.iter().map(|g| (g.t * lx).cos()).collect();
    let im: Vec<f64> = points.iter().map(|g| (g.t * lx).sin()).collect();
    Complex64::new(par::pairwise_sum(&re), par::pairwise_sum(&im))
}

/// Brute-force Σ_{T<g≤2T} x^{ig} over shifted Gram points, with the bound.
pub fn exp_sum_over_grams(x: f64, t: f64, phi: f64) -> Result<ExpSum> {
    ensure(x > 0.0 && x.is_finite(), || LabError::Domain(format!("x must be positive, got {x}")))?;
    ensure(x != 1.0, || LabError::Degenerate("x = 1 makes every term 1".into()))?;
    ensure((10.0..=MAX_EXPSUM_T).contains(&t), || {
        LabError::Range(format!("exp_sum_over_grams needs 10 <= T <= 1e5, got {t}"))
    })?;
    let points = gram::grams_between(t, 2.0 * t, phi)?;
    Ok(ExpSum {
        x,
        t,
        phi,
        count: points.len(),
        sum: exp_sum_over(&points, x),
        bound: oscillation_bound(x, t),
    })
}
