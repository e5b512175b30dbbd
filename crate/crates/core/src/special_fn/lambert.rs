use crate::error::{ensure, LabError, Result};

/// Principal branch W₀(x) on `x ≥ 0`: the solution of w·eʷ = x.
///
/// Halley iteration seeded at ln(1 + x).
pub fn lambert_w0(x: f64) -> Result<f64> {
    ensure(x >= 0.0 && x.is_finite(), || {
        LabError::Domain(format!("lambert_w0 needs finite x >= 0, got {x}"))
    })?;
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut w = x.ln_1p();
    for _ in 0..64 {
        let ew = w.exp();
        let f = w * ew - x;
        let wp1 = w + 1.0;
        let step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= 4.0 * f64::EPSILON * w.abs().max(f64::MIN_POSITIVE) {
            return Ok(w);
        }
    }
    Err(LabError::NonConvergence(format!("lambert_w0({x})")))
}
