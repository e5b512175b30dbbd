use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{LabError, Result};
use crate::special_fn::zeta_and_derivative;

/// |ζ(s) − a| below this on the contour is treated as hitting a root.
pub const PROXIMITY: f64 = 1e-6;
/// Largest argument increment accepted between consecutive contour samples.
const MAX_ANGLE: f64 = PI / 4.0;
const MAX_STEP: f64 = 0.5;
const MIN_STEP: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Rect {
    pub sigma_lo: f64,
    pub sigma_hi: f64,
    pub t_lo: f64,
    pub t_hi: f64,
}

impl Rect {
    pub fn contains(&self, s: Complex64) -> bool {
        s.re > self.sigma_lo && s.re < self.sigma_hi && s.im > self.t_lo && s.im <= self.t_hi
    }
}

/// Right edge of the counting rectangle: beyond σ = 6, |ζ − 1| < 2⁻⁵, so
/// only values within 0.1 of 1 need the wider box.
pub fn right_edge(a: Complex64) -> f64 {
    if (a - 1.0).norm() <= 0.1 {
        12.0
    } else {
        6.0
    }
}

/// Standard counting rectangle [−½, σ_R] × [t_lo, t_hi].
pub fn counting_rect(a: Complex64, t_lo: f64, t_hi: f64) -> Rect {
    Rect {
        sigma_lo: -0.5,
        sigma_hi: right_edge(a),
        t_lo,
        t_hi,
    }
}

struct Walker {
    a: Complex64,
    refine: u32,
    total: f64,
    last: Option<Complex64>,
    evals: usize,
}

impl Walker {
    fn eval(&mut self, s: Complex64) -> Result<(Complex64, Complex64)> {
        self.evals += 1;
        let (z, dz) = zeta_and_derivative(s)?;
        let f = z - self.a;
        if f.norm() < PROXIMITY {
            return Err(LabError::BoundaryProximity {
                re: s.re,
                im: s.im,
                value: f.norm(),
            });
        }
        Ok((f, dz))
    }

    /// Walks the segment from `z0` to `z1`, accumulating arg(ζ − a).
    fn segment(&mut self, z0: Complex64, z1: Complex64) -> Result<()> {
        let len = (z1 - z0).norm();
        let dir = (z1 - z0) / len;
        let scale = 0.5f64.powi(self.refine as i32);
        let max_angle = MAX_ANGLE * scale;
        let (mut f, mut df) = self.eval(z0)?;
        if let Some(prev) = self.last {
            self.total += (f / prev).arg();
        }
        let mut u = 0.0;
        while u < len {
            // first-order guess for a step that turns f by about max_angle
            let rate = (df * dir).norm() / f.norm();
            let mut h = (0.5 * max_angle / rate.max(1e-12)).min(MAX_STEP * scale);
            loop {
                let next_u = (u + h).min(len);
                let s = z0 + dir * next_u;
                let (fn_, dfn) = self.eval(s)?;
                let turn = (fn_ / f).arg();
                if turn.abs() <= max_angle {
                    self.total += turn;
                    u = next_u;
                    f = fn_;
                    df = dfn;
                    break;
                }
                h *= 0.5;
                if h < MIN_STEP {
                    return Err(LabError::NonConvergence(format!(
                        "contour step underflow near {}",
                        z0 + dir * u
                    )));
                }
            }
        }
        self.last = Some(f);
        Ok(())
    }
}

/// Number of roots of ζ(s) = a inside `rect`, by the argument principle.
///
/// `refine` halves the step ceiling and angle bound that many times; the
/// result is independent of it whenever the contour is resolved.
pub fn winding_number(a: Complex64, rect: Rect, refine: u32) -> Result<i64> {
    let corners = [
        Complex64::new(rect.sigma_lo, rect.t_lo),
        Complex64::new(rect.sigma_hi, rect.t_lo),
        Complex64::new(rect.sigma_hi, rect.t_hi),
        Complex64::new(rect.sigma_lo, rect.t_hi),
    ];
    let mut w = Walker {
        a,
        refine,
        total: 0.0,
        last: None,
        evals: 0,
    };
    for k in 0..4 {
        w.segment(corners[k], corners[(k + 1) % 4])?;
    }
    let turns = w.total / (2.0 * PI);
    let n = turns.round();
    if (turns - n).abs() > 1e-3 {
        return Err(LabError::NonConvergence(format!(
            "winding number {turns} is not an integer"
        )));
    }
    log::debug!("winding number {n} from {} evaluations", w.evals);
    Ok(n as i64)
}
