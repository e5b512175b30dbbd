use serde::Serialize;
use std::f64::consts::{E, PI};

use crate::error::{ensure, LabError, Result};
use crate::gram::{self, ShiftedGramPoint};
use crate::par;
use crate::special_fn::hardy_z;

/// Target bracket width of a refined zero.
pub const ZERO_TOL: f64 = 1e-8;
/// Maximum number of sub-intervals a Gram interval is split into.
pub const MAX_SUBDIVISION: usize = 64;
/// Search depth (in Gram indices) for a good Gram point outside the window.
const GOOD_POINT_SEARCH: i64 = 64;
const LOWEST_HEIGHT: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZeroOrdinate {
    /// 1-based position among the zeros ordered by height.
    pub index: u64,
    pub gamma: f64,
    pub bracket_width: f64,
}

/// A zero ρ = β + iγ off the critical line. Never produced by the zero
/// finder; used to exercise the general branches of σ_{X,t} and F.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OffLineZero {
    pub beta: f64,
    pub gamma: f64,
}

/// Sorted zero ordinates together with the height interval they cover.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroSet {
    lo: f64,
    hi: f64,
    zeros: Vec<ZeroOrdinate>,
    gammas: Vec<f64>,
    off_line: Vec<OffLineZero>,
}

impl ZeroSet {
    /// Builds a set from zeros that are complete on `[lo, hi]`.
    pub fn new(lo: f64, hi: f64, mut zeros: Vec<ZeroOrdinate>) -> ZeroSet {
        zeros.sort_by(|a, b| a.gamma.total_cmp(&b.gamma));
        let gammas = zeros.iter().map(|z| z.gamma).collect();
        ZeroSet {
            lo,
            hi,
            zeros,
            gammas,
            off_line: Vec::new(),
        }
    }

    /// Synthetic set from bare ordinates (indices are positions in the list).
    pub fn from_ordinates(lo: f64, hi: f64, gammas: &[f64]) -> ZeroSet {
        let zeros = gammas
            .iter()
            .enumerate()
            .map(|(i, &gamma)| ZeroOrdinate {
                index: i as u64 + 1,
                gamma,
                bracket_width: 0.0,
            })
            .collect();
        ZeroSet::new(lo, hi, zeros)
    }

    pub fn with_off_line(mut self, mut off_line: Vec<OffLineZero>) -> ZeroSet {
        off_line.sort_by(|a, b| a.gamma.total_cmp(&b.gamma));
        self.off_line = off_line;
        self
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn zeros(&self) -> &[ZeroOrdinate] {
        &self.zeros
    }

    pub fn gammas(&self) -> &[f64] {
        &self.gammas
    }

    pub fn off_line(&self) -> &[OffLineZero] {
        &self.off_line
    }

    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    pub fn covers(&self, a: f64, b: f64) -> bool {
        self.lo <= a && b <= self.hi
    }

    pub fn require_cover(&self, a: f64, b: f64) -> Result<()> {
        ensure(self.covers(a, b), || LabError::Coverage {
            lo: self.lo,
            hi: self.hi,
            need_lo: a,
            need_hi: b,
        })
    }

    /// On-line ordinates in the closed interval `[a, b]`.
    pub fn ordinates_in(&self, a: f64, b: f64) -> &[f64] {
        let i = self.gammas.partition_point(|&g| g < a);
        let j = self.gammas.partition_point(|&g| g <= b);
        &self.gammas[i..j.max(i)]
    }

    /// Off-line zeros with ordinate in `[a, b]`.
    pub fn off_line_in(&self, a: f64, b: f64) -> &[OffLineZero] {
        let i = self.off_line.partition_point(|z| z.gamma < a);
        let j = self.off_line.partition_point(|z| z.gamma <= b);
        &self.off_line[i..j.max(i)]
    }

    /// min |t − γ| over all stored ordinates (on and off the line).
    pub fn nearest_distance(&self, t: f64) -> Option<f64> {
        let i = self.gammas.partition_point(|&g| g < t);
        let on = [i.checked_sub(1), Some(i)]
            .into_iter()
            .flatten()
            .filter_map(|k| self.gammas.get(k))
            .map(|g| (t - g).abs());
        let k = self.off_line.partition_point(|z| z.gamma < t);
        let off = [k.checked_sub(1), Some(k)]
            .into_iter()
            .flatten()
            .filter_map(|k| self.off_line.get(k))
            .map(|z| (t - z.gamma).abs());
        on.chain(off).reduce(f64::min)
    }

    /// Restriction to `[a, b]` (which must be covered).
    pub fn window(&self, a: f64, b: f64) -> Result<ZeroSet> {
        self.require_cover(a, b)?;
        let i = self.gammas.partition_point(|&g| g < a);
        let j = self.gammas.partition_point(|&g| g <= b);
        let mut w = ZeroSet::new(a, b, self.zeros[i..j.max(i)].to_vec());
        w.off_line = self.off_line_in(a, b).to_vec();
        Ok(w)
    }
}

/// η_t = min_γ |t − γ|; the set must cover `[t − 2, t + 2]`.
pub fn eta(t: f64, zeros: &ZeroSet) -> Result<f64> {
    zeros.require_cover(t - 2.0, t + 2.0)?;
    Ok(zeros.nearest_distance(t).unwrap_or(f64::INFINITY))
}

/// Riemann–von Mangoldt main term (T/2π)·ln(T/2πe) + 7/8.
pub fn riemann_von_mangoldt(t: f64) -> f64 {
    let x = t / (2.0 * PI);
    x * (x / E).ln() + 0.875
}

/// A scan point: an ordinate where Z has been evaluated.
#[derive(Debug, Clone, Copy)]
struct Sample {
    t: f64,
    z: f64,
}

/// A run of Gram intervals between consecutive good Gram points, or from
/// the bottom of the strip (t = 10) to the first good point.
struct Block {
    /// Number of zeros N(start) below the block.
    zeros_below: i64,
    expected: i64,
    samples: Vec<Sample>,
}

fn z_at(t: f64) -> Result<Sample> {
    Ok(Sample { t, z: hardy_z(t)? })
}

fn is_good(g: &ShiftedGramPoint, z: f64) -> bool {
    let parity = if g.n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    parity * z > 0.0
}

fn sign_changes(samples: &[Sample]) -> i64 {
    samples
        .windows(2)
        .filter(|w| w[0].z.signum() != w[1].z.signum() || w[1].z == 0.0)
        .count() as i64
}

/// Splits every interval of the block into `parts` pieces.
fn subdivide(samples: &[Sample], parts: usize) -> Result<Vec<Sample>> {
    let mut out = Vec::with_capacity(samples.len() * parts);
    for w in samples.windows(2) {
        out.push(w[0]);
        let h = (w[1].t - w[0].t) / parts as f64;
        for k in 1..parts {
            out.push(z_at(w[0].t + k as f64 * h)?);
        }
    }
    out.extend(samples.last().copied());
    Ok(out)
}

/// Refines a sign change of Z on `[lo, hi]` by the Illinois variant of
/// regula falsi, with a bisection step whenever the bracket stalls.
fn refine(mut a: Sample, mut b: Sample) -> Result<(f64, f64)> {
    if a.z == 0.0 {
        return Ok((a.t, 0.0));
    }
    if b.z == 0.0 {
        return Ok((b.t, 0.0));
    }
    let (mut fa, mut fb) = (a.z, b.z);
    let mut side = 0i8;
    for _ in 0..200 {
        let width = b.t - a.t;
        if width <= ZERO_TOL {
            return Ok((0.5 * (a.t + b.t), width));
        }
        let mut x = (a.t * fb - b.t * fa) / (fb - fa);
        if !(x > a.t && x < b.t) || side.abs() >= 3 {
            x = 0.5 * (a.t + b.t);
            side = 0;
        }
        let c = z_at(x)?;
        if c.z == 0.0 {
            return Ok((x, 0.0));
        }
        if c.z.signum() == a.z.signum() {
            a = c;
            fa = c.z;
            fb *= if side < 0 { 0.5 } else { 1.0 };
            side = if side < 0 { side - 1 } else { -1 };
        } else {
            b = c;
            fb = c.z;
            fa *= if side > 0 { 0.5 } else { 1.0 };
            side = if side > 0 { side + 1 } else { 1 };
        }
    }
    Err(LabError::NonConvergence(format!(
        "zero refinement stalled on [{}, {}]",
        a.t, b.t
    )))
}

/// Gram point samples from index `lo` to `hi` inclusive.
fn gram_samples(lo: i64, hi: i64) -> Result<Vec<(ShiftedGramPoint, f64)>> {
    par::try_collect(par::map_range(lo, hi + 1, |n| {
        let g = gram::shifted_gram(n, 0.0)?;
        Ok((g, hardy_z(g.t)?))
    }))
}

/// Critical-line zero ordinates in `[T1, T2]`, for `10 ≤ T1 < T2 ≤ 10⁷`.
///
/// Z is sampled at classical Gram points. Between consecutive good Gram
/// points (where (−1)ⁿZ(gₙ) > 0) the expected number of zeros is the index
/// difference; blocks that come up short are subdivided, up to 64 points
/// per Gram interval. A deficit left after full subdivision may be made up
/// by a surplus in another block (Rosser's rule can fail). Each zero is then
/// refined to a bracket of width ≤ 10⁻⁸, and the total is checked against
/// the Riemann–von Mangoldt main term.
pub fn find_zeros(t1: f64, t2: f64) -> Result<ZeroSet> {
    ensure(t1 >= LOWEST_HEIGHT && t1 < t2 && t2 <= 1e7, || {
        LabError::Range(format!("find_zeros needs 10 <= T1 < T2 <= 1e7, got [{t1}, {t2}]"))
    })?;
    let blocks = build_blocks(t1, t2)?;
    let mut zeros = Vec::new();
    let mut deficit = 0i64;
    for block in blocks {
        let (brackets, found) = complete_block(block.samples, block.expected)?;
        deficit += block.expected - found;
        let refined = par::try_collect(par::map(&brackets, |&(a, b)| refine(a, b)))?;
        for (k, (gamma, width)) in refined.into_iter().enumerate() {
            if gamma >= t1 && gamma <= t2 {
                zeros.push(ZeroOrdinate {
                    index: (block.zeros_below + k as i64 + 1) as u64,
                    gamma,
                    bracket_width: width,
                });
            }
        }
    }
    let expected = riemann_von_mangoldt(t2) - riemann_von_mangoldt(t1.max(LOWEST_HEIGHT));
    let found = zeros.len();
    if deficit > 0 || (found as f64) < expected - 2.0 {
        return Err(LabError::MissingZeros {
            t1,
            t2,
            found,
            expected,
        });
    }
    if (found as f64) > expected + 2.0 {
        log::warn!("[{t1}, {t2}]: {found} zeros against main term {expected:.2}");
    }
    Ok(ZeroSet::new(t1, t2, zeros))
}

fn build_blocks(t1: f64, t2: f64) -> Result<Vec<Block>> {
    // Gram indices whose intervals meet [t1, t2], widened to good points.
    let first = gram::gram_index(t1, 0.0).floor() as i64;
    let last = gram::gram_index(t2, 0.0).floor() as i64 + 1;
    let lo_search = (first - GOOD_POINT_SEARCH).max(0);
    let hi_search = last + GOOD_POINT_SEARCH;
    let core = gram_samples(first.max(0), last)?;

    let mut lower: Vec<(ShiftedGramPoint, f64)> = Vec::new();
    let start_good = core.iter().position(|(g, z)| g.t <= t1 && is_good(g, *z));
    if first >= 0 && start_good.is_none() {
        let mut n = first - 1;
        loop {
            if n < lo_search {
                break;
            }
            let g = gram::shifted_gram(n, 0.0)?;
            let z = hardy_z(g.t)?;
            lower.push((g, z));
            if is_good(&g, z) {
                break;
            }
            n -= 1;
        }
        lower.reverse();
    }
    let mut upper = Vec::new();
    if !core.last().map(|(g, z)| is_good(g, *z)).unwrap_or(false) {
        let mut n = last + 1;
        while n <= hi_search {
            let g = gram::shifted_gram(n, 0.0)?;
            let z = hardy_z(g.t)?;
            upper.push((g, z));
            if is_good(&g, z) {
                break;
            }
            n += 1;
        }
    }
    let mut pts: Vec<(ShiftedGramPoint, f64)> = lower.into_iter().chain(core).chain(upper).collect();
    let bottom_open = pts.first().map(|(g, z)| !is_good(g, *z) || g.t > t1).unwrap_or(true);
    ensure(
        pts.last().map(|(g, z)| is_good(g, *z) && g.t >= t2).unwrap_or(false),
        || LabError::NonConvergence(format!("no good Gram point within reach above {t2}")),
    )?;

    // Anchor: either a good Gram point at or below t1, or the bottom of the
    // strip where N = 0 (valid because no zero lies below 14).
    let mut anchor: (f64, f64, i64);
    if bottom_open {
        let first_pt = pts.first().map(|(g, _)| g.n).unwrap_or(0);
        ensure(first_pt == 0, || {
            LabError::NonConvergence(format!("no good Gram point within reach below {t1}"))
        })?;
        anchor = (LOWEST_HEIGHT, hardy_z(LOWEST_HEIGHT)?, 0);
    } else {
        let (g, z) = pts.remove(0);
        anchor = (g.t, z, g.n + 1);
    }

    let mut blocks = Vec::new();
    let mut samples = vec![Sample {
        t: anchor.0,
        z: anchor.1,
    }];
    for (g, z) in pts {
        samples.push(Sample { t: g.t, z });
        if is_good(&g, z) {
            let n_below = anchor.2;
            // N(g) = n + 1 at a good Gram point obeying Rosser's rule
            let expected = g.n + 1 - n_below;
            blocks.push(Block {
                zeros_below: n_below,
                expected,
                samples: std::mem::take(&mut samples),
            });
            samples.push(Sample { t: g.t, z });
            anchor = (g.t, z, g.n + 1);
        }
    }
    Ok(blocks)
}

/// Subdivides until the block shows `expected` sign changes or the
/// subdivision limit is hit; returns the brackets and the count found.
fn complete_block(samples: Vec<Sample>, expected: i64) -> Result<(Vec<(Sample, Sample)>, i64)> {
    let base = samples;
    let mut cur = base.clone();
    let mut parts = 1;
    while sign_changes(&cur) < expected && parts < MAX_SUBDIVISION {
        parts *= 2;
        cur = subdivide(&base, parts)?;
    }
    let brackets: Vec<(Sample, Sample)> = cur
        .windows(2)
        .filter(|w| w[0].z.signum() != w[1].z.signum() || w[1].z == 0.0)
        .map(|w| (w[0], w[1]))
        .collect();
    let found = brackets.len() as i64;
    if found < expected {
        log::warn!(
            "Gram block [{}, {}] shows {found} of {expected} zeros after {parts}-fold subdivision",
            base[0].t,
            base[base.len() - 1].t
        );
    }
    Ok((brackets, found))
}
