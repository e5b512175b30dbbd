use apoint_lab::approx::{decompose, hough_check, HOUGH_C0};
use apoint_lab::gram::{self, classify_gram, GramClass};
use apoint_lab::special_fn::{primes_up_to, PrimeTable, MAX_PRIME_LIMIT};
use apoint_lab::stats::{self, PairCorrStat};
use apoint_lab::zeros_apoints::{count_apoints, find_apoints, find_zeros, riemann_von_mangoldt};
use apoint_lab::{Complex64, LabError};
use serde_json::{json, Map, Value};

use crate::output::{CommandResult, Deviation, Table};
use crate::plot::OwnedPlot;
use crate::{usage, CliError, Command, RunConfig};

const X_NOTE: &str = "free parameter; the asymptotic choice tied to T is degenerate at computable heights";
const Y_NOTE: &str = "free parameter; the asymptotic choice Y = T^(1/Psi^4) is degenerate at computable heights";

pub const DEFAULT_X: f64 = 100.0;
pub const MAX_X: f64 = 1000.0;
pub const DEFAULT_Y_CHARFN: f64 = 1e4;
pub const DEFAULT_Y_MOMENTS: f64 = 100.0;
pub const DEFAULT_DIST_CAP: usize = 100_000;
pub const DEFAULT_APPROX_CAP: usize = 1000;
/// Characteristic functions are tabulated at u = 0.25k for k ≤ this.
const CHARFN_GRID: usize = 16;
/// Zero windows are padded by this much so σ_{X,t}, η_t and the g* test are covered.
const ZERO_PAD: f64 = 3.0;

/// Validated, defaulted parameters.
#[derive(Debug, Clone)]
pub(crate) struct Plan {
    t: f64,
    t2: Option<f64>,
    a: Option<Complex64>,
    phi: f64,
    x_big: Option<f64>,
    y_big: Option<f64>,
    cap: usize,
    x: f64,
    orders: Vec<u32>,
    alpha: f64,
    beta: f64,
    n: u32,
    epsilon: f64,
}

fn need<T>(v: Option<T>, flag: &str, cmd: Command) -> Result<T, CliError> {
    v.ok_or_else(|| usage(format!("{} requires {flag}", format!("{cmd:?}").to_lowercase())))
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), CliError> {
    if cond {
        Ok(())
    } else {
        Err(usage(msg()))
    }
}

fn finite(name: &str, v: Option<f64>) -> Result<(), CliError> {
    match v {
        Some(x) if !x.is_finite() => Err(usage(format!("{name} must be finite"))),
        _ => Ok(()),
    }
}

/// Checks everything that can be checked before any computation.
pub(crate) fn validate(c: &RunConfig) -> Result<Plan, CliError> {
    for (name, v) in [
        ("--T", c.t),
        ("--T2", c.t2),
        ("--a-re", c.a_re),
        ("--a-im", c.a_im),
        ("--X", c.big_x),
        ("--Y", c.big_y),
        ("--x", c.x),
        ("--alpha", c.alpha),
        ("--beta", c.beta),
        ("--epsilon", c.epsilon),
    ] {
        finite(name, v)?;
    }
    let cmd = c.command;
    let a = match (c.a_re, c.a_im) {
        (None, None) => None,
        (re, im) => Some(Complex64::new(re.unwrap_or(0.0), im.unwrap_or(0.0))),
    };
    let phi = match a {
        Some(a) => gram::phase_of(a)?,
        None => 0.0,
    };
    if cmd == Command::Expsum {
        let x = need(c.x, "--x", cmd)?;
        check(x > 0.0, || format!("--x must be positive, got {x}"))?;
        check(x != 1.0, || "--x must differ from 1 (every term would be 1)".into())?;
    }
    let t = need(c.t, "--T", cmd)?;
    let mut plan = Plan {
        t,
        t2: c.t2,
        a,
        phi,
        x_big: None,
        y_big: None,
        cap: 0,
        x: f64::NAN,
        orders: Vec::new(),
        alpha: c.alpha.unwrap_or(0.5),
        beta: c.beta.unwrap_or(1.0),
        n: c.n.unwrap_or(1),
        epsilon: c.epsilon.unwrap_or(0.05),
    };
    match cmd {
        Command::Gram => {
            let t2 = c.t2.unwrap_or(t + 100.0);
            check((1e3..=1e7).contains(&t) && t < t2 && t2 <= 1e7, || {
                format!("gram needs 1e3 <= T < T2 <= 1e7, got ({t}, {t2}]")
            })?;
            plan.t2 = Some(t2);
        }
        Command::Zeros => {
            let (lo, hi) = match c.t2 {
                Some(t2) => (t, t2),
                None => (10.0, t),
            };
            check(lo >= 10.0 && lo < hi && hi <= 1e7, || {
                format!("zeros needs 10 <= T1 < T2 <= 1e7, got [{lo}, {hi}]")
            })?;
            plan.t = lo;
            plan.t2 = Some(hi);
        }
        Command::Apoints => {
            let a = need(a, "--a-re", cmd)?;
            check(a != Complex64::new(0.0, 0.0), || "a = 0 has no phase; use the zeros command".into())?;
            check((1e2..=1e4).contains(&t), || format!("apoints needs 1e2 <= T <= 1e4, got {t}"))?;
        }
        Command::Dist | Command::Charfn => {
            check((1e4..=5e6).contains(&t), || format!("{cmd:?} needs 1e4 <= T <= 5e6, got {t}").to_lowercase())?;
            plan.cap = c.sample_cap.unwrap_or(DEFAULT_DIST_CAP);
            check(plan.cap >= 1000, || format!("--sample-cap must be at least 1000, got {}", plan.cap))?;
            if cmd == Command::Charfn {
                let y = c.big_y.unwrap_or(DEFAULT_Y_CHARFN);
                check((2.0..=MAX_PRIME_LIMIT as f64).contains(&y), || format!("--Y must lie in [2, 1e9], got {y}"))?;
                plan.y_big = Some(y);
            }
        }
        Command::Approx => {
            check((1e2..=1e6).contains(&t), || format!("approx needs 1e2 <= T <= 1e6, got {t}"))?;
            let x = c.big_x.unwrap_or(DEFAULT_X);
            check((2.0..=MAX_X).contains(&x), || format!("--X must lie in [2, {MAX_X}], got {x}"))?;
            plan.x_big = Some(x);
            plan.cap = c.sample_cap.unwrap_or(DEFAULT_APPROX_CAP);
            check(plan.cap >= 1, || "--sample-cap must be positive".into())?;
        }
        Command::Moments => {
            let y = c.big_y.unwrap_or(DEFAULT_Y_MOMENTS);
            check((2.0..=stats::MAX_TIME_Y).contains(&y), || format!("--Y must lie in [2, 1e3], got {y}"))?;
            check(t > 0.0 && t <= stats::MAX_TIME_T, || format!("moments needs 0 < T <= 1e6, got {t}"))?;
            plan.y_big = Some(y);
            plan.orders = match c.m {
                Some(m) => vec![m],
                None => (0..=4).collect(),
            };
            check(plan.orders.iter().all(|&m| m <= stats::MAX_TIME_ORDER), || {
                format!("--m must be at most {}", stats::MAX_TIME_ORDER)
            })?;
        }
        Command::Expsum => {
            let x = need(c.x, "--x", cmd)?;
            check((10.0..=stats::MAX_EXPSUM_T).contains(&t), || format!("expsum needs 10 <= T <= 1e5, got {t}"))?;
            plan.x = x;
        }
        Command::Paircorr => {
            check(t > 14.0 && t <= 1e6, || format!("paircorr needs 14 < T <= 1e6, got {t}"))?;
            check(plan.alpha < plan.beta, || format!("need alpha < beta, got [{}, {}]", plan.alpha, plan.beta))?;
        }
        Command::Hyps => {
            check(t >= 10.0 && 2.0 * t <= 1e7, || format!("hyps needs 10 <= T <= 5e6, got {t}"))?;
            check(plan.n >= 1, || "--n must be at least 1".into())?;
            check(plan.epsilon >= 0.0, || format!("--epsilon must be non-negative, got {}", plan.epsilon))?;
        }
    }
    Ok(plan)
}

fn f(v: f64) -> Value {
    json!(v)
}

fn result(table: Table, rows_key: &'static str) -> CommandResult {
    CommandResult {
        table,
        rows_key,
        summary: Map::new(),
        parameters: Map::new(),
        deviations: Vec::new(),
        plot: None,
    }
}

fn params(pairs: &[(&str, Value)]) -> Map<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// X and Y are recorded on every run, as null where the command does not use them.
fn deviations(x: Option<f64>, y: Option<f64>) -> Vec<Deviation> {
    vec![
        Deviation {
            parameter: "X",
            value: x,
            note: X_NOTE,
        },
        Deviation {
            parameter: "Y",
            value: y,
            note: Y_NOTE,
        },
    ]
}

pub(crate) fn dispatch(c: &RunConfig, p: &Plan) -> Result<CommandResult, CliError> {
    let mut r = match c.command {
        Command::Gram => gram_cmd(p)?,
        Command::Zeros => zeros_cmd(p)?,
        Command::Apoints => apoints_cmd(p)?,
        Command::Dist => dist_cmd(c, p)?,
        Command::Charfn => charfn_cmd(c, p)?,
        Command::Approx => approx_cmd(c, p)?,
        Command::Moments => moments_cmd(p)?,
        Command::Expsum => expsum_cmd(p)?,
        Command::Paircorr => paircorr_cmd(p)?,
        Command::Hyps => hyps_cmd(p)?,
    };
    r.deviations = deviations(p.x_big, p.y_big);
    Ok(r)
}

fn gram_cmd(p: &Plan) -> Result<CommandResult, CliError> {
    let t2 = p.t2.expect("validated");
    let pts = gram::grams_in_range(p.t, t2, p.phi)?;
    let mut table = Table::new(&["n", "g", "residual", "seed_gap"]);
    for g in &pts {
        table.push(vec![json!(g.n), f(g.t), f(g.residual), f(g.seed_gap)]);
    }
    let mut r = result(table, "points");
    r.parameters = params(&[("T", f(p.t)), ("T2", f(t2)), ("phi", f(p.phi))]);
    r.summary = params(&[
        ("count", json!(pts.len())),
        ("spacing_deviation", f(gram::spacing_check(&pts, p.t))),
    ]);
    Ok(r)
}

fn zeros_cmd(p: &Plan) -> Result<CommandResult, CliError> {
    let t2 = p.t2.expect("validated");
    let z = find_zeros(p.t, t2)?;
    let mut table = Table::new(&["index", "gamma", "bracket_width"]);
    for z in z.zeros() {
        table.push(vec![json!(z.index), f(z.gamma), f(z.bracket_width)]);
    }
    let mut r = result(table, "zeros");
    r.parameters = params(&[("T1", f(p.t)), ("T2", f(t2))]);
    r.summary = params(&[
        ("count", json!(z.len())),
        ("main_term", f(riemann_von_mangoldt(t2) - riemann_von_mangoldt(p.t))),
    ]);
    Ok(r)
}

fn apoints_cmd(p: &Plan) -> Result<CommandResult, CliError> {
    let a = p.a.expect("validated");
    let count = count_apoints(a, p.t)?;
    let scan = find_apoints(a, 1.0, p.t)?;
    let mut table = Table::new(&["beta", "gamma", "residual", "seed_kind", "iterations"]);
    for pt in &scan.points {
        table.push(vec![
            f(pt.beta),
            f(pt.gamma),
            f(pt.residual),
            serde_json::to_value(pt.seed_kind)?,
            json!(pt.iterations),
        ]);
    }
    let mut r = result(table, "points");
    r.parameters = params(&[("T", f(p.t)), ("a_re", f(a.re)), ("a_im", f(a.im)), ("phi", f(p.phi))]);
    r.summary = params(&[
        ("count", json!(count.count)),
        ("main_term", f(count.main_term)),
        ("count_height", f(count.t)),
        ("located", json!(scan.points.len())),
        ("trivial_excluded", json!(scan.trivial_excluded)),
        ("complete", json!(scan.is_complete())),
    ]);
    Ok(r)
}

fn dist_params(p: &Plan, c: &RunConfig) -> Map<String, Value> {
    params(&[("T", f(p.t)), ("phi", f(p.phi)), ("sample_cap", json!(p.cap)), ("seed", json!(c.seed))])
}

fn dist_summary(d: &stats::DistSummary) -> Map<String, Value> {
    params(&[
        ("psi", f(d.psi)),
        ("drawn", json!(d.drawn)),
        ("dropped", json!(d.dropped)),
        ("sample_count", json!(d.sample_count)),
        ("ks_distance", f(d.ks_distance)),
        ("mean", f(d.mean)),
        ("variance", f(d.variance)),
        ("central_mass_0_1", f(d.mass_in(-0.1, 0.1))),
    ])
}

fn dist_cmd(c: &RunConfig, p: &Plan) -> Result<CommandResult, CliError> {
    let d = stats::dist_log_zeta(p.t, p.phi, p.cap, c.seed)?;
    let mut table = Table::new(&["index", "g", "log_abs_zeta", "normalized"]);
    for s in &d.samples {
        table.push(vec![json!(s.index), f(s.g), f(s.log_abs_zeta), f(s.normalized)]);
    }
    let mut r = result(table, "samples");
    r.parameters = dist_params(p, c);
    r.summary = dist_summary(&d);
    r.plot = Some(OwnedPlot::Dist(d));
    Ok(r)
}

fn table_for(y: f64) -> Result<PrimeTable, CliError> {
    Ok(primes_up_to(y.floor().max(2.0) as u64)?)
}

fn charfn_cmd(c: &RunConfig, p: &Plan) -> Result<CommandResult, CliError> {
    let y = p.y_big.expect("validated");
    let d = stats::dist_log_zeta(p.t, p.phi, p.cap, c.seed)?;
    let table_p = table_for(y)?;
    let us: Vec<f64> = (0..=CHARFN_GRID).map(|k| 0.25 * k as f64).collect();
    let samples = stats::char_fn_samples(&d, &us, y, &table_p)?;
    let mut table = Table::new(&["u", "empirical_re", "empirical_im", "model_j0", "gaussian"]);
    let mut worst = 0.0f64;
    for s in &samples {
        table.push(vec![f(s.u), f(s.empirical.re), f(s.empirical.im), f(s.model_j0), f(s.gaussian)]);
        if s.u <= 2.0 {
            worst = worst.max((s.empirical - s.model_j0).norm());
        }
    }
    let mut r = result(table, "samples");
    r.parameters = dist_params(p, c);
    r.parameters.insert("Y".into(), f(y));
    r.summary = dist_summary(&d);
    r.summary.insert("max_model_gap_u_le_2".into(), f(worst));
    r.plot = Some(OwnedPlot::CharFn(samples));
    Ok(r)
}

fn approx_cmd(c: &RunConfig, p: &Plan) -> Result<CommandResult, CliError> {
    let x = p.x_big.expect("validated");
    let (t1, t2) = (p.t, 2.0 * p.t);
    let (lo, hi) = gram::index_range(t1, t2, 0.0);
    let picked = stats::sample_indices(lo, hi, p.cap, c.seed);
    let zeros = find_zeros((t1 - ZERO_PAD).max(10.0), t2 + ZERO_PAD)?;
    let table_p = table_for(x * x * x)?;
    let mut table = Table::new(&[
        "index",
        "t",
        "prime_sum",
        "sigma_xt",
        "f",
        "e1",
        "e2",
        "e3",
        "dirichlet_integral",
        "lhs_half",
        "lhs_sigma",
        "residual_half",
        "residual_sigma",
        "budget_half",
        "budget_sigma",
        "hough_margin",
    ]);
    let (mut substar, mut saturated) = (0usize, 0usize);
    let mut abs_res = Vec::new();
    let mut min_margin = f64::INFINITY;
    let mut within = 0usize;
    for n in picked {
        let g = gram::shifted_gram(n, 0.0)?;
        if classify_gram(&g, &zeros)? == GramClass::Substar {
            substar += 1;
            continue;
        }
        let (d, h) = match (decompose(g.t, x, &zeros, &table_p), hough_check(&g, x, &zeros)) {
            (Ok(d), Ok(h)) => (d, h),
            (Err(LabError::Saturated(_)), _) | (_, Err(LabError::Saturated(_))) => {
                saturated += 1;
                continue;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e.into()),
        };
        abs_res.push(d.residual_half.abs());
        min_margin = min_margin.min(h.margin);
        within += usize::from(d.residual_half.abs() <= d.budget_half);
        table.push(vec![
            json!(n),
            f(g.t),
            f(d.prime_sum),
            f(d.sigma_xt),
            f(d.f),
            f(d.e1),
            f(d.e2),
            f(d.e3),
            f(d.dirichlet_integral),
            f(d.lhs_half),
            f(d.lhs_sigma),
            f(d.residual_half),
            f(d.residual_sigma),
            f(d.budget_half),
            f(d.budget_sigma),
            f(h.margin),
        ]);
    }
    let used = abs_res.len();
    let mut r = result(table, "points");
    r.parameters = params(&[("T", f(t1)), ("X", f(x)), ("sample_cap", json!(p.cap)), ("seed", json!(c.seed))]);
    r.summary = params(&[
        ("evaluated", json!(used)),
        ("substar_skipped", json!(substar)),
        ("saturated_skipped", json!(saturated)),
        (
            "mean_abs_residual_half",
            if used == 0 { Value::Null } else { f(apoint_lab::par::pairwise_sum(&abs_res) / used as f64) },
        ),
        ("within_budget", json!(within)),
        ("min_hough_margin", if used == 0 { Value::Null } else { f(min_margin) }),
        ("hough_c0", f(HOUGH_C0)),
    ]);
    Ok(r)
}

fn moments_cmd(p: &Plan) -> Result<CommandResult, CliError> {
    let y = p.y_big.expect("validated");
    let table_p = table_for(y)?;
    let mut table = Table::new(&["m", "exact", "time_average", "difference"]);
    for &m in &p.orders {
        let exact = stats::random_model_moment_exact(m, y, &table_p)?;
        let avg = stats::time_average_moment(m, y, p.t, &table_p)?;
        table.push(vec![json!(m), f(exact), f(avg), f(avg - exact)]);
    }
    let mut r = result(table, "moments");
    r.parameters = params(&[("T", f(p.t)), ("Y", f(y))]);
    r.summary = params(&[("primes", json!(table_p.count_up_to(y)))]);
    Ok(r)
}

fn expsum_cmd(p: &Plan) -> Result<CommandResult, CliError> {
    let s = stats::exp_sum_over_grams(p.x, p.t, p.phi)?;
    let mut table = Table::new(&["x", "T", "count", "sum_re", "sum_im", "modulus", "bound", "ratio"]);
    let m = s.sum.norm();
    table.push(vec![f(s.x), f(s.t), json!(s.count), f(s.sum.re), f(s.sum.im), f(m), f(s.bound), f(m / s.bound)]);
    let mut r = result(table, "sums");
    r.parameters = params(&[("T", f(p.t)), ("x", f(p.x)), ("phi", f(p.phi))]);
    r.summary = params(&[("count", json!(s.count)), ("ratio", f(m / s.bound))]);
    Ok(r)
}

fn pair_row(table: &mut Table, s: &PairCorrStat) {
    table.push(vec![
        f(s.alpha),
        f(s.beta),
        json!(s.zero_count),
        json!(s.pair_count),
        f(s.normalized_count),
        f(s.gue_value),
        f(s.normalized_count / s.gue_value - 1.0),
    ]);
}

fn paircorr_cmd(p: &Plan) -> Result<CommandResult, CliError> {
    let zeros = find_zeros(10.0, p.t)?;
    let s = stats::pair_correlation(&zeros, p.t, p.alpha, p.beta)?;
    let mut table = Table::new(&[
        "alpha",
        "beta",
        "zero_count",
        "pair_count",
        "normalized_count",
        "gue_value",
        "relative_deviation",
    ]);
    pair_row(&mut table, &s);
    let mut r = result(table, "windows");
    r.parameters = params(&[("T", f(p.t)), ("alpha", f(p.alpha)), ("beta", f(p.beta))]);
    r.summary = params(&[("relative_deviation", f(s.normalized_count / s.gue_value - 1.0))]);
    // bins of width 0.1 on [0, 3] for plotting
    let bins = (0..30)
        .map(|k| stats::pair_correlation(&zeros, p.t, 0.1 * k as f64, 0.1 * (k + 1) as f64))
        .collect::<Result<Vec<_>, _>>()?;
    r.plot = Some(OwnedPlot::PairCorr(bins));
    Ok(r)
}

fn hyps_cmd(p: &Plan) -> Result<CommandResult, CliError> {
    let zeros = find_zeros((p.t - ZERO_PAD).max(10.0), 2.0 * p.t + ZERO_PAD)?;
    let full = stats::hypothesis_s_stat(&zeros, p.t, p.n, p.epsilon)?;
    let half = stats::hypothesis_s_stat(&zeros, p.t, p.n, 0.5 * p.epsilon)?;
    let mut table = Table::new(&["n", "epsilon", "pair_count", "normalized"]);
    for s in [&full, &half] {
        table.push(vec![json!(s.n), f(s.epsilon), json!(s.pair_count), f(s.normalized)]);
    }
    let mut r = result(table, "stats");
    r.parameters = params(&[("T", f(p.t)), ("n", json!(p.n)), ("epsilon", f(p.epsilon))]);
    let ratio = if full.pair_count == 0 { Value::Null } else { f(half.normalized / full.normalized) };
    r.summary = params(&[("half_epsilon_ratio", ratio)]);
    Ok(r)
}
