#![allow(clippy::excessive_precision)] // oracle digits kept as printed

//! Zeros and a-points against frozen mpmath values.

use apoint_lab::gram::{phase_of, shifted_gram};
use apoint_lab::special_fn::{riemann_siegel_theta, zeta};
use apoint_lab::zeros_apoints::*;
use apoint_lab::{Complex64, LabError};
use std::f64::consts::PI;

/// (n, γ_n) from `oracles/gram_zeros_apoints.py zeros`.
const ZEROS: [(u64, f64); 4] = [
    (1_000, 1_419.422_480_945_995_686_466),
    (5_000, 5_447.861_998_301_299_856_412),
    (10_000, 9_877.782_654_005_501_142_774),
    (100_000, 74_920.827_498_994_186_793_85),
];

/// a = 2 points with β > 0 and 1 < γ ≤ 60, from `... apoints`.
const A2_POINTS: [(f64, f64); 10] = [
    (0.824_019_063_659_316_93, 17.842_317_666_327_1),
    (0.089_940_682_864_162_891, 23.156_066_284_876_542),
    (1.053_878_371_501_833_3, 27.648_904_782_405_621),
    (1.025_303_854_133_216_6, 35.501_384_352_671_113),
    (0.386_158_681_734_064_79, 39.017_421_462_992_764),
    (0.051_101_055_443_263_568, 42.292_637_971_318_652),
    (1.277_332_226_668_619_9, 45.568_010_228_292_908),
    (0.505_070_862_990_782_01, 51.734_964_157_873_737),
    (0.915_552_751_568_324_7, 54.662_157_684_967_458),
    (0.396_312_216_631_985_43, 57.569_382_973_787_24),
];

#[test]
fn zeros_match_mpmath_with_index() {
    for (n, gamma) in ZEROS {
        let z = find_zeros(gamma - 1.0, gamma + 1.0).unwrap();
        let hit = z.zeros().iter().find(|z| (z.gamma - gamma).abs() < 1e-8).expect("zero located");
        assert_eq!(hit.index, n);
        assert!(hit.bracket_width <= ZERO_TOL);
    }
}

#[test]
fn known_counts() {
    // N(T) values: 649 below 1000, 10142 below 10⁴
    assert_eq!(find_zeros(10.0, 1e3).unwrap().len(), 649);
    assert_eq!(find_zeros(10.0, 1e4).unwrap().len(), 10_142);
}

#[test]
fn counts_near_main_term_on_windows() {
    for k in 1..=5 {
        let (a, b) = (k as f64 * 2e3, k as f64 * 2e3 + 500.0);
        let z = find_zeros(a, b).unwrap();
        let expected = riemann_von_mangoldt(b) - riemann_von_mangoldt(a);
        assert!((z.len() as f64 - expected).abs() <= 2.0, "[{a}, {b}]: {} vs {expected}", z.len());
    }
}

#[test]
fn range_errors() {
    assert!(matches!(find_zeros(5.0, 20.0), Err(LabError::Range(_))));
    assert!(matches!(find_zeros(20.0, 2e7), Err(LabError::Range(_))));
}

#[test]
fn apoints_match_mpmath() {
    let a = Complex64::new(2.0, 0.0);
    let scan = find_apoints(a, 1.0, 60.0).unwrap();
    assert!(scan.is_complete());
    assert_eq!(scan.points.len(), A2_POINTS.len());
    for (p, (beta, gamma)) in scan.points.iter().zip(A2_POINTS) {
        assert!((p.beta - beta).abs() < 1e-7 && (p.gamma - gamma).abs() < 1e-7, "{p:?}");
        assert!((zeta(p.s()).unwrap() - a).norm() < 1e-7);
    }
}

#[test]
fn count_covers_located_points() {
    let a = Complex64::new(2.0, 0.0);
    let c = count_apoints(a, 100.0).unwrap();
    let scan = find_apoints(a, 1.0, c.t).unwrap();
    assert_eq!(c.count as usize, scan.points.len() + scan.trivial_excluded);
    assert!((c.count as f64 - c.main_term).abs() <= 3.0 * 100f64.ln());
}

#[test]
fn winding_counts_oracle_roots() {
    let a = Complex64::new(2.0, 0.0);
    let rect = Rect {
        sigma_lo: 0.0,
        sigma_hi: 2.0,
        t_lo: 20.0,
        t_hi: 50.0,
    };
    let inside = A2_POINTS.iter().filter(|(b, g)| rect.contains(Complex64::new(*b, *g))).count();
    assert_eq!(winding_number(a, rect, 0).unwrap(), inside as i64);
    assert_eq!(winding_number(a, rect, 2).unwrap(), inside as i64);
}

#[test]
fn online_points_satisfy_phase_condition() {
    // a on the unit circle through a value taken on the line: ζ(½+ig) at a
    // Gram point is real up to the rotation, so a := ζ(½+ig) is hit at g
    let g = shifted_gram(400, 0.0).unwrap();
    let a = zeta(Complex64::new(0.5, g.t)).unwrap();
    let phi = phase_of(a).unwrap();
    let scan = find_apoints(a, g.t - 2.0, g.t + 2.0).unwrap();
    let on_line: Vec<_> = scan.points.iter().filter(|p| (p.beta - 0.5).abs() <= 1e-8).collect();
    assert!(!on_line.is_empty());
    for p in on_line {
        let r = (riemann_siegel_theta(p.gamma) + phi).rem_euclid(PI);
        assert!(r.min(PI - r) < 1e-6, "{p:?}");
    }
    // θ(g) + φ = π(n + φ/π): same ordinate, index shifted when φ = π
    let gp = shifted_gram(g.n + (phi / PI).round() as i64, phi).unwrap();
    assert!((gp.t - g.t).abs() < 1e-9);
    assert!(online_apoint_test(a, &gp, 1e-6));
}
