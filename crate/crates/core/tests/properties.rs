//! Property tests for the invariants of every module.

use apoint_lab::approx::weight_w;
use apoint_lab::gram::*;
use apoint_lab::special_fn::*;
use apoint_lab::stats::*;
use apoint_lab::zeros_apoints::ZeroSet;
use apoint_lab::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

fn phase() -> impl Strategy<Value = f64> {
    // (−π, π]
    (0.0..1.0f64).prop_map(|u| PI - 2.0 * PI * u)
}

fn sorted_ordinates(lo: f64, hi: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(lo..hi, 0..300).prop_map(|mut v| {
        v.sort_by(f64::total_cmp);
        v
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn phase_is_in_range_and_scale_free(re in -10.0..10.0f64, im in -10.0..10.0f64, r in 0.01..100.0f64) {
        prop_assume!(re != 0.0 || im != 0.0);
        let a = Complex64::new(re, im);
        let p = phase_of(a).unwrap();
        prop_assert!(p > -PI && p <= PI);
        prop_assert!((phase_of(a * r).unwrap() - p).abs() < 1e-12);
    }

    #[test]
    fn gram_points_solve_the_phase_equation(n in 150i64..3_000_000, phi in phase()) {
        let g = shifted_gram(n, phi).unwrap();
        prop_assert_eq!(g.n, n);
        prop_assert!(g.residual.abs() <= 1e-9);
        prop_assert!(phase_residual(g.t, n, phi).abs() <= 1e-9);
        let next = shifted_gram(n + 1, phi).unwrap();
        prop_assert!(next.t > g.t);
        prop_assert!((gram_index(g.t, phi).hi - n as f64).abs() < 1e-6);
    }

    #[test]
    fn lambert_w_inverts(x in 0.0..1e6f64) {
        let w = lambert_w0(x).unwrap();
        prop_assert!((w * w.exp() - x).abs() <= 1e-13 * x.max(1e-300) + 1e-300);
    }

    #[test]
    fn zeta_conjugate_symmetry(sigma in -0.5..4.0f64, t in 1.0..5000.0f64) {
        let s = Complex64::new(sigma, t);
        let a = zeta(s).unwrap();
        let b = zeta(s.conj()).unwrap();
        prop_assert!((a - b.conj()).norm() <= 1e-12 * a.norm().max(1.0));
    }

    #[test]
    fn bessel_is_bounded(z in -200.0..200.0f64) {
        let j = bessel_j0(z);
        prop_assert!(j.abs() <= 1.0);
        prop_assert_eq!(j, bessel_j0(-z));
    }

    #[test]
    fn weight_in_unit_interval(n in 1u64..1_000_000, x in 2.0..200.0f64) {
        let w = weight_w(n, x);
        prop_assert!((0.0..=1.0).contains(&w));
        prop_assert!(weight_w(n + 1, x) <= w + 1e-15);
    }

    #[test]
    fn classification_matches_distance(g in prop::collection::vec(100.0..200.0f64, 1..40), t in 120.0..180.0f64) {
        let z = ZeroSet::from_ordinates(90.0, 210.0, &g);
        let pt = ShiftedGramPoint { n: 0, phi: 0.0, t, residual: 0.0, seed_gap: 0.0 };
        let nearest = g.iter().map(|x| (x - t).abs()).fold(f64::INFINITY, f64::min);
        let class = classify_gram(&pt, &z).unwrap();
        prop_assert_eq!(class == GramClass::Star, nearest >= star_threshold(t));
    }

    #[test]
    fn hyp_s_monotone_and_additive(g in sorted_ordinates(1000.0, 2000.0), e1 in 0.0..0.25f64, e2 in 0.0..0.25f64) {
        let z = ZeroSet::from_ordinates(1000.0, 2000.0, &g);
        let (lo, hi) = if e1 < e2 { (e1, e2) } else { (e2, e1) };
        let a = hypothesis_s_stat(&z, 1000.0, 1, lo).unwrap();
        let b = hypothesis_s_stat(&z, 1000.0, 1, hi).unwrap();
        prop_assert!(a.pair_count <= b.pair_count);
        // windows around n = 1 and n = 2 are disjoint for ε < ½; their union
        // is counted directly
        let lt = 1000f64.ln();
        let both = g.iter().filter(|&&x| x > 1000.0).flat_map(|&x| g.iter().filter(|&&y| y > 1000.0).map(move |&y| (x - y) * lt / (2.0 * PI)))
            .filter(|u| (u - 1.0).abs() < hi || (u - 2.0).abs() < hi)
            .count() as u64;
        let two = hypothesis_s_stat(&z, 1000.0, 2, hi).unwrap();
        prop_assert_eq!(b.pair_count + two.pair_count, both);
    }

    #[test]
    fn pair_correlation_mirror(g in sorted_ordinates(14.0, 500.0), a in -3.0..3.0f64, w in 0.01..2.0f64) {
        let z = ZeroSet::from_ordinates(10.0, 500.0, &g);
        let s = pair_correlation(&z, 500.0, a, a + w).unwrap();
        let m = pair_correlation(&z, 500.0, -a - w, -a).unwrap();
        prop_assert_eq!(s.pair_count, m.pair_count);
        prop_assert!(s.normalized_count >= 0.0);
    }

    #[test]
    fn odd_model_moments_vanish(y in 2.0..5000.0f64, m in prop::sample::select(vec![1u32, 3, 5, 7])) {
        let table = primes_up_to(5000).unwrap();
        prop_assert_eq!(random_model_moment_exact(m, y, &table).unwrap(), 0.0);
    }

    #[test]
    fn ks_in_unit_interval(mut v in prop::collection::vec(-5.0..5.0f64, 1..200)) {
        v.sort_by(f64::total_cmp);
        let d = ks_distance(&v);
        prop_assert!((0.0..=1.0).contains(&d));
    }

    #[test]
    fn sampled_indices_are_distinct_and_sorted(lo in -1000i64..1000, len in 0i64..5000, cap in 1usize..3000, seed: u64) {
        let v = sample_indices(lo, lo + len, cap, seed);
        prop_assert_eq!(v.len(), cap.min(len as usize));
        prop_assert!(v.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(v.iter().all(|&i| i >= lo && i < lo + len));
        prop_assert_eq!(v, sample_indices(lo, lo + len, cap, seed));
    }
}
