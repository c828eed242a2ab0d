use std::f64::consts::TAU;

use dirsum::coefficients::{binom, partial_sum, sigma_norm, Measure, TaylorPoly, UnitPoint};
use dirsum::dirac::{converge_dirac, tail_sum, vandermonde_correct};
use dirsum::douglas::{difference_quotient, local_norm, mu_norm_sq, multi_decompose};
use dirsum::oracle::{integrate, QuadratureGrid};
use dirsum::summation::{counterexample_report, lemma47_check};
use dirsum::weights::{modified_taylor, validate, Variant, WeightArray};
use dirsum::Complex64;
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(re, im)| Complex64::new(re, im))
}

fn poly(start: std::ops::RangeInclusive<usize>, max_len: usize) -> impl Strategy<Value = TaylorPoly> {
    (start, prop::collection::vec(coeff(), 1..=max_len)).prop_map(|(s, c)| TaylorPoly::new(s, c).unwrap())
}

fn point() -> impl Strategy<Value = UnitPoint> {
    (0.0..TAU).prop_map(|t| UnitPoint::new(t).unwrap())
}

/// `s` angles at least 0.2 rad apart, built by walking around the circle.
fn spread(s: usize) -> impl Strategy<Value = Vec<UnitPoint>> {
    (0.0..TAU, prop::collection::vec(0.0..1.0f64, s)).prop_map(move |(start, jitter)| {
        let slot = TAU / s as f64;
        jitter
            .iter()
            .enumerate()
            .map(|(i, j)| UnitPoint::new(start + slot * (i as f64 + 0.1 + 0.8 * j * (1.0 - 0.2 / slot).max(0.0))).unwrap())
            .collect()
    })
}

fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(f64::MIN_POSITIVE)
}

proptest! {
    #[test]
    fn pascal_identity(k in 1usize..400, m in 1usize..12) {
        prop_assume!(k >= m);
        let lhs = binom(k, m);
        let rhs = binom(k - 1, m - 1) + binom(k - 1, m);
        prop_assert!(rel_close(lhs, rhs, 1e-12), "{lhs} vs {rhs}");
    }

    #[test]
    fn sigma_norm_scaling(f in poly(0..=5, 30), a in coeff(), m in 1usize..5) {
        let lhs = sigma_norm(&f.scale(a), m);
        let rhs = a.norm_sqr() * sigma_norm(&f, m);
        prop_assert!((lhs - rhs).abs() <= 1e-12 * lhs.abs().max(rhs.abs()) + 1e-300);
    }

    #[test]
    fn sigma_norm_vanishes_only_below_order(f in poly(0..=3, 10), m in 1usize..6) {
        let v = sigma_norm(&f, m);
        prop_assert!(v >= 0.0);
        let above = f.terms().any(|(k, c)| k >= m && c != Complex64::new(0.0, 0.0));
        prop_assert_eq!(v == 0.0, !above);
    }

    #[test]
    fn partial_sum_idempotent(f in poly(0..=4, 40), m in 1usize..5, n in 0usize..40) {
        let once = partial_sum(&f, m, n);
        prop_assert_eq!(partial_sum(&once, m, n), once);
    }

    #[test]
    fn quotient_order_reduction(f in poly(2..=6, 30), p in point(), m in 1usize..5) {
        prop_assume!(f.start() >= m + 1);
        let g = difference_quotient(&f, &p).quotient;
        let lhs = sigma_norm(&g, m - 1);
        let rhs = g.coeff(m - 1).norm_sqr() + m as f64 * sigma_norm(&g, m);
        prop_assert!(lhs <= rhs * (1.0 + 1e-12), "{lhs} > {rhs}");
    }

    #[test]
    fn quotient_recurrence(f in poly(0..=5, 40), p in point()) {
        let d = difference_quotient(&f, &p);
        let lam = p.value();
        let hi = f.degree().unwrap();
        for k in f.start().max(1)..=hi {
            let lhs = d.quotient.coeff(k - 1) - lam * d.quotient.coeff(k);
            prop_assert!((lhs - f.coeff(k)).norm() <= 1e-12, "k={k}");
        }
    }

    #[test]
    fn local_norm_is_dirac_norm(f in poly(0..=3, 25), p in point(), m in 1usize..5) {
        prop_assert_eq!(local_norm(&f, &p, m), mu_norm_sq(&f, &Measure::dirac(p), m));
    }

    #[test]
    fn tail_sum_matches_quotient(f in poly(0..=3, 40), p in point(), m in 1usize..4, n in 0usize..30) {
        let f = f.restrict(m, usize::MAX);
        prop_assume!(!f.is_zero() && n + m <= f.degree().unwrap());
        let q = difference_quotient(&f, &p).quotient;
        prop_assert!((tail_sum(&f, &p, n + m) - q.coeff(n + m - 1)).norm() <= 1e-12);
    }

    #[test]
    fn comparison_inequality(q in poly(2..=6, 20), p in point(), m in 1usize..5) {
        prop_assume!(q.start() >= m + 1);
        let n = q.degree().unwrap() - m - 1 + 3;
        prop_assert!(lemma47_check(&q, &p, m, n).unwrap().ok);
    }

    #[test]
    fn boxcar_is_restricted_partial_sum(f in poly(0..=4, 40), m in 1usize..6, n in 0usize..40) {
        let b = WeightArray::boxcar(Variant::Shifted, m).unwrap();
        prop_assert_eq!(modified_taylor(&b, &f, m, n).unwrap(), f.restrict(m + 1, n + m + 1));
    }

    #[test]
    fn closed_forms_agree(m in 1usize..=4, n in 0usize..=60) {
        prop_assert!(counterexample_report(m, n).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn reconstruction_round_trip(f in poly(0..=0, 41), p in point()) {
        let d = difference_quotient(&f, &p);
        prop_assert!(d.reconstruct().max_abs_diff(&f) <= 1e-12);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn multi_decompose_permutation_invariant(
        f in poly(0..=2, 30),
        pts in (2usize..=5).prop_flat_map(spread),
        rot in 0usize..5,
    ) {
        let a = multi_decompose(&f, &pts).unwrap();
        let mut shuffled = pts.clone();
        shuffled.rotate_left(rot % pts.len());
        shuffled.swap(0, pts.len() - 1);
        let b = multi_decompose(&f, &shuffled).unwrap();
        prop_assert!(a.core.max_abs_diff(&b.core) <= 1e-10);
        prop_assert!(a.reconstruct().max_abs_diff(&f) <= 1e-10);
    }

    #[test]
    fn vandermonde_solution_unique(
        f in poly(1..=1, 40),
        pts in (1usize..=5).prop_flat_map(spread),
        extra in 0usize..10,
    ) {
        let (m, n) = (1, pts.len() + extra);
        let (pa, a) = vandermonde_correct(&f, &pts, m, n).unwrap();
        let mut rev = pts.clone();
        rev.reverse();
        let (_, b) = vandermonde_correct(&f, &rev, m, n).unwrap();
        for (x, y) in a.solution.iter().zip(&b.solution) {
            prop_assert!((x - y).norm() <= 1e-10);
        }
        // below the correction window P and f agree exactly
        for k in m..=pa.base_degree {
            prop_assert_eq!(pa.poly.coeff(k), f.coeff(k));
        }
    }
}

#[test]
fn row_total_variation_profile() {
    for m in 1..=8 {
        for eps in [0.1, 0.5, 1.0] {
            let t = WeightArray::tapered(Variant::Shifted, m, eps).unwrap();
            let tv = |n: usize| {
                let (lo, hi) = t.support(n);
                (lo..hi).map(|k| t.weight_step(n, k).norm()).sum::<f64>()
            };
            for n in 10..300 {
                let bound = n as f64 * eps * t.row_bound(n);
                assert!(tv(n) <= bound * (1.0 + 1e-12), "m={m} eps={eps} n={n}");
                if m == 1 {
                    // n / sqrt((n+1)(n+2)) rises to 1: bounded by eps, not decreasing
                    assert!(tv(n + 1) > tv(n) && tv(n) < eps, "m=1 eps={eps} n={n}");
                } else {
                    assert!(tv(n + 1) < tv(n), "m={m} eps={eps} n={n}");
                }
            }
        }
    }
}

#[test]
fn tapered_family_validates() {
    for m in 1..=8 {
        for eps in [0.1, 0.5, 1.0] {
            let t = WeightArray::tapered(Variant::Shifted, m, eps).unwrap();
            let r = validate(&t, 500, 1e-6).unwrap();
            assert!(r.pass, "m={m} eps={eps}: {:?}", r.witnesses.first());
            assert!(r.empirical_m <= t.claimed_m * (1.0 + 1e-9));
        }
        let b = validate(&WeightArray::boxcar(Variant::Shifted, m).unwrap(), 500, 1e-6).unwrap();
        assert!(b.pass && b.empirical_m == 1.0 && b.empirical_l == 0.0);
    }
}

#[test]
fn quadrature_additive_in_measure() {
    let grid = QuadratureGrid::new(32, 64, true).unwrap();
    let f = TaylorPoly::from_real(&[0.0, 0.5, -1.0, 0.25, 0.0, 0.75]).unwrap();
    let (l1, l2) = (UnitPoint::new(0.4).unwrap(), UnitPoint::new(2.9).unwrap());
    let (c1, c2) = (0.7, 1.9);
    let mu = Measure::point_masses(vec![(l1, c1), (l2, c2)]).unwrap();
    for m in 1..=3 {
        let whole = integrate(&f, &mu, m, &grid);
        let parts = c1 * integrate(&f, &Measure::dirac(l1), m, &grid) + c2 * integrate(&f, &Measure::dirac(l2), m, &grid);
        assert!(rel_close(whole, parts, 1e-6), "m={m}: {whole} vs {parts}");
    }
}

#[test]
fn quadrature_refinement_monotone() {
    let cases = [
        (TaylorPoly::from_real(&[0.0, 0.0, 1.0]).unwrap(), 0.0, 1),
        (TaylorPoly::from_real(&[1.0, -0.5, 0.3, 0.0, 0.8]).unwrap(), 1.3, 1),
        (TaylorPoly::from_real(&[0.0, 1.0, 0.0, -2.0, 0.5, 0.1]).unwrap(), 4.0, 2),
        (TaylorPoly::from_real(&[0.2, 0.0, 0.0, 1.0, 0.0, 0.0, -0.4]).unwrap(), 5.5, 3),
    ];
    for (f, theta, m) in cases {
        let mu = Measure::dirac(UnitPoint::new(theta).unwrap());
        let want = mu_norm_sq(&f, &mu, m);
        let mut grid = QuadratureGrid::new(16, 64, true).unwrap();
        let mut last = f64::INFINITY;
        for _ in 0..4 {
            let err = (integrate(&f, &mu, m, &grid) - want).abs() / want;
            assert!(err <= last || err < 1e-10, "theta={theta} m={m}: {err} after {last}");
            last = err;
            grid = grid.doubled();
        }
        assert!(last < 1e-3);
    }
}

#[test]
fn dirac_convergence_reaches_zero() {
    let f = TaylorPoly::from_terms((1..=25).map(|k| (k, Complex64::new(1.0 / (k * k) as f64, 0.0)))).unwrap();
    let mu = Measure::point_masses(vec![(UnitPoint::new(0.3).unwrap(), 1.0), (UnitPoint::new(3.0).unwrap(), 2.0)]).unwrap();
    let recs = converge_dirac(&f, &mu, 1, 2, 30).unwrap();
    assert!(recs.last().unwrap().norm_sq < recs[0].norm_sq);
    // deg 25, m = 1, s = 2: P is f itself once n + m - s >= 25
    for r in recs.iter().filter(|r| r.n >= 26) {
        assert_eq!(r.norm_sq, 0.0, "n={}", r.n);
    }
}
