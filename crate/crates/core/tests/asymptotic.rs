use cranklab::asymptotic::{
    estimate_m, estimate_m_with_p, hardy_ramanujan_estimate, lehmer_bounds, main_term_1,
    main_term_1_bound, main_term_2, main_term_2_bound, refined_three_term_bound, theorem1_bound,
};
use cranklab::partition::{build_residue_table, partition_count, partition_counts};
use rug::{Float, Integer};

const PREC: u32 = 256;

fn rel(a: &Float, b: &Float) -> f64 {
    Float::with_val(PREC, Float::with_val(PREC, a - b) / b)
        .abs()
        .to_f64()
}

#[test]
fn residual_contract() {
    let table = build_residue_table(5, 1000, 5000).unwrap();
    let p = table.row_sum(1000);
    let e = estimate_m_with_p(1, 5, 1000, &p, PREC).unwrap();
    assert!(e.residual(table.get(1, 1000)) <= e.error_budget.total);
    assert!(e.relative_imag_residue() < 1e-6);
}

#[test]
fn r_sum_telescopes() {
    for (q, n) in [(3i64, 700i64), (5, 1200), (11, 400)] {
        let p = partition_count(n).unwrap();
        let parts: Vec<_> = (0..q)
            .map(|r| estimate_m_with_p(r, q, n, &p, PREC).unwrap())
            .collect();
        let total = parts
            .iter()
            .fold(Float::new(PREC), |acc: Float, e| acc + &e.total);
        let main = parts
            .iter()
            .fold(Float::new(PREC), |acc: Float, e| acc + &e.main1 + &e.main2);
        let pf = Float::with_val(PREC, &p);
        assert!(rel(&total, &pf) < 1e-60, "Q={q} n={n}");
        assert!(Float::with_val(PREC, &main / &pf).abs() < 1e-60);
    }
}

#[test]
fn precision_doubling_is_stable() {
    for (r, q, n) in [(0i64, 3i64, 1000i64), (2, 5, 500), (4, 13, 900)] {
        let lo = estimate_m(r, q, n, 256).unwrap();
        let hi = estimate_m(r, q, n, 512).unwrap();
        let d = Float::with_val(512, &hi.total - &lo.total) / &hi.total;
        assert!(
            d.abs() < Float::with_val(64, -64f64).exp2(),
            "r={r} Q={q} n={n}"
        );
    }
}

#[test]
fn approach_to_one_over_q() {
    for q in [3i64, 5] {
        let mut prev: Option<Float> = None;
        for n in [500i64, 1000, 2000] {
            let e = estimate_m(0, q, n, PREC).unwrap();
            let p = Float::with_val(PREC, partition_count(n).unwrap());
            let gap = (Float::with_val(PREC, &e.total / &p) - Float::with_val(PREC, 1) / q).abs();
            assert!(gap <= theorem1_bound(q, n, PREC).unwrap().to_float());
            if let Some(prev) = prev {
                assert!(gap < prev, "Q={q} n={n}");
            }
            prev = Some(gap);
        }
    }
}

#[test]
fn main_term_magnitudes() {
    let m1 = main_term_1(0, 3, 500, PREC).unwrap();
    assert!(Float::with_val(PREC, m1.abs_ref()) <= main_term_1_bound(3, 500, PREC).unwrap());
    for r in 0..5 {
        let m1 = main_term_1(r, 5, 500, PREC).unwrap();
        assert!(Float::with_val(PREC, m1.abs_ref()) <= main_term_1_bound(5, 500, PREC).unwrap());
    }
    assert!(main_term_2_bound(5, 500, PREC).unwrap().is_none());
    let m2 = main_term_2(3, 13, 800, PREC).unwrap();
    let b2 = main_term_2_bound(13, 800, PREC).unwrap().unwrap();
    assert!(Float::with_val(PREC, m2.abs_ref()) <= b2);
}

// n = 1, Q = 11: only k = 1, where D reduces to sin(πa/c). Recomputed here in f64.
#[test]
fn second_main_term_at_n_one() {
    let q = 11i64;
    let mu = 23f64.sqrt();
    let pi = std::f64::consts::PI;
    for r in 0..q {
        let mut re = 0.0;
        for j in 1..q {
            let x = j as f64 / q as f64;
            let mut inner = 0.0;
            for s in 0..q {
                let s = s as f64;
                let plus = -(0.5 + s) * x + x * x / 2.0 + 1.0 / 24.0;
                let minus = x / 2.0 + x * x / 2.0 - 23.0 / 24.0 - s * (1.0 - x);
                for d in [plus, minus] {
                    if d > 0.0 {
                        inner += (pi * x).sin() * ((24.0 * d).sqrt() * pi * mu / 6.0).sinh();
                    }
                }
            }
            let angle = -2.0 * pi * (r * j) as f64 / q as f64;
            re += angle.cos() * 8.0 * 3f64.sqrt() / mu * inner;
        }
        re /= q as f64;
        let got = main_term_2(r, q, 1, PREC).unwrap();
        assert!(
            (got.real().to_f64() - re).abs() < 1e-12 * re.abs().max(1e-3),
            "r={r}"
        );
        assert!(got.imag().to_f64().abs() < 1e-30);
    }
}

#[test]
fn lehmer_and_hardy_ramanujan() {
    let p = partition_counts(5000);
    for n in [2usize, 100, 1000, 5000] {
        let (lo, hi) = lehmer_bounds(n as i64, PREC).unwrap();
        assert!(lo < p[n] && p[n] < hi);
    }
    assert_eq!(p[100], 190569292u64);
    let ratio = |n: usize| {
        (Float::with_val(PREC, &p[n]) / hardy_ramanujan_estimate(n as i64, PREC).unwrap()).to_f64()
    };
    assert!((0.9..=1.1).contains(&ratio(500)));
    assert!((0.95..=1.05).contains(&ratio(5000)));
    let mut prev = hardy_ramanujan_estimate(1, 64).unwrap();
    for n in 2..=10_000 {
        let cur = hardy_ramanujan_estimate(n, 64).unwrap();
        assert!(cur > prev, "n={n}");
        prev = cur;
    }
}

#[test]
fn refined_bound_is_dominated() {
    for q in (3..=13i64).step_by(2) {
        for n in (300..=3000i64).step_by(300) {
            let refined = refined_three_term_bound(q, &Integer::from(n), PREC).unwrap();
            let merged = theorem1_bound(q, n, PREC).unwrap();
            assert!(refined.total.ln() <= merged.ln(), "Q={q} n={n}");
        }
    }
}

#[test]
fn huge_n_stays_in_log_space() {
    let n = Integer::from(Integer::u_pow_u(10, 80));
    let b = cranklab::asymptotic::theorem1_bound_big(11, &n, PREC).unwrap();
    assert!(b.ln().is_finite() && *b.ln() < -1e30);
}
