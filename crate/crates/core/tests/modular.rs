use cranklab::asymptotic::delta0;
use cranklab::modular::{
    b_tilde, d_sum, dedekind_sum, dedekind_sum_direct, delta, modulus, omega, sum_params, Sign,
};
use rug::{Complex, Float, Rational};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn reciprocity() {
    for k in 2..=200i64 {
        for h in (1..k).filter(|&h| gcd(h, k) == 1) {
            let lhs = dedekind_sum(h, k).unwrap() + dedekind_sum(k, h).unwrap();
            let rhs =
                (Rational::from((h, k)) + Rational::from((k, h)) + Rational::from((1, h * k)))
                    / 12u32
                    - Rational::from((1, 4));
            assert_eq!(lhs, rhs, "h={h} k={k}");
        }
    }
}

#[test]
fn accelerated_matches_direct() {
    for k in (1..=500i64).step_by(7) {
        for h in (0..k).filter(|&h| gcd(h, k) == 1) {
            assert_eq!(
                dedekind_sum(h, k).unwrap(),
                dedekind_sum_direct(h, k).unwrap()
            );
        }
    }
    // Negative and large h reduce mod k.
    assert_eq!(dedekind_sum(-1, 5).unwrap(), -dedekind_sum(1, 5).unwrap());
    assert_eq!(dedekind_sum(13, 5).unwrap(), dedekind_sum(3, 5).unwrap());
}

#[test]
fn omega_one_third() {
    let w = omega(1, 3, 128).unwrap();
    let expected = Complex::with_val(
        128,
        (0, Float::with_val(128, rug::float::Constant::Pi) / 18u32),
    )
    .exp();
    assert!(modulus(&Complex::with_val(128, &w - &expected)) < 1e-35);
}

// The secondary parameters never exceed δ₀(Q) for reduced a/c with c ∤ k.
#[test]
fn delta_below_delta0() {
    for q in (3..=21i64).step_by(2) {
        let d0 = delta0(q).unwrap();
        assert!(d0 < Rational::from((1, 24)));
        for j in 1..q {
            let g = gcd(j, q);
            let (a, c) = (j / g, q / g);
            for k in (1..=50).filter(|k| k % c != 0) {
                let p = sum_params(a, c, k).unwrap();
                for r in 0..q {
                    for s in Sign::BOTH {
                        assert!(delta(&p, r, s) <= d0, "Q={q} j={j} k={k} r={r} {s}");
                    }
                }
            }
        }
    }
}

#[test]
fn b_tilde_precision_doubling() {
    for (a, c, k, n) in [(1i64, 3i64, 3i64, 0i64), (2, 5, 10, -37), (3, 7, 14, -250)] {
        let lo = b_tilde(a, c, k, n, 0, 128).unwrap();
        let hi = b_tilde(a, c, k, n, 0, 256).unwrap();
        let diff = modulus(&Complex::with_val(256, &hi - &lo));
        // (3,7,14,-250) cancels to zero, so compare against max(|B|, 1).
        let scale = modulus(&hi).max(&Float::with_val(256, 1));
        assert!(diff <= scale * Float::with_val(64, -64f64).exp2());
    }
}

#[test]
fn d_sum_at_k_one() {
    for c in [3i64, 5, 11] {
        for a in 1..c {
            let d = d_sum(a, c, 1, -7, &Rational::from(4), 128).unwrap();
            let s = Float::with_val(128, rug::float::Constant::Pi) * a / c;
            assert!(Float::with_val(128, d.real() - s.sin()).abs() < 1e-35);
            assert!(d.imag().clone().abs() < 1e-35);
        }
    }
}
