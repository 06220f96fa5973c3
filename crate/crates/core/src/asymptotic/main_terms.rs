use rayon::prelude::*;
use rug::{Complex, Float, Integer, Rational};

use super::{mu, pi_mu_over_6};
use crate::error::{domain, Result};
use crate::hp::cis_pi;
use crate::modular::{b_tilde, d_sum, delta, m_param, sum_params, Sign};

/// Bits needed so that e^{πμ(n)/6}-sized terms keep `prec` bits after
/// cancellation: prec + ⌈πμ(n)/(6 ln 2)⌉ + 96.
pub fn working_precision(n: i64, prec: u32) -> u32 {
    let mu = (24.0 * n.max(1) as f64 - 1.0).sqrt();
    let magnitude = (std::f64::consts::PI * mu / (6.0 * std::f64::consts::LN_2)).ceil() as u32;
    prec + magnitude + 96
}

fn check_args(r: i64, q: i64, n: i64) -> Result<()> {
    if q < 3 || q % 2 == 0 {
        return domain(format!("main terms need odd Q >= 3, got {q}"));
    }
    if !(0..q).contains(&r) {
        return domain(format!("need 0 <= r < Q, got r={r}, Q={q}"));
    }
    if n < 1 {
        return domain(format!("main terms need n >= 1, got {n}"));
    }
    Ok(())
}

/// j/Q in lowest terms.
fn reduce(j: i64, q: i64) -> (i64, i64) {
    let g = Integer::from(j)
        .gcd(&Integer::from(q))
        .to_i64()
        .expect("fits");
    (j / g, q / g)
}

fn isqrt(n: i64) -> i64 {
    Integer::from(n).sqrt().to_i64().expect("fits")
}

fn sum_in_order(prec: u32, terms: Vec<Complex>) -> Complex {
    terms.into_iter().fold(Complex::new(prec), |acc, t| acc + t)
}

/// (4√3·i/μ) Σ_{c|k ≤ √n} B̃_{a,c,k}(−n,0)/√k · sinh(πμ/(6k)) for j/Q = a/c in
/// lowest terms.
pub fn first_sum_inner(j: i64, q: i64, n: i64, prec: u32) -> Result<Complex> {
    if !(0 < j && j < q) {
        return domain(format!("need 0 < j < Q, got j={j}, Q={q}"));
    }
    let (a, c) = reduce(j, q);
    let m = mu(n, prec)?;
    let scale = pi_mu_over_6(&m);
    let ks: Vec<i64> = (1..=isqrt(n) / c).map(|t| t * c).collect();
    let terms = ks
        .par_iter()
        .map(|&k| -> Result<Complex> {
            let b = b_tilde(a, c, k, -n, 0, prec)?;
            let arg = Float::with_val(prec, &scale / k);
            let w = arg.sinh() / Float::with_val(prec, k).sqrt();
            Ok(b * w)
        })
        .collect::<Result<Vec<_>>>()?;
    let s = sum_in_order(prec, terms);
    let pref = Float::with_val(prec, 3).sqrt() * 4u32 / m;
    Ok(s * Complex::with_val(prec, (0, pref)))
}

/// One surviving (k, s, ±) triple of the second sum.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondSumTerm {
    pub k: i64,
    pub s: i64,
    pub sign: Sign,
    pub delta: Rational,
    pub m: Rational,
}

/// The triples with δ > 0 over 1 ≤ k ≤ √n with c∤k, 0 ≤ s < c, for j/Q = a/c
/// in lowest terms. Ordered by k, then s, then + before −.
pub fn second_sum_terms(j: i64, q: i64, n: i64) -> Result<Vec<SecondSumTerm>> {
    if !(0 < j && j < q) {
        return domain(format!("need 0 < j < Q, got j={j}, Q={q}"));
    }
    let (a, c) = reduce(j, q);
    let mut out = Vec::new();
    for k in 1..=isqrt(n) {
        if k % c == 0 {
            continue;
        }
        let p = sum_params(a, c, k)?;
        for s in 0..c {
            for sign in Sign::BOTH {
                let d = delta(&p, s, sign);
                if d > 0 {
                    out.push(SecondSumTerm {
                        k,
                        s,
                        sign,
                        m: m_param(&p, s, sign),
                        delta: d,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// (8√3/μ) Σ D_{a,c,k}(−n, m)/√k · sinh(√(24δ)πμ/(6k)) over [`second_sum_terms`].
pub fn second_sum_inner(j: i64, q: i64, n: i64, prec: u32) -> Result<Complex> {
    let (a, c) = reduce(j, q);
    let triples = second_sum_terms(j, q, n)?;
    let m = mu(n, prec)?;
    let scale = pi_mu_over_6(&m);
    let terms = triples
        .par_iter()
        .map(|t| -> Result<Complex> {
            let d = d_sum(a, c, t.k, -n, &t.m, prec)?;
            let root = (Float::with_val(prec, &t.delta) * 24u32).sqrt();
            let arg = Float::with_val(prec, &scale * &root) / t.k;
            let w = arg.sinh() / Float::with_val(prec, t.k).sqrt();
            Ok(d * w)
        })
        .collect::<Result<Vec<_>>>()?;
    let s = sum_in_order(prec, terms);
    let pref = Float::with_val(prec, 3).sqrt() * 8u32 / m;
    Ok(s * pref)
}

/// Both main-term pieces of the estimate of Ã(j/Q, n).
pub fn a_tilde_estimate(j: i64, q: i64, n: i64, prec: u32) -> Result<(Complex, Complex)> {
    Ok((
        first_sum_inner(j, q, n, prec)?,
        second_sum_inner(j, q, n, prec)?,
    ))
}

/// (1/Q) Σ_j ζ^{−rj}·(inner_1, inner_2), at precision `wp`.
pub(crate) fn main_terms_at(r: i64, q: i64, n: i64, wp: u32) -> Result<(Complex, Complex)> {
    check_args(r, q, n)?;
    let mut first = Complex::new(wp);
    let mut second = Complex::new(wp);
    for j in 1..q {
        let (s1, s2) = a_tilde_estimate(j, q, n, wp)?;
        let z = cis_pi(&Rational::from((-2 * r * j, q)), wp);
        first += Complex::with_val(wp, &z * &s1);
        second += z * s2;
    }
    Ok((first / q, second / q))
}

/// Main term 1 of the estimate of M(r, Q; n).
pub fn main_term_1(r: i64, q: i64, n: i64, prec: u32) -> Result<Complex> {
    check_args(r, q, n)?;
    let wp = working_precision(n, prec);
    let mut acc = Complex::new(wp);
    for j in 1..q {
        let s1 = first_sum_inner(j, q, n, wp)?;
        acc += cis_pi(&Rational::from((-2 * r * j, q)), wp) * s1;
    }
    Ok(Complex::with_val(prec, acc / q))
}

/// Main term 2 of the estimate of M(r, Q; n).
pub fn main_term_2(r: i64, q: i64, n: i64, prec: u32) -> Result<Complex> {
    check_args(r, q, n)?;
    let wp = working_precision(n, prec);
    let mut acc = Complex::new(wp);
    for j in 1..q {
        let s2 = second_sum_inner(j, q, n, wp)?;
        acc += cis_pi(&Rational::from((-2 * r * j, q)), wp) * s2;
    }
    Ok(Complex::with_val(prec, acc / q))
}
