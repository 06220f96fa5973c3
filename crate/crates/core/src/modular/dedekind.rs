use rug::{Complex, Integer, Rational};

use crate::error::{domain, Result};
use crate::hp::cis_pi;

pub type ExactRational = Rational;

/// ((x)): x − ⌊x⌋ − 1/2 off the integers, 0 on them.
pub fn sawtooth(x: &Rational) -> Rational {
    if *x.denom() == 1 {
        return Rational::new();
    }
    let floor = Rational::from(x.floor_ref());
    x.clone() - floor - Rational::from((1, 2))
}

fn gcd(a: u64, b: u64) -> u64 {
    Integer::from(a)
        .gcd(&Integer::from(b))
        .to_u64()
        .expect("fits")
}

fn check(h: i64, k: i64) -> Result<u64> {
    if k < 1 {
        return domain(format!("Dedekind sum needs k >= 1, got {k}"));
    }
    let h = h.rem_euclid(k) as u64;
    if gcd(h, k as u64) != 1 {
        return domain(format!(
            "Dedekind sum needs gcd(h, k) = 1, got h={h}, k={k}"
        ));
    }
    Ok(h)
}

/// s(h, k) straight from the definition, O(k).
///
/// With ((u/k)) = (2u − k)/(2k) for 0 < u < k the sum is an integer over 4k².
pub fn dedekind_sum_direct(h: i64, k: i64) -> Result<Rational> {
    let h = check(h, k)? as i128;
    let k = k as i128;
    let mut acc: i128 = 0;
    for u in 1..k {
        let hu = (h * u) % k;
        if hu == 0 {
            continue;
        }
        acc += (2 * u - k) * (2 * hu - k);
    }
    Ok(Rational::from((
        Integer::from(acc),
        Integer::from(4 * k * k),
    )))
}

/// s(h, k) by the reciprocity law
/// s(h,k) + s(k,h) = −1/4 + (h/k + k/h + 1/(hk))/12, O(log k).
pub fn dedekind_sum(h: i64, k: i64) -> Result<Rational> {
    let mut h = Integer::from(check(h, k)?);
    let mut k = Integer::from(k);
    let mut acc = Rational::new();
    let mut sign = 1i32;
    while h != 0 {
        // s(h,k) = −s(k mod h, h) + (h/k + k/h + 1/(hk))/12 − 1/4
        let hk = Integer::from(&h * &k);
        let num = Integer::from(&h * &h) + Integer::from(&k * &k) + 1u32;
        let term = Rational::from((num, hk * 12u32)) - Rational::from((1, 4));
        if sign > 0 {
            acc += term;
        } else {
            acc -= term;
        }
        sign = -sign;
        let r = Integer::from(&k % &h);
        k = std::mem::replace(&mut h, r);
    }
    // s(0, 1) = 0 terminates the recursion.
    Ok(acc)
}

/// ω_{h,k} = e^{πi s(h,k)}.
pub fn omega(h: i64, k: i64, prec: u32) -> Result<Complex> {
    let s = dedekind_sum(h, k)?;
    Ok(cis_pi(&s, prec))
}

/// Least non-negative h′ with h·h′ ≡ −1 modulo k (k odd) or 2k (k even).
pub fn h_prime(h: i64, k: i64) -> Result<i64> {
    if k < 1 {
        return domain(format!("h' needs k >= 1, got {k}"));
    }
    let modulus = if k % 2 == 0 { 2 * k } else { k };
    if modulus == 1 {
        return Ok(0);
    }
    let hm = Integer::from(h.rem_euclid(modulus));
    let Ok(inv) = hm.invert(&Integer::from(modulus)) else {
        return domain(format!("h={h} is not invertible modulo {modulus}"));
    };
    let inv = inv.to_i64().expect("fits");
    Ok((modulus - inv).rem_euclid(modulus))
}

/// The h′ modulus: k for odd k, 2k for even k.
pub fn h_prime_modulus(k: i64) -> i64 {
    if k % 2 == 0 {
        2 * k
    } else {
        k
    }
}
