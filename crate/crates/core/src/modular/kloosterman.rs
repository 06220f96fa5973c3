//! The Kloosterman-type sums B̃_{a,c,k}(n, m) and D_{a,c,k}(m, n) attached to
//! the crank generating function at w = e^{2πi a/c}.

use rug::{Complex, Float, Integer, Rational};

use super::dedekind::{dedekind_sum, h_prime, h_prime_modulus};
use super::params::SumParams;
use crate::error::{CrankError, Result};
use crate::hp::{cis_pi, sin_pi};

/// Representative of h′ used inside the sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum HPrimeChoice {
    /// Least non-negative solution of the congruence.
    #[default]
    LeastNonNegative,
    /// The least solution shifted up by one period of the congruence.
    Shifted,
}

impl HPrimeChoice {
    fn pick(self, h: i64, k: i64) -> Result<i64> {
        let base = h_prime(h, k)?;
        Ok(match self {
            HPrimeChoice::LeastNonNegative => base,
            HPrimeChoice::Shifted => base + h_prime_modulus(k),
        })
    }
}

fn units(k: i64) -> impl Iterator<Item = i64> {
    (0..k).filter(move |&h| Integer::from(h).gcd(&Integer::from(k)) == 1)
}

fn parity_sign(e: i64) -> i32 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// B̃_{a,c,k}(n, m) =
/// (−1)^{ak+1} sin(πa/c) Σ_h ω_{h,k} / sin(πah′/c) · e^{−πi a²k₁h′/c} e^{2πi(nh + mh′)/k}.
pub fn b_tilde(a: i64, c: i64, k: i64, n: i64, m: i64, prec: u32) -> Result<Complex> {
    b_tilde_with(a, c, k, n, m, prec, HPrimeChoice::default())
}

pub fn b_tilde_with(
    a: i64,
    c: i64,
    k: i64,
    n: i64,
    m: i64,
    prec: u32,
    choice: HPrimeChoice,
) -> Result<Complex> {
    let p = SumParams::new(a, c, k)?;
    let wp = prec + 16;
    let mut acc = Complex::new(wp);
    for h in units(k) {
        let hp = choice.pick(h, k)?;
        let denom = sin_pi(&Rational::from((a * hp, c)), wp);
        if denom.is_zero() {
            return Err(CrankError::Singularity {
                a: a as u64,
                c: c as u64,
                k: k as u64,
                h: h as u64,
                h_prime: hp as u64,
            });
        }
        // all phases in units of π, combined exactly before rounding
        let phase = dedekind_sum(h, k)? - Rational::from((a * a * p.k1 * hp, c))
            + Rational::from((2 * (n * h + m * hp), k));
        let term = cis_pi(&phase, wp) / denom;
        acc += term;
    }
    let pref = sin_pi(&Rational::from((a, c)), wp) * parity_sign(a * k + 1);
    Ok(Complex::with_val(prec, acc * pref))
}

/// D_{a,c,k}(m, n) = (−1)^{ak+l} sin(πa/c) Σ_h ω_{h,k} e^{2πi(nh + mh′)/k}.
///
/// `h_coeff` multiplies h and `h_prime_coeff` multiplies h′ in the kernel; the
/// latter must be an integer.
pub fn d_sum(
    a: i64,
    c: i64,
    k: i64,
    h_coeff: i64,
    h_prime_coeff: &Rational,
    prec: u32,
) -> Result<Complex> {
    d_sum_with(
        a,
        c,
        k,
        h_coeff,
        h_prime_coeff,
        prec,
        HPrimeChoice::default(),
    )
}

pub fn d_sum_with(
    a: i64,
    c: i64,
    k: i64,
    h_coeff: i64,
    h_prime_coeff: &Rational,
    prec: u32,
    choice: HPrimeChoice,
) -> Result<Complex> {
    if *h_prime_coeff.denom() != 1 {
        return Err(CrankError::Integrality {
            value: h_prime_coeff.to_string(),
        });
    }
    let m = h_prime_coeff.numer().clone();
    let p = SumParams::new(a, c, k)?;
    let wp = prec + 16;
    let mut acc = Complex::new(wp);
    for h in units(k) {
        let hp = choice.pick(h, k)?;
        let kernel = Integer::from(h_coeff) * h + Integer::from(&m * hp);
        let phase = dedekind_sum(h, k)? + Rational::from((kernel * 2u32, Integer::from(k)));
        acc += cis_pi(&phase, wp);
    }
    let pref = sin_pi(&Rational::from((a, c)), wp) * parity_sign(a * k + p.l);
    Ok(Complex::with_val(prec, acc * pref))
}

/// |z| as a float.
pub fn modulus(z: &Complex) -> Float {
    Float::with_val(z.prec().0, z.abs_ref())
}

/// B̃ evaluated under both h′ conventions, with the absolute difference.
#[derive(Debug, Clone)]
pub struct Sensitivity {
    pub least: Complex,
    pub shifted: Complex,
    pub difference: Float,
}

pub fn b_tilde_sensitivity(
    a: i64,
    c: i64,
    k: i64,
    n: i64,
    m: i64,
    prec: u32,
) -> Result<Sensitivity> {
    let least = b_tilde_with(a, c, k, n, m, prec, HPrimeChoice::LeastNonNegative)?;
    let shifted = b_tilde_with(a, c, k, n, m, prec, HPrimeChoice::Shifted)?;
    let difference = modulus(&Complex::with_val(prec, &least - &shifted));
    Ok(Sensitivity {
        least,
        shifted,
        difference,
    })
}
