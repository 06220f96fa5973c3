use std::fmt;
use std::ops::{Add, Mul};

use rug::Integer;

/// Integer combination Σ coeffs[j]·ζ^j of powers of a primitive Q-th root of
/// unity, stored in the group ring Z[x]/(x^Q − 1).
///
/// The stored coefficients are not unique (1 + ζ + ... + ζ^{Q-1} = 0 for a
/// primitive ζ); comparisons and integer extraction go through
/// [`CyclotomicInt::reduced`], the remainder modulo the Q-th cyclotomic
/// polynomial.
#[derive(Debug, Clone)]
pub struct CyclotomicInt {
    q: usize,
    coeffs: Vec<Integer>,
}

impl CyclotomicInt {
    pub fn zero(q: usize) -> Self {
        assert!(q >= 1, "modulus must be positive");
        CyclotomicInt {
            q,
            coeffs: vec![Integer::new(); q],
        }
    }

    pub fn from_integer(q: usize, value: Integer) -> Self {
        let mut z = Self::zero(q);
        z.coeffs[0] = value;
        z
    }

    /// ζ^e with e reduced modulo Q.
    pub fn root_power(q: usize, e: i64) -> Self {
        let mut z = Self::zero(q);
        z.coeffs[e.rem_euclid(q as i64) as usize] = Integer::from(1);
        z
    }

    pub fn from_coeffs(coeffs: Vec<Integer>) -> Self {
        assert!(!coeffs.is_empty(), "modulus must be positive");
        CyclotomicInt {
            q: coeffs.len(),
            coeffs,
        }
    }

    pub fn modulus(&self) -> usize {
        self.q
    }

    pub fn coeffs(&self) -> &[Integer] {
        &self.coeffs
    }

    /// Adds `value`·ζ^e in place.
    pub fn add_term(&mut self, e: i64, value: &Integer) {
        let idx = e.rem_euclid(self.q as i64) as usize;
        self.coeffs[idx] += value;
    }

    /// Multiplies by ζ^e.
    pub fn rotate(&self, e: i64) -> Self {
        let shift = e.rem_euclid(self.q as i64) as usize;
        let mut coeffs = vec![Integer::new(); self.q];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(i + shift) % self.q] = c.clone();
        }
        CyclotomicInt { q: self.q, coeffs }
    }

    /// Canonical form: the remainder modulo Φ_Q, of length φ(Q).
    pub fn reduced(&self) -> Vec<Integer> {
        let phi = cyclotomic_polynomial(self.q);
        let deg = phi.len() - 1;
        let mut rem = self.coeffs.clone();
        for i in (deg..rem.len()).rev() {
            if rem[i] == 0 {
                continue;
            }
            let lead = std::mem::take(&mut rem[i]);
            for (j, pj) in phi.iter().enumerate().take(deg) {
                if *pj != 0 {
                    rem[i - deg + j] -= Integer::from(&lead * pj);
                }
            }
        }
        rem.truncate(deg.max(1));
        rem
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|c| *c == 0)
    }

    /// The rational integer this element equals, if it is one.
    pub fn as_integer(&self) -> Option<Integer> {
        let r = self.reduced();
        if r.iter().skip(1).all(|c| *c == 0) {
            Some(r[0].clone())
        } else {
            None
        }
    }
}

impl PartialEq for CyclotomicInt {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.reduced() == other.reduced()
    }
}

impl Add for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn add(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.q, rhs.q, "mismatched cyclotomic moduli");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| Integer::from(a + b))
            .collect();
        CyclotomicInt { q: self.q, coeffs }
    }
}

impl Mul for &CyclotomicInt {
    type Output = CyclotomicInt;

    fn mul(self, rhs: &CyclotomicInt) -> CyclotomicInt {
        assert_eq!(self.q, rhs.q, "mismatched cyclotomic moduli");
        let q = self.q;
        let mut out = CyclotomicInt::zero(q);
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if *b != 0 {
                    out.coeffs[(i + j) % q] += Integer::from(a * b);
                }
            }
        }
        out
    }
}

impl fmt::Display for CyclotomicInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = self.reduced();
        let mut first = true;
        for (i, c) in r.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*z")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Coefficients (ascending) of the n-th cyclotomic polynomial.
pub(crate) fn cyclotomic_polynomial(n: usize) -> Vec<Integer> {
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    let mut poly = vec![Integer::new(); n + 1];
    poly[0] = Integer::from(-1);
    poly[n] = Integer::from(1);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        poly = exact_div(&poly, &cyclotomic_polynomial(d));
    }
    poly
}

fn exact_div(num: &[Integer], den: &[Integer]) -> Vec<Integer> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![Integer::new(); num.len() - dn];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dn].clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= Integer::from(&c * dj);
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    quot
}
