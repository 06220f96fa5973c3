//! Precision-managed real and complex values.
//!
//! Linear values are MPFR floats. Positive magnitudes that can leave even
//! MPFR's exponent range (bounds at n ~ 10^78) are carried as natural logs in
//! [`LogReal`].

use std::cmp::Ordering;
use std::fmt;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

pub type HpReal = Float;
pub type HpComplex = Complex;

pub fn pi(prec: u32) -> Float {
    Float::with_val(prec, Constant::Pi)
}

pub fn float(prec: u32, x: impl Into<f64>) -> Float {
    Float::with_val(prec, x.into())
}

pub fn from_rational(prec: u32, x: &Rational) -> Float {
    Float::with_val(prec, x)
}

/// Decimal literal such as "40.93" parsed exactly, then rounded once.
pub fn decimal(prec: u32, literal: &str) -> Float {
    let parsed = Float::parse(literal).expect("valid decimal literal");
    Float::with_val(prec, parsed)
}

/// x reduced to the interval [0, 2), exactly.
fn mod_two(x: &Rational) -> Rational {
    let two = Rational::from(2);
    let q = Rational::from(x / &two).floor();
    x.clone() - q * two
}

/// e^{iπx} for rational x. The argument is reduced modulo 2 before rounding.
pub fn cis_pi(x: &Rational, prec: u32) -> Complex {
    let red = mod_two(x);
    let angle = Float::with_val(prec, &red) * pi(prec);
    let (s, c) = angle.sin_cos(Float::new(prec));
    Complex::with_val(prec, (c, s))
}

/// sin(πx) for rational x; exactly zero at integers.
pub fn sin_pi(x: &Rational, prec: u32) -> Float {
    let red = mod_two(x);
    if *red.denom() == 1 {
        return Float::with_val(prec, 0);
    }
    (Float::with_val(prec, &red) * pi(prec)).sin()
}

/// Digits needed to print `prec` bits faithfully.
pub fn decimal_digits(prec: u32) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).ceil() as usize + 1
}

/// Scientific notation with an explicit exponent, e.g. "-1.25e3".
pub fn sci(x: &Float) -> String {
    sci_digits(x, decimal_digits(x.prec()))
}

pub fn sci_digits(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0e0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let s = format!("{:.*e}", digits.max(1), x);
    // MPFR prints "1.5e3"; make sure an exponent is always present.
    if s.contains('e') {
        s
    } else {
        format!("{s}e0")
    }
}

/// A positive real stored as its natural logarithm.
#[derive(Debug, Clone)]
pub struct LogReal {
    ln: Float,
}

impl LogReal {
    pub fn from_ln(ln: Float) -> Self {
        LogReal { ln }
    }

    pub fn from_float(x: &Float) -> Self {
        assert!(
            x.is_sign_positive() && !x.is_zero(),
            "LogReal needs a positive value"
        );
        LogReal { ln: x.clone().ln() }
    }

    pub fn from_integer(prec: u32, x: &Integer) -> Self {
        assert!(*x > 0, "LogReal needs a positive value");
        LogReal {
            ln: Float::with_val(prec, x).ln(),
        }
    }

    pub fn ln(&self) -> &Float {
        &self.ln
    }

    pub fn prec(&self) -> u32 {
        self.ln.prec()
    }

    /// The linear value; overflows to infinity or underflows to zero when out
    /// of MPFR's exponent range.
    pub fn to_float(&self) -> Float {
        self.ln.clone().exp()
    }

    pub fn mul(&self, other: &LogReal) -> LogReal {
        LogReal {
            ln: Float::with_val(self.prec(), &self.ln + &other.ln),
        }
    }

    pub fn div(&self, other: &LogReal) -> LogReal {
        LogReal {
            ln: Float::with_val(self.prec(), &self.ln - &other.ln),
        }
    }

    pub fn add(&self, other: &LogReal) -> LogReal {
        let (hi, lo) = if self.ln >= other.ln {
            (&self.ln, &other.ln)
        } else {
            (&other.ln, &self.ln)
        };
        let diff = Float::with_val(self.prec(), lo - hi).exp();
        LogReal {
            ln: Float::with_val(self.prec(), hi + diff.ln_1p()),
        }
    }

    pub fn powf(&self, e: &Float) -> LogReal {
        LogReal {
            ln: Float::with_val(self.prec(), &self.ln * e),
        }
    }

    /// log10 of the value.
    pub fn log10(&self) -> Float {
        let ln10 = Float::with_val(self.prec(), 10).ln();
        Float::with_val(self.prec(), &self.ln / ln10)
    }

    /// Decimal string "d.ddde±X" computed in log space.
    pub fn sci(&self, digits: usize) -> String {
        let l10 = self.log10();
        let exp = l10.clone().floor();
        let mant = Float::with_val(
            self.prec(),
            Float::with_val(self.prec(), &l10 - &exp).exp10(),
        );
        let exp_int = exp.to_integer().expect("finite exponent");
        let mut m = format!("{:.*}", digits.max(1), mant);
        let mut e = exp_int;
        // Rounding can push the mantissa to 10.
        if m.starts_with("10") {
            m = format!(
                "{:.*}",
                digits.max(1),
                Float::with_val(self.prec(), &mant / 10)
            );
            e += 1;
        }
        format!("{m}e{e}")
    }
}

impl PartialEq for LogReal {
    fn eq(&self, other: &Self) -> bool {
        self.ln == other.ln
    }
}

impl PartialOrd for LogReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.ln.partial_cmp(&other.ln)
    }
}

impl fmt::Display for LogReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sci(12))
    }
}

/// x^(num/den) for positive x.
pub fn pow_ratio(x: &Float, num: i32, den: i32) -> Float {
    let prec = x.prec();
    let e = Float::with_val(prec, num) / den;
    Float::with_val(prec, x.pow(&e))
}
