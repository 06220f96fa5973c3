use std::fmt;

use rug::{Integer, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Which of the two secondary-term families a parameter belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// (a, c, k) together with c₁ = c/(c,k), k₁ = k/(c,k) and l, the least
/// positive solution of l ≡ a·k₁ (mod c₁).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SumParams {
    pub a: i64,
    pub c: i64,
    pub k: i64,
    pub c1: i64,
    pub k1: i64,
    pub l: i64,
}

impl SumParams {
    pub fn new(a: i64, c: i64, k: i64) -> Result<Self> {
        if !(0 < a && a < c) {
            return domain(format!("need 0 < a < c, got a={a}, c={c}"));
        }
        if k < 1 {
            return domain(format!("need k >= 1, got {k}"));
        }
        let g = Integer::from(c)
            .gcd(&Integer::from(k))
            .to_i64()
            .expect("fits");
        let c1 = c / g;
        let k1 = k / g;
        // "least positive": a residue of 0 means l = c1 (so l = 1 when c1 = 1).
        let mut l = (a * k1).rem_euclid(c1);
        if l == 0 {
            l = c1;
        }
        Ok(SumParams { a, c, k, c1, k1, l })
    }
}

pub fn sum_params(a: i64, c: i64, k: i64) -> Result<SumParams> {
    SumParams::new(a, c, k)
}

/// δ^±_{a,c,k,r}.
pub fn delta(p: &SumParams, r: i64, sign: Sign) -> Rational {
    let x = Rational::from((p.l, p.c1));
    let x2 = Rational::from(&x * &x) / 2u32;
    match sign {
        Sign::Plus => {
            let lead = -(Rational::from((1, 2)) + r) * &x;
            lead + x2 + Rational::from((1, 24))
        }
        Sign::Minus => {
            let half = Rational::from(&x / 2u32);
            let tail = Rational::from(r) * (Rational::from(1) - &x);
            half + x2 - Rational::from((23, 24)) - tail
        }
    }
}

/// m^±_{a,c,k,r}; an integer whenever it is used as a Fourier index.
pub fn m_param(p: &SumParams, r: i64, sign: Sign) -> Rational {
    let (a, k1, c1, l, r) = (
        p.a as i128,
        p.k1 as i128,
        p.c1 as i128,
        p.l as i128,
        r as i128,
    );
    let ak1 = a * k1;
    let common = -ak1 * ak1 + 2 * l * ak1 - ak1 * c1 - l * l;
    let rest = match sign {
        Sign::Plus => l * c1 - 2 * ak1 * r * c1 + 2 * l * c1 * r,
        Sign::Minus => {
            2 * c1 * c1 * r - 2 * l * r * c1 + 2 * ak1 * r * c1 + 2 * l * c1 + 2 * c1 * c1
                - ak1 * c1
        }
    };
    Rational::from((Integer::from(common + rest), Integer::from(2 * c1 * c1)))
}
