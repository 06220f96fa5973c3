use rug::ops::Pow;
use rug::{Float, Integer, Rational};
use serde_json::json;

use super::VerificationReport;
use crate::asymptotic::{theorem1_bound_big, theorem1_radicand};
use crate::error::{domain, Result};
use crate::hp::{decimal, pi, sci_digits, LogReal};

/// C_Q = 1.93·10⁵⁹·(40.93Q² + 6.292Q)⁸ / (π − π√(1 + 12(1/Q² − 1/Q)))²⁴ + 1.
pub fn compute_c_q(q: i64, prec: u32) -> Result<Float> {
    if q < 11 || q % 2 == 0 {
        return domain(format!("C_Q is defined for odd Q >= 11, got {q}"));
    }
    let wp = prec + 32;
    let base = decimal(wp, "40.93") * (q * q) + decimal(wp, "6.292") * q;
    let num = decimal(wp, "1.93e59") * base.pow(8u32);
    let rad = Float::with_val(wp, &theorem1_radicand(q)?).sqrt();
    let p = pi(wp);
    let den = Float::with_val(wp, &p - rad * &p).pow(24u32);
    Ok(Float::with_val(prec, num / den + 1u32))
}

/// At n = ⌈C_Q⌉ the effective bound is already below 1/(2Q).
pub fn verify_c_q_bound(qs: &[i64], prec: u32) -> Result<VerificationReport> {
    let mut failures = Vec::new();
    let mut margins = Vec::new();
    let mut rows = Vec::new();
    for &q in qs {
        let c = compute_c_q(q, prec)?;
        let n = c.to_integer_round(rug::float::Round::Up).expect("finite").0;
        let bound = theorem1_bound_big(q, &Integer::from(&n), prec)?;
        let half = LogReal::from_float(&Float::with_val(prec, Rational::from((1, 2 * q))));
        let margin = Float::with_val(prec, half.ln() - bound.ln());
        if bound >= half {
            failures.push(json!({ "Q": q, "ln_bound": sci_digits(bound.ln(), 20) }));
        }
        rows.push(json!({
            "Q": q,
            "C_Q": sci_digits(&c, 30),
            "ln_bound_at_C_Q": sci_digits(bound.ln(), 20),
            "ln_half_over_Q": sci_digits(half.ln(), 20),
        }));
        margins.push(margin);
    }
    Ok(VerificationReport::new(
        "positivity.c_q_bound",
        json!({ "Q": qs, "n": "ceil(C_Q)", "precision_bits": prec }),
        failures,
        margins,
        json!(rows),
    ))
}
