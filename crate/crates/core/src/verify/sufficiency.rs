use rug::{Float, Integer, Rational};
use serde_json::{json, Value};

use super::VerificationReport;
use crate::error::{domain, Result};
use crate::hp::{decimal, pi, sci_digits};

/// T_a(C), S_a(C), V_a(C), W_a(C).
#[derive(Debug, Clone)]
pub struct SufficiencyValues {
    pub t: Float,
    pub s: Float,
    pub v: Float,
    pub w: Float,
}

fn mu_real(x: &Float) -> Float {
    (Float::with_val(x.prec(), x * 24u32) - 1u32).sqrt()
}

/// 1.10213·10⁷ / 0.00306².
fn v_constant(prec: u32) -> Float {
    decimal(prec, "1.10213e7") / decimal(prec, "0.00306").square()
}

pub fn sufficiency_functions(a: u64, c: &Rational, q: i64, prec: u32) -> Result<SufficiencyValues> {
    if a < 2 {
        return domain(format!("sufficiency functions need a >= 2, got {a}"));
    }
    if *c < 1 {
        return domain(format!("sufficiency functions need C >= 1, got {c}"));
    }
    let af = Float::with_val(prec, a);
    let ca = Float::with_val(prec, Rational::from(c * Integer::from(a)));
    let sum = Float::with_val(prec, &af + &ca);
    let t = (mu_real(&af) + mu_real(&ca) - mu_real(&sum)) * pi(prec) / 6u32;
    let inv_sqrt = |x: &Float| x.clone().sqrt().recip();
    let s = (1 + inv_sqrt(&sum)) / ((1 - inv_sqrt(&af)) * (1 - inv_sqrt(&ca)));
    let ratio = Float::with_val(prec, &ca / Float::with_val(prec, Rational::from(c + 1u32)));
    let core = Float::with_val(prec, 3).sqrt() * 4u32 * ratio;
    let v = v_constant(prec) * &core;
    let w = core * (6 * q);
    Ok(SufficiencyValues { t, s, v, w })
}

/// (π/6)(16a − 1)/√(48a − 1), the closed form written for T_a(1).
pub fn t_closed_form(a: u64, prec: u32) -> Float {
    let num = Float::with_val(prec, 16 * a as u128 - 1);
    let den = Float::with_val(prec, 48 * a as u128 - 1).sqrt();
    num / den * pi(prec) / 6u32
}

/// T_a(1) > log(V bound) + log S_a(1) with the bound 1.10213·10⁷/0.00306²·4√3a.
pub fn verify_small_q_sufficiency(a_min: u64, a_max: u64, prec: u32) -> Result<VerificationReport> {
    if a_min < 2 || a_min > a_max {
        return domain(format!("need 2 <= a_min <= a_max, got {a_min}..={a_max}"));
    }
    let one = Rational::from(1);
    let mut failures = Vec::new();
    let mut margins = Vec::new();
    let mut last_failure = None;
    for a in a_min..=a_max {
        let vals = sufficiency_functions(a, &one, 3, prec)?;
        let v_bound = v_constant(prec) * Float::with_val(prec, 3).sqrt() * 4u32 * a;
        let rhs = v_bound.ln() + vals.s.ln();
        let margin = Float::with_val(prec, &vals.t - &rhs);
        if margin <= 0 {
            failures.push(json!({
                "a": a,
                "T": sci_digits(&vals.t, 12),
                "rhs": sci_digits(&rhs, 12),
            }));
            last_failure = Some(a);
        }
        margins.push(margin);
    }
    let holds_from = match last_failure {
        Some(a) if a == a_max => Value::Null,
        Some(a) => json!(a + 1),
        None => json!(a_min),
    };
    Ok(VerificationReport::new(
        "sufficiency.small_q",
        json!({ "a_min": a_min, "a_max": a_max, "C": 1 }),
        failures,
        margins,
        json!({ "holds_from_a": holds_from }),
    ))
}

/// Each written link of the Q ≥ 11 chain at sampled a ≥ (432Q)²:
/// T_a(1) > log(24√3Qa) + log S_a(1);
/// log S_a(1) ≤ log S_2(1);
/// log(24√3Qa) + log S_2(1) < log(432Qa);
/// T_a(1) > 2 log a ≥ log a + 2 log(432Q) > log(432Qa).
/// The closed form (π/6)(16a−1)/√(48a−1) is reported beside T_a(1), not
/// identified with it.
pub fn verify_q11_sufficiency_chain(
    q: i64,
    samples: &[u64],
    prec: u32,
) -> Result<VerificationReport> {
    if q < 11 || q % 2 == 0 {
        return domain(format!("the chain is stated for odd Q >= 11, got {q}"));
    }
    let start = (432 * q as u64).pow(2);
    let one = Rational::from(1);
    let ln = |x: Float| x.ln();
    let mut failures = Vec::new();
    let mut margins = Vec::new();
    let mut rows = Vec::new();
    let s2 = sufficiency_functions(2, &one, q, prec)?.s;
    for &a in samples {
        if a < start {
            return domain(format!(
                "chain samples need a >= (432Q)^2 = {start}, got {a}"
            ));
        }
        let vals = sufficiency_functions(a, &one, q, prec)?;
        let af = Float::with_val(prec, a);
        let log_a = ln(af.clone());
        let base = ln(Float::with_val(prec, 3).sqrt() * 24u32 * q * &af);
        let target = ln(Float::with_val(prec, 432 * q) * &af);
        let log_432q = ln(Float::with_val(prec, 432 * q));
        let two_log_a = Float::with_val(prec, &log_a * 2u32);
        let closed = t_closed_form(a, prec);

        let sum = Float::with_val(prec, &log_432q * 2u32) + &log_a;
        let links: [(&str, Float, Float); 6] = [
            (
                "T_a(1) > log(24sqrt3 Qa) + log S_a(1)",
                vals.t.clone(),
                Float::with_val(prec, &base + ln(vals.s.clone())),
            ),
            ("S_a(1) <= S_2(1)", ln(s2.clone()), ln(vals.s.clone())),
            (
                "log(24sqrt3 Qa) + log S_2(1) < log(432Qa)",
                target.clone(),
                Float::with_val(prec, &base + ln(s2.clone())),
            ),
            ("T_a(1) > 2 log a", vals.t.clone(), two_log_a.clone()),
            (
                "2 log a >= log a + 2 log(432Q)",
                two_log_a.clone(),
                sum.clone(),
            ),
            ("log a + 2 log(432Q) > log(432Qa)", sum, target.clone()),
        ];
        // The second and fifth links are non-strict.
        for (name, big, small) in links {
            let margin = Float::with_val(prec, &big - &small);
            let non_strict = name.contains(">=") || name.contains("<=");
            let ok = if non_strict { margin >= 0 } else { margin > 0 };
            if !ok {
                failures.push(json!({
                    "a": a,
                    "link": name,
                    "lhs": sci_digits(&small, 12),
                    "rhs": sci_digits(&big, 12),
                }));
            }
            margins.push(margin);
        }
        rows.push(json!({
            "a": a,
            "T_from_mu": sci_digits(&vals.t, 20),
            "T_closed_form": sci_digits(&closed, 20),
            "closed_form_exceeds_2log_a": closed > two_log_a,
        }));
    }
    Ok(VerificationReport::new(
        "sufficiency.large_q_chain",
        json!({ "Q": q, "a": samples }),
        failures,
        margins,
        json!({
            "S_2": sci_digits(&s2, 20),
            "constant_24sqrt3_S_2": sci_digits(&(Float::with_val(prec, 3).sqrt() * 24u32 * &s2), 12),
            "samples": rows,
        }),
    ))
}
