use rug::{Float, Rational};
use serde_json::json;

use super::VerificationReport;
use crate::asymptotic::{elementary_bounds_check, error_budget, BudgetCoefficients, BUDGET};
use crate::error::Result;
use crate::hp::sci_digits;

/// Coefficient identities of the merged error bound, the elementary
/// inequalities for each odd Q in `qs`, and total ≤ merged on `ns`.
pub fn verify_budget(qs: &[i64], ns: &[i64], prec: u32) -> Result<VerificationReport> {
    let mut failures = Vec::new();
    let mut margins = Vec::new();

    let q_sum = BUDGET.q_sum();
    let merged_q = BudgetCoefficients::exact(BUDGET.merged_q);
    if q_sum != merged_q {
        failures.push(json!({ "identity": "Q coefficient", "sum": q_sum.to_string() }));
    }
    let const_sum = BUDGET.const_sum();
    let merged_const = BudgetCoefficients::exact(BUDGET.merged_const);
    if const_sum > merged_const {
        failures.push(json!({ "identity": "constant coefficient", "sum": const_sum.to_string() }));
    }
    margins.push(Float::with_val(
        prec,
        Rational::from(&merged_const - &const_sum),
    ));

    for &q in qs {
        let rep = elementary_bounds_check(q, prec)?;
        for c in rep.checks.iter().filter(|c| !c.holds) {
            failures.push(json!({ "Q": q, "inequality": c.name, "lhs": c.lhs, "rhs": c.rhs }));
        }
        for &n in ns {
            let b = error_budget(q, n, prec)?;
            let m = Float::with_val(prec, &b.merged - &b.total);
            if m < 0 {
                failures.push(json!({
                    "Q": q, "n": n,
                    "total": sci_digits(&b.total, 12),
                    "merged": sci_digits(&b.merged, 12),
                }));
            }
            margins.push(m);
        }
    }
    Ok(VerificationReport::new(
        "budget.bookkeeping",
        json!({ "Q": qs, "n": ns, "precision_bits": prec }),
        failures,
        margins,
        json!({
            "q_coefficient_sum": q_sum.to_string(),
            "constant_coefficient_sum": format!("{}", Float::with_val(64, &const_sum)),
        }),
    ))
}
