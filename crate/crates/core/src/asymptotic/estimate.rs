use rug::{Float, Integer};

use super::bounds::{error_budget, ErrorBudget};
use super::main_terms::{main_terms_at, working_precision};
use crate::error::{domain, Result};
use crate::hp::sci;
use crate::partition::partition_count;

/// p(n)/Q + main term 1 + main term 2, with the error budget.
#[derive(Debug, Clone)]
pub struct EstimateBreakdown {
    pub r: i64,
    pub q: i64,
    pub n: i64,
    pub precision_bits: u32,
    pub p_over_q: Float,
    pub main1: Float,
    pub main2: Float,
    pub error_budget: ErrorBudget,
    pub total: Float,
    /// |Im(main1 + main2)|, discarded.
    pub imag_residue: Float,
}

impl EstimateBreakdown {
    /// imag_residue / |total|.
    pub fn relative_imag_residue(&self) -> Float {
        Float::with_val(
            self.precision_bits,
            &self.imag_residue / self.total.clone().abs(),
        )
    }

    /// |exact − total|.
    pub fn residual(&self, exact: &Integer) -> Float {
        Float::with_val(self.precision_bits, exact - &self.total).abs()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "r": self.r,
            "Q": self.q,
            "n": self.n,
            "p_over_Q": sci(&self.p_over_q),
            "main1": sci(&self.main1),
            "main2": sci(&self.main2),
            "error_bound": sci(&self.error_budget.total),
            "total": sci(&self.total),
            "imag_residue": sci(&self.imag_residue),
            "precision_bits": self.precision_bits,
        })
    }
}

/// Estimate of M(r, Q; n); computes p(n) exactly.
pub fn estimate_m(r: i64, q: i64, n: i64, prec: u32) -> Result<EstimateBreakdown> {
    if n < 2 {
        return domain(format!("estimate needs n >= 2, got {n}"));
    }
    let p = partition_count(n)?;
    estimate_m_with_p(r, q, n, &p, prec)
}

/// As [`estimate_m`] with p(n) supplied by the caller.
pub fn estimate_m_with_p(
    r: i64,
    q: i64,
    n: i64,
    p: &Integer,
    prec: u32,
) -> Result<EstimateBreakdown> {
    if n < 2 {
        return domain(format!("estimate needs n >= 2, got {n}"));
    }
    let wp = working_precision(n, prec);
    let (m1, m2) = main_terms_at(r, q, n, wp)?;
    let p_over_q = Float::with_val(wp, p) / q;
    let imag = Float::with_val(wp, m1.imag() + m2.imag()).abs();
    let total = Float::with_val(wp, &p_over_q + m1.real()) + m2.real();
    Ok(EstimateBreakdown {
        r,
        q,
        n,
        precision_bits: prec,
        p_over_q: Float::with_val(prec, p_over_q),
        main1: Float::with_val(prec, m1.real()),
        main2: Float::with_val(prec, m2.real()),
        error_budget: error_budget(q, n, prec)?,
        total: Float::with_val(prec, total),
        imag_residue: Float::with_val(prec, imag),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::build_residue_table;

    #[test]
    fn residual_q3_n500() {
        let table = build_residue_table(3, 500, 5000).unwrap();
        for r in 0..3 {
            let e = estimate_m(r, 3, 500, 256).unwrap();
            let res = e.residual(table.get(r as u64, 500));
            assert!(res < e.error_budget.total, "r={r} residual {res}");
            assert!(res < 1, "r={r} residual {res}");
            assert!(e.relative_imag_residue() < 1e-6);
        }
    }

    #[test]
    fn json_fields() {
        let e = estimate_m(1, 5, 300, 128).unwrap();
        let v = e.to_json();
        for key in [
            "p_over_Q",
            "main1",
            "main2",
            "error_bound",
            "total",
            "imag_residue",
        ] {
            assert!(v[key].as_str().unwrap().contains('e'), "{key}");
        }
        assert_eq!(v["precision_bits"], 128);
    }

    #[test]
    fn rejects_small_n() {
        assert!(estimate_m(0, 3, 1, 128).is_err());
    }
}
