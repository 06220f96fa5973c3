use serde_json::{json, Value};

use super::VerificationReport;
use crate::config::Config;
use crate::error::{domain, Result};
use crate::partition::{build_residue_table, ResidueTable};

/// n from which every residue count stays positive through the table end.
pub fn minimal_positive_n(table: &ResidueTable) -> Option<usize> {
    let all_positive = |n: usize| table.row(n).iter().all(|c| *c > 0);
    let top = table.n_max();
    if !all_positive(top) {
        return None;
    }
    let mut n0 = top;
    while n0 > 0 && all_positive(n0 - 1) {
        n0 -= 1;
    }
    Some(n0)
}

/// The exact positivity threshold: (Q+1)/2 for odd Q ≥ 11, Q/2+2 for even
/// Q ≥ 8. Other moduli have no combinatorial threshold claim.
pub fn positivity_threshold(q: u64) -> Option<u64> {
    if q >= 11 && !q.is_multiple_of(2) {
        Some(q.div_ceil(2))
    } else if q >= 8 && q.is_multiple_of(2) {
        Some(q / 2 + 2)
    } else {
        None
    }
}

/// Below Q = 11 (odd) the claim is positivity for all n ≥ 263.
const SMALL_Q_START: usize = 263;

pub fn verify_positivity(q: u64, n_max: u64, cfg: &Config) -> Result<VerificationReport> {
    if q < 2 {
        return domain(format!("positivity needs Q >= 2, got {q}"));
    }
    let threshold = positivity_threshold(q);
    if let Some(t) = threshold {
        if n_max < t {
            return domain(format!(
                "n_max = {n_max} is below the threshold {t} for Q = {q}"
            ));
        }
    }
    let table = build_residue_table(q, n_max as usize, cfg.n_cap_residue)?;
    let n0 = minimal_positive_n(&table);
    let zero_residues = |n: usize| -> Vec<usize> {
        table
            .row(n)
            .iter()
            .enumerate()
            .filter(|(_, c)| **c == 0)
            .map(|(r, _)| r)
            .collect()
    };

    let mut failures: Vec<Value> = Vec::new();
    let mut details = json!({ "n0": n0, "threshold": threshold });
    match threshold {
        Some(t) => {
            if n0 != Some(t as usize) {
                failures.push(json!({ "expected_n0": t, "found_n0": n0 }));
            }
            if t > 0 {
                let below = t as usize - 1;
                details["zero_residues_below_threshold"] =
                    json!({ "n": below, "r": zero_residues(below) });
            }
        }
        None if q % 2 == 1 && q < 11 => {
            for n in SMALL_Q_START..=n_max as usize {
                let zeros = zero_residues(n);
                if !zeros.is_empty() {
                    failures.push(json!({ "n": n, "r": zeros }));
                }
            }
            details["checked_from"] = json!(SMALL_Q_START);
        }
        None => {}
    }
    Ok(VerificationReport::new(
        "positivity.threshold",
        json!({ "Q": q, "n_max": n_max }),
        failures,
        Vec::new(),
        details,
    ))
}
