//! Machine checks of the equidistribution, positivity and log-subadditivity
//! claims, the crank value-set lemma, and the classical congruences.
//!
//! Every check returns a [`VerificationReport`] whose status is `fail`
//! exactly when it lists counterexamples.

mod budget;
mod congruences;
mod constant;
mod equidistribution;
mod lemma;
mod positivity;
mod subadditivity;
mod sufficiency;

pub use budget::verify_budget;
pub use congruences::{
    verify_congruence_family, verify_ramanujan_congruences, CONGRUENCE_FAMILIES,
};
pub use constant::{compute_c_q, verify_c_q_bound};
pub use equidistribution::{deviation, verify_equidistribution};
pub use lemma::{lemma_witnesses, verify_lemma_value_set, Witness};
pub use positivity::{minimal_positive_n, positivity_threshold, verify_positivity};
pub use subadditivity::verify_log_subadditivity;
pub use sufficiency::{
    sufficiency_functions, t_closed_form, verify_q11_sufficiency_chain, verify_small_q_sufficiency,
    SufficiencyValues,
};

use std::io;
use std::path::Path;

use rug::Float;
use serde::Serialize;
use serde_json::Value;

use crate::hp::sci_digits;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Summary of the per-point margins (distance to failure; negative = fail).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Margins {
    pub min: Option<String>,
    pub max: Option<String>,
    pub median: Option<String>,
}

impl Margins {
    pub fn from_values(mut values: Vec<Float>) -> Self {
        if values.is_empty() {
            return Margins {
                min: None,
                max: None,
                median: None,
            };
        }
        values.sort_by(|a, b| a.partial_cmp(b).expect("margins are not NaN"));
        let fmt = |x: &Float| sci_digits(x, 12);
        Margins {
            min: Some(fmt(&values[0])),
            max: Some(fmt(&values[values.len() - 1])),
            median: Some(fmt(&values[values.len() / 2])),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub grid: Value,
    pub status: Status,
    pub counterexamples: Vec<Value>,
    pub margins: Margins,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
}

impl VerificationReport {
    pub fn new(
        claim_id: &str,
        grid: Value,
        counterexamples: Vec<Value>,
        margins: Vec<Float>,
        details: Value,
    ) -> Self {
        let status = if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            claim_id: claim_id.to_string(),
            grid,
            status,
            counterexamples,
            margins: Margins::from_values(margins),
            details,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn write_json(&self, path: &Path) -> io::Result<()> {
        let text = serde_json::to_string_pretty(self)?;
        std::fs::write(path, text + "\n")
    }

    /// Combine reports into one; fails if any part fails.
    pub fn merge(claim_id: &str, parts: Vec<VerificationReport>) -> Self {
        let grid = Value::Array(parts.iter().map(|p| p.grid.clone()).collect());
        let mut counterexamples = Vec::new();
        let mut details = Vec::new();
        for p in &parts {
            for c in &p.counterexamples {
                counterexamples.push(serde_json::json!({ "claim_id": p.claim_id, "point": c }));
            }
            details.push(serde_json::json!({
                "claim_id": p.claim_id,
                "status": p.status,
                "margins": p.margins,
                "details": p.details,
            }));
        }
        let status = if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationReport {
            claim_id: claim_id.to_string(),
            grid,
            status,
            counterexamples,
            margins: Margins::from_values(Vec::new()),
            details: Value::Array(details),
        }
    }
}
