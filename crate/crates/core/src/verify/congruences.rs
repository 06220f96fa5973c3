use rug::{Float, Integer};
use serde_json::{json, Value};

use super::VerificationReport;
use crate::config::Config;
use crate::error::Result;
use crate::partition::build_residue_table;

/// (Q, offset) with p(Ql + offset) ≡ 0 (mod Q).
pub const CONGRUENCE_FAMILIES: [(u64, u64); 3] = [(5, 4), (7, 5), (11, 6)];

/// p(Ql + offset) ≡ 0 (mod Q) and M(r,Q;Ql+offset) = p(Ql+offset)/Q for all r
/// and 0 ≤ l ≤ l_max. Margins are |Q·M − p| (zero when the claim holds).
pub fn verify_congruence_family(
    q: u64,
    offset: u64,
    l_max: u64,
    cfg: &Config,
) -> Result<VerificationReport> {
    let n_top = (q * l_max + offset) as usize;
    let table = build_residue_table(q, n_top, cfg.n_cap_residue)?;
    let mut failures: Vec<Value> = Vec::new();
    let mut margins = Vec::new();
    for l in 0..=l_max {
        let n = (q * l + offset) as usize;
        let p = table.row_sum(n);
        if !p.is_divisible_u(q as u32) {
            failures.push(json!({ "l": l, "n": n, "p": p.to_string(), "p_mod_Q": Integer::from(&p % q).to_string() }));
        }
        for (r, m) in table.row(n).iter().enumerate() {
            let gap = Integer::from(m * q) - &p;
            if gap != 0 {
                failures.push(
                    json!({ "l": l, "n": n, "r": r, "count": m.to_string(), "p": p.to_string() }),
                );
            }
            margins.push(Float::with_val(64, gap.abs()));
        }
    }
    Ok(VerificationReport::new(
        &format!("congruence.mod{q}"),
        json!({ "Q": q, "n": format!("{q}l+{offset}"), "l_max": l_max }),
        failures,
        margins,
        Value::Null,
    ))
}

/// All three families with the same l_max.
pub fn verify_ramanujan_congruences(l_max: u64, cfg: &Config) -> Result<VerificationReport> {
    let parts = CONGRUENCE_FAMILIES
        .iter()
        .map(|&(q, off)| verify_congruence_family(q, off, l_max, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::merge("congruences", parts))
}
