use std::collections::BTreeSet;

use serde_json::{json, Value};

use super::VerificationReport;
use crate::config::Config;
use crate::error::{domain, Result};
use crate::partition::{crank_value_set, Partition};

/// An explicit partition with its expected crank.
#[derive(Debug, Clone)]
pub struct Witness {
    pub partition: Partition,
    pub expected: i64,
}

/// The constructions realizing cranks 2, 1, 0, −1, −2 for n ≥ 7, plus the two
/// special partitions 2+2+2 and 2+2+1+1 at n = 6.
pub fn lemma_witnesses(n: u64) -> Result<Vec<Witness>> {
    let mk = |parts: Vec<u64>, expected| -> Result<Witness> {
        Ok(Witness {
            partition: Partition::new(parts)?,
            expected,
        })
    };
    if n == 6 {
        return Ok(vec![mk(vec![2, 2, 2], 2)?, mk(vec![2, 2, 1, 1], -2)?]);
    }
    if n < 7 {
        return domain(format!("witnesses need n >= 6, got {n}"));
    }
    Ok(vec![
        mk(vec![n - 5, 2, 2, 1], 2)?,
        mk(vec![n - 3, 2, 1], 1)?,
        mk(vec![n - 1, 1], 0)?,
        mk(vec![n - 2, 1, 1], -1)?,
        mk(vec![n - 3, 1, 1, 1], -2)?,
    ])
}

fn expected_set(n: i64) -> BTreeSet<i64> {
    (-n..=n).filter(|&m| m != n - 1 && m != 1 - n).collect()
}

/// Crank values of n are exactly [−n, n] without ±(n−1), for n_min..=n_max.
pub fn verify_lemma_value_set(n_min: u64, n_max: u64, cfg: &Config) -> Result<VerificationReport> {
    if n_min < 6 {
        return domain(format!(
            "the value-set lemma needs n >= 6, got n_min = {n_min}"
        ));
    }
    if n_min > n_max {
        return domain(format!("empty range {n_min}..={n_max}"));
    }
    let mut failures: Vec<Value> = Vec::new();
    let mut witness_count = 0;
    for n in n_min..=n_max {
        let found = crank_value_set(n, cfg.n_cap_enumeration)?;
        let expected = expected_set(n as i64);
        if found != expected {
            let missing: Vec<_> = expected.difference(&found).collect();
            let extra: Vec<_> = found.difference(&expected).collect();
            failures.push(json!({ "n": n, "missing": missing, "unexpected": extra }));
        }
        for w in lemma_witnesses(n)? {
            witness_count += 1;
            let c = w.partition.crank()?;
            if c != w.expected || w.partition.n() != n {
                failures.push(json!({
                    "n": n,
                    "witness": w.partition.to_string(),
                    "crank": c,
                    "expected": w.expected,
                }));
            }
        }
    }
    Ok(VerificationReport::new(
        "lemma.crank_value_set",
        json!({ "n_min": n_min, "n_max": n_max }),
        failures,
        Vec::new(),
        json!({ "witnesses_checked": witness_count }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_values() {
        let ws = lemma_witnesses(12).unwrap();
        assert_eq!(ws[2].partition.to_string(), "(11,1)");
        assert_eq!(ws[2].partition.crank().unwrap(), 0);
        for w in lemma_witnesses(6).unwrap() {
            assert_eq!(w.partition.crank().unwrap(), w.expected);
        }
        assert!(lemma_witnesses(5).is_err());
    }

    #[test]
    fn lemma_range() {
        let cfg = Config::default();
        assert!(verify_lemma_value_set(6, 25, &cfg).unwrap().passed());
        assert!(verify_lemma_value_set(5, 25, &cfg).is_err());
    }
}
