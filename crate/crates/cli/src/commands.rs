use cranklab::asymptotic::estimate_m;
use cranklab::config::Config;
use cranklab::hp::sci_digits;
use cranklab::partition::{build_crank_table, build_residue_table, Partition};
use cranklab::verify::{
    verify_budget, verify_c_q_bound, verify_equidistribution, verify_lemma_value_set,
    verify_log_subadditivity, verify_positivity, verify_q11_sufficiency_chain,
    verify_ramanujan_congruences, verify_small_q_sufficiency, VerificationReport,
};
use serde_json::json;

use crate::{Failure, Format, Output, Suite, VerifyArgs};

fn usage<T>(msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

pub fn stat(parts: &[i64], format: Format, out: &mut Output) -> Result<(), Failure> {
    if let Some(bad) = parts.iter().find(|&&p| p <= 0) {
        return usage(format!("parts must be positive integers, got {bad}"));
    }
    let lambda = Partition::new(parts.iter().map(|&p| p as u64).collect())?;
    let fields = [
        ("n", lambda.n() as i64),
        ("largest", lambda.largest().unwrap_or(0) as i64),
        ("length", lambda.len() as i64),
        ("ones", lambda.ones() as i64),
        ("parts_above_ones", lambda.parts_above_ones() as i64),
        ("crank", lambda.crank()?),
        ("rank", lambda.rank()?),
    ];
    match format {
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("partition".into(), json!(lambda.parts()));
            for (k, v) in fields {
                map.insert(k.into(), json!(v));
            }
            out.json(&serde_json::Value::Object(map))?;
        }
        Format::Text | Format::Csv => {
            let w = out.writer();
            writeln!(w, "partition: {lambda}")?;
            for (k, v) in fields {
                writeln!(w, "{k}: {v}")?;
            }
        }
    }
    Ok(())
}

pub fn table(
    q: i64,
    n_max: u64,
    crank: bool,
    format: Format,
    cfg: &Config,
    out: &mut Output,
) -> Result<(), Failure> {
    if crank {
        let t = build_crank_table(n_max as usize, cfg.n_cap_dense)?;
        return match format {
            Format::Csv => Ok(t.write_csv(out.writer())?),
            _ => usage("crank tables are only emitted as CSV"),
        };
    }
    if q < 2 {
        return usage(format!("residue tables need Q >= 2, got {q}"));
    }
    let t = build_residue_table(q as u64, n_max as usize, cfg.n_cap_residue)?;
    match format {
        Format::Csv => t.write_csv(out.writer())?,
        Format::Json => out.json(&t.to_json())?,
        Format::Text => usage("tables are emitted as csv or json")?,
    }
    Ok(())
}

pub fn estimate(r: i64, q: i64, n: i64, cfg: &Config, out: &mut Output) -> Result<(), Failure> {
    if q < 3 || q % 2 == 0 {
        return usage(format!(
            "the circle-method estimate and its error bound assume odd Q >= 3, got Q = {q}"
        ));
    }
    let e = estimate_m(r, q, n, cfg.precision_bits)?;
    let mut v = e.to_json();
    v["error_budget"] = e.error_budget.to_json();
    let rel_imag = e.relative_imag_residue();
    let realness_ok = rel_imag < cfg.realness_tolerance;
    v["realness_ok"] = json!(realness_ok);
    let log10 = e.total.clone().abs().log10();
    v["log10_total"] = json!(sci_digits(&log10, 12));
    if (n as u64) <= cfg.n_cap_residue {
        let t = build_residue_table(q as u64, n as usize, cfg.n_cap_residue)?;
        let exact = t.get(r as u64, n as usize);
        let residual = e.residual(exact);
        v["exact"] = json!(exact.to_string());
        v["residual"] = json!(sci_digits(&residual, 12));
        v["residual_within_budget"] = json!(residual <= e.error_budget.total);
    }
    out.json(&v)?;
    if !realness_ok {
        return Err(Failure::Runtime(format!(
            "imaginary residue {} exceeds the realness tolerance",
            sci_digits(&rel_imag, 6)
        )));
    }
    Ok(())
}

const CHAIN_SAMPLES: [u64; 3] = [100_000_000, 10_000_000_000, 1_000_000_000_000];

fn run_suite(args: &VerifyArgs, cfg: &Config) -> Result<VerificationReport, Failure> {
    let prec = cfg.precision_bits;
    let q = args.q.unwrap_or(3);
    let report = match args.suite {
        Suite::Equidistribution => verify_equidistribution(q, args.n_max.unwrap_or(2000), cfg)?,
        Suite::Positivity => {
            if q < 2 {
                return usage(format!("positivity needs Q >= 2, got {q}"));
            }
            let base = verify_positivity(q as u64, args.n_max.unwrap_or(40), cfg)?;
            if q >= 11 && q % 2 == 1 {
                VerificationReport::merge("positivity", vec![base, verify_c_q_bound(&[q], prec)?])
            } else {
                base
            }
        }
        Suite::Lemma => {
            verify_lemma_value_set(args.n_min.unwrap_or(6), args.n_max.unwrap_or(30), cfg)?
        }
        Suite::Subadditivity => {
            if q < 3 {
                return usage(format!("log-subadditivity needs odd Q >= 3, got {q}"));
            }
            let a_min = args.a_min.unwrap_or(396);
            let a_max = args.a_max.unwrap_or(600);
            let b_min = args.b_min.unwrap_or(a_min);
            let b_max = args.b_max.unwrap_or(a_max);
            verify_log_subadditivity(q as u64, a_min..=a_max, b_min..=b_max, cfg)?
        }
        Suite::Congruences => verify_ramanujan_congruences(args.l_max.unwrap_or(10), cfg)?,
        Suite::Budget => {
            let q_max = args.q_max.unwrap_or(101);
            let qs: Vec<i64> = (3..=q_max).step_by(2).collect();
            if qs.is_empty() {
                return usage(format!("--q-max must be at least 3, got {q_max}"));
            }
            verify_budget(&qs, &[2, 500, 1000, 2000], prec)?
        }
        Suite::Sufficiency => {
            if q < 11 {
                verify_small_q_sufficiency(
                    args.a_min.unwrap_or(396),
                    args.a_max.unwrap_or(2000),
                    prec,
                )?
            } else {
                let start = (432 * q as u64).pow(2);
                let mut samples = vec![start];
                samples.extend(CHAIN_SAMPLES.iter().filter(|&&a| a > start));
                verify_q11_sufficiency_chain(q, &samples, prec)?
            }
        }
    };
    Ok(report)
}

pub fn verify(args: &VerifyArgs, cfg: &Config, out: &mut Output) -> Result<(), Failure> {
    let report = run_suite(args, cfg)?;
    out.json(&report.to_json())?;
    let status = if report.passed() { "pass" } else { "fail" };
    eprintln!("{}: {status}", report.claim_id);
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}
