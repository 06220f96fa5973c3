use rayon::prelude::*;
use rug::{Float, Integer, Rational};
use serde_json::{json, Value};

use super::VerificationReport;
use crate::asymptotic::theorem1_bound;
use crate::config::Config;
use crate::error::{domain, Result};
use crate::hp::sci_digits;
use crate::partition::build_residue_table;

/// |M/p − 1/Q| exactly.
pub fn deviation(m: &Integer, p: &Integer, q: i64) -> Rational {
    let num = Integer::from(m * q) - p;
    Rational::from((num.abs(), Integer::from(p * q)))
}

struct Point {
    n: i64,
    bound: Float,
    max_dev: Float,
    failures: Vec<Value>,
    margins: Vec<Float>,
}

/// |M(r,Q;n)/p(n) − 1/Q| ≤ theorem bound for 2 ≤ n ≤ n_max and every r.
pub fn verify_equidistribution(q: i64, n_max: u64, cfg: &Config) -> Result<VerificationReport> {
    if q < 3 || q % 2 == 0 {
        return domain(format!("equidistribution bound needs odd Q >= 3, got {q}"));
    }
    let prec = cfg.precision_bits;
    let table = build_residue_table(q as u64, n_max as usize, cfg.n_cap_residue)?;
    let points = (2..=n_max as i64)
        .into_par_iter()
        .map(|n| -> Result<Point> {
            let bound = theorem1_bound(q, n, prec)?.to_float();
            let p = table.row_sum(n as usize);
            let mut failures = Vec::new();
            let mut margins = Vec::new();
            let mut max_dev = Float::new(prec);
            for (r, m) in table.row(n as usize).iter().enumerate() {
                let dev = Float::with_val(prec, &deviation(m, &p, q));
                if dev > bound {
                    failures.push(json!({
                        "n": n,
                        "r": r,
                        "deviation": sci_digits(&dev, 12),
                        "bound": sci_digits(&bound, 12),
                    }));
                }
                margins.push(Float::with_val(prec, &bound - &dev));
                if dev > max_dev {
                    max_dev = dev;
                }
            }
            Ok(Point {
                n,
                bound,
                max_dev,
                failures,
                margins,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let inv_q = Float::with_val(prec, Rational::from((1, q)));
    let first_nonvacuous = points.iter().find(|p| p.bound < inv_q).map(|p| p.n);
    let exact_points: Vec<i64> = points
        .iter()
        .filter(|p| p.max_dev.is_zero())
        .map(|p| p.n)
        .collect();
    let step = (n_max as i64 / 20).max(1);
    let decay: Vec<Value> = points
        .iter()
        .filter(|p| p.n % step == 0 || p.n == n_max as i64)
        .map(|p| json!({ "n": p.n, "max_deviation": sci_digits(&p.max_dev, 6), "bound": sci_digits(&p.bound, 6) }))
        .collect();

    let mut failures = Vec::new();
    let mut margins = Vec::new();
    for p in points {
        failures.extend(p.failures);
        margins.extend(p.margins);
    }
    Ok(VerificationReport::new(
        "equidistribution.bound",
        json!({ "Q": q, "n_min": 2, "n_max": n_max, "r": format!("0..{}", q - 1), "precision_bits": prec }),
        failures,
        margins,
        json!({
            "first_nonvacuous_n": first_nonvacuous,
            "exact_equidistribution_n": exact_points,
            "max_deviation_decay": decay,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deviation_exact() {
        assert_eq!(deviation(&Integer::from(1), &Integer::from(5), 5), 0);
        assert_eq!(
            deviation(&Integer::from(2), &Integer::from(3), 3),
            Rational::from((1, 3))
        );
    }

    #[test]
    fn small_grid_passes() {
        let cfg = Config::default();
        let rep = verify_equidistribution(3, 300, &cfg).unwrap();
        assert!(rep.passed(), "{:?}", rep.counterexamples);
        assert!(verify_equidistribution(4, 10, &cfg).is_err());
        let rep = verify_equidistribution(5, 10, &cfg).unwrap();
        let exact = rep.details["exact_equidistribution_n"].as_array().unwrap();
        assert!(exact.contains(&json!(4)) && exact.contains(&json!(9)));
    }
}
