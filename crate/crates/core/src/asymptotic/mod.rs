//! Circle-method estimate of M(r, Q; n), effective error bounds, and the
//! classical envelopes for p(n).

mod bounds;
mod estimate;
mod main_terms;

pub use bounds::{
    elementary_bounds_check, error_budget, main_term_1_bound, main_term_2_bound,
    refined_three_term_bound, theorem1_bound, theorem1_bound_big, theorem1_exponent_factor,
    theorem1_radicand, BudgetCoefficients, ElementaryCheck, ElementaryReport, ErrorBudget,
    RefinedBound, BUDGET,
};
pub use estimate::{estimate_m, estimate_m_with_p, EstimateBreakdown};
pub use main_terms::{
    a_tilde_estimate, first_sum_inner, main_term_1, main_term_2, second_sum_inner,
    second_sum_terms, working_precision, SecondSumTerm,
};

use rug::{Float, Integer, Rational};

use crate::error::{domain, Result};
use crate::hp::{pi, LogReal};

/// μ(n) = √(24n − 1).
pub fn mu(n: i64, prec: u32) -> Result<Float> {
    if n < 1 {
        return domain(format!("mu(n) needs n >= 1, got {n}"));
    }
    Ok(Float::with_val(prec, 24 * n - 1).sqrt())
}

/// μ(n) for arbitrarily large n.
pub fn mu_big(n: &Integer, prec: u32) -> Result<Float> {
    if *n < 1 {
        return domain(format!("mu(n) needs n >= 1, got {n}"));
    }
    let arg = Integer::from(n * 24u32) - 1u32;
    Ok(Float::with_val(prec, &arg).sqrt())
}

/// δ₀ = 1/(2Q²) − 1/(2Q) + 1/24.
pub fn delta0(q: i64) -> Result<Rational> {
    if q < 2 {
        return domain(format!("delta0 needs Q >= 2, got {q}"));
    }
    Ok(Rational::from((1, 2 * q * q)) - Rational::from((1, 2 * q)) + Rational::from((1, 24)))
}

/// πμ(n)/6, the exponent scale shared by every envelope.
pub(crate) fn pi_mu_over_6(mu: &Float) -> Float {
    let prec = mu.prec();
    Float::with_val(prec, mu * pi(prec)) / 6u32
}

/// Lehmer's two-sided envelope √3/(12n)(1 ∓ 1/√n) e^{πμ(n)/6} for p(n).
pub fn lehmer_bounds(n: i64, prec: u32) -> Result<(Float, Float)> {
    if n < 2 {
        return domain(format!("Lehmer bounds need n >= 2, got {n}"));
    }
    let (lo, hi) = lehmer_log_bounds(n, prec)?;
    Ok((lo.to_float(), hi.to_float()))
}

/// The Lehmer envelope in log space.
pub fn lehmer_log_bounds(n: i64, prec: u32) -> Result<(LogReal, LogReal)> {
    if n < 2 {
        return domain(format!("Lehmer bounds need n >= 2, got {n}"));
    }
    let m = mu(n, prec)?;
    let inv_sqrt = Float::with_val(prec, n).sqrt().recip();
    let base = Float::with_val(prec, 3).sqrt() / Float::with_val(prec, 12 * n);
    let expo = pi_mu_over_6(&m);
    let ln_base = base.ln() + expo;
    let lo = Float::with_val(prec, 1 - inv_sqrt.clone()).ln();
    let hi = Float::with_val(prec, 1 + inv_sqrt).ln();
    Ok((
        LogReal::from_ln(Float::with_val(prec, &ln_base + lo)),
        LogReal::from_ln(ln_base + hi),
    ))
}

/// Leading Hardy-Ramanujan term e^{π√(2n/3)}/(4√3 n).
pub fn hardy_ramanujan_estimate(n: i64, prec: u32) -> Result<Float> {
    if n < 1 {
        return domain(format!("Hardy-Ramanujan estimate needs n >= 1, got {n}"));
    }
    let arg = (Float::with_val(prec, 2 * n) / 3u32).sqrt() * pi(prec);
    let den = Float::with_val(prec, 3).sqrt() * (4 * n);
    Ok(arg.exp() / den)
}
