use rug::{Float, Integer, Rational};
use serde::Serialize;

use super::{delta0, mu, mu_big, pi_mu_over_6};
use crate::error::{domain, Result};
use crate::hp::{decimal, pi, sci, sin_pi, LogReal};

/// Constants of the six-piece error budget, as decimal literals.
#[derive(Debug, Clone, Copy)]
pub struct BudgetCoefficients {
    pub s_err: &'static str,
    pub t_err_q: &'static str,
    pub t_err_const: &'static str,
    pub s1_err: &'static str,
    pub s2_err: &'static str,
    pub sigma1_i_err: &'static str,
    pub sigma2_i_err_q: &'static str,
    pub merged_q: &'static str,
    pub merged_const: &'static str,
}

pub const BUDGET: BudgetCoefficients = BudgetCoefficients {
    s_err: "330.9",
    t_err_q: "59071",
    t_err_const: "930.05",
    s1_err: "1059",
    s2_err: "22306",
    sigma1_i_err: "1965",
    sigma2_i_err_q: "113883",
    merged_q: "172954",
    merged_const: "26591",
};

impl BudgetCoefficients {
    /// A literal as an exact rational.
    pub fn exact(literal: &str) -> Rational {
        let (int, frac) = literal.split_once('.').unwrap_or((literal, ""));
        let digits = format!("{int}{frac}");
        let num: Integer = digits.parse().expect("decimal literal");
        let den = Integer::from(Integer::u_pow_u(10, frac.len() as u32));
        Rational::from((num, den))
    }

    /// Q-coefficients of the n^{1/4}, n^{3/8} and constant pieces summed.
    pub fn q_sum(&self) -> Rational {
        Self::exact(self.t_err_q) + Self::exact(self.sigma2_i_err_q)
    }

    /// Constant coefficients of the pieces summed.
    pub fn const_sum(&self) -> Rational {
        [
            self.s_err,
            self.t_err_const,
            self.s1_err,
            self.s2_err,
            self.sigma1_i_err,
        ]
        .iter()
        .map(|s| Self::exact(s))
        .fold(Rational::new(), |a, b| a + b)
    }
}

fn check_odd(q: i64) -> Result<()> {
    if q < 3 || q % 2 == 0 {
        return domain(format!("need odd Q >= 3, got {q}"));
    }
    Ok(())
}

fn root(n: &Float, num: i32, den: i32) -> Float {
    crate::hp::pow_ratio(n, num, den)
}

/// The six bounds for the error pieces of the estimate of M(r, Q; n).
#[derive(Debug, Clone)]
pub struct ErrorBudget {
    pub q: i64,
    pub n: i64,
    pub s_err: Float,
    pub t_err: Float,
    pub s1_err: Float,
    pub s2_err: Float,
    pub sigma1_i_err: Float,
    pub sigma2_i_err: Float,
    pub total: Float,
    /// (172954Q + 26591)·n^{3/8}.
    pub merged: Float,
}

impl ErrorBudget {
    pub fn pieces(&self) -> [(&'static str, &Float); 6] {
        [
            ("s_err", &self.s_err),
            ("t_err", &self.t_err),
            ("s1_err", &self.s1_err),
            ("s2_err", &self.s2_err),
            ("sigma1_i_err", &self.sigma1_i_err),
            ("sigma2_i_err", &self.sigma2_i_err),
        ]
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (name, v) in self.pieces() {
            map.insert(name.to_string(), sci(v).into());
        }
        map.insert("total".into(), sci(&self.total).into());
        map.insert("merged".into(), sci(&self.merged).into());
        serde_json::Value::Object(map)
    }
}

pub fn error_budget(q: i64, n: i64, prec: u32) -> Result<ErrorBudget> {
    check_odd(q)?;
    if n < 1 {
        return domain(format!("error budget needs n >= 1, got {n}"));
    }
    let c = |s: &str| decimal(prec, s);
    let nf = Float::with_val(prec, n);
    let quarter = root(&nf, 1, 4);
    let three_eighths = root(&nf, 3, 8);
    let s_err = c(BUDGET.s_err) * &quarter;
    let t_err = (c(BUDGET.t_err_q) * q + c(BUDGET.t_err_const)) * &quarter;
    let s1_err = c(BUDGET.s1_err) * &quarter;
    let s2_err = c(BUDGET.s2_err) * &quarter;
    let sigma1_i_err = c(BUDGET.sigma1_i_err) * &three_eighths;
    let sigma2_i_err = c(BUDGET.sigma2_i_err_q) * q;
    let total =
        Float::with_val(prec, &s_err + &t_err) + &s1_err + &s2_err + &sigma1_i_err + &sigma2_i_err;
    let merged = (c(BUDGET.merged_q) * q + c(BUDGET.merged_const)) * three_eighths;
    Ok(ErrorBudget {
        q,
        n,
        s_err,
        t_err,
        s1_err,
        s2_err,
        sigma1_i_err,
        sigma2_i_err,
        total,
        merged,
    })
}

/// 1 + 12(1/Q² − 1/Q), the radicand of the Q ≥ 11 exponent.
pub fn theorem1_radicand(q: i64) -> Result<Rational> {
    Ok(delta0(q)? * 24u32)
}

/// The factor e with |R| ≤ 10⁵(40.93Q + 6.292)·e^{−e·πμ/6}·n^{11/8}.
pub fn theorem1_exponent_factor(q: i64, prec: u32) -> Result<Float> {
    check_odd(q)?;
    if q < 11 {
        Ok(1 - Float::with_val(prec, Rational::from((1, q))))
    } else {
        let rad = Float::with_val(prec, &theorem1_radicand(q)?);
        Ok(1 - rad.sqrt())
    }
}

fn leading_constant(q: i64, prec: u32) -> Float {
    let inner = decimal(prec, "40.93") * q + decimal(prec, "6.292");
    inner * 100_000u32
}

/// The bound of the effective equidistribution theorem, in log space.
pub fn theorem1_bound(q: i64, n: i64, prec: u32) -> Result<LogReal> {
    theorem1_bound_big(q, &Integer::from(n), prec)
}

pub fn theorem1_bound_big(q: i64, n: &Integer, prec: u32) -> Result<LogReal> {
    check_odd(q)?;
    let m = mu_big(n, prec)?;
    let expo = theorem1_exponent_factor(q, prec)? * pi_mu_over_6(&m);
    let ln_n = Float::with_val(prec, n).ln();
    let ln = leading_constant(q, prec).ln() - expo + ln_n * Float::with_val(prec, 11) / 8u32;
    Ok(LogReal::from_ln(ln))
}

/// Per-j bound 0.8785·e^{πμ/(6Q)}·n^{1/4} on the first main-term sum.
pub fn main_term_1_bound(q: i64, n: i64, prec: u32) -> Result<Float> {
    check_odd(q)?;
    let m = mu(n, prec)?;
    let e = (pi_mu_over_6(&m) / q).exp();
    Ok(decimal(prec, "0.8785") * e * root(&Float::with_val(prec, n), 1, 4))
}

/// Per-j bound (0.1924Q + 3.464)·e^{√(24δ₀)πμ/6}·n^{1/4} on the second sum;
/// `None` when δ₀ ≤ 0, where the sum is empty.
pub fn main_term_2_bound(q: i64, n: i64, prec: u32) -> Result<Option<Float>> {
    check_odd(q)?;
    let d0 = delta0(q)?;
    if d0 <= 0 {
        return Ok(None);
    }
    let m = mu(n, prec)?;
    let root24 = (Float::with_val(prec, &d0) * 24u32).sqrt();
    let e = (pi_mu_over_6(&m) * root24).exp();
    let c = decimal(prec, "0.1924") * q + decimal(prec, "3.464");
    Ok(Some(c * e * root(&Float::with_val(prec, n), 1, 4)))
}

/// The pre-merge bound on |R(r, Q; n)|, term by term in log space.
#[derive(Debug, Clone)]
pub struct RefinedBound {
    pub terms: Vec<LogReal>,
    pub total: LogReal,
}

/// 20.79e^{(1/Q−1)πμ/6}n^{5/4} + (4.553Q+81.96)e^{(√(24δ₀)−1)πμ/6}n^{5/4} +
/// 10⁵(40.93Q+6.292)e^{−πμ/6}n^{11/8}. The middle term needs δ₀ > 0 and is
/// only included for Q ≥ 11.
pub fn refined_three_term_bound(q: i64, n: &Integer, prec: u32) -> Result<RefinedBound> {
    check_odd(q)?;
    let m = mu_big(n, prec)?;
    let scale = pi_mu_over_6(&m);
    let ln_n = Float::with_val(prec, n).ln();
    let five_quarters = Float::with_val(prec, &ln_n * 5u32) / 4u32;
    let eleven_eighths = Float::with_val(prec, &ln_n * 11u32) / 8u32;

    let mut terms = Vec::new();
    let f1 = Float::with_val(prec, Rational::from((1 - q, q)));
    let t1 = decimal(prec, "20.79").ln() + Float::with_val(prec, &f1 * &scale) + &five_quarters;
    terms.push(LogReal::from_ln(t1));
    if q >= 11 {
        let root24 = (Float::with_val(prec, &delta0(q)?) * 24u32).sqrt();
        let c = decimal(prec, "4.553") * q + decimal(prec, "81.96");
        let t2 = c.ln() + (root24 - 1u32) * &scale + &five_quarters;
        terms.push(LogReal::from_ln(t2));
    }
    let t3 = leading_constant(q, prec).ln() - scale + eleven_eighths;
    terms.push(LogReal::from_ln(t3));

    let mut total = terms[0].clone();
    for t in &terms[1..] {
        total = total.add(t);
    }
    Ok(RefinedBound { terms, total })
}

/// One elementary inequality lhs ≤ rhs.
#[derive(Debug, Clone, Serialize)]
pub struct ElementaryCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
    pub margin: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ElementaryReport {
    pub q: i64,
    pub checks: Vec<ElementaryCheck>,
}

impl ElementaryReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }
}

fn check(name: &str, lhs: Float, rhs: Float) -> ElementaryCheck {
    let margin = Float::with_val(lhs.prec(), &rhs - &lhs);
    ElementaryCheck {
        name: name.to_string(),
        holds: lhs <= rhs,
        lhs: sci(&lhs),
        rhs: sci(&rhs),
        margin: sci(&margin),
    }
}

/// The elementary estimates used when simplifying the error pieces.
pub fn elementary_bounds_check(q: i64, prec: u32) -> Result<ElementaryReport> {
    check_odd(q)?;
    let p = pi(prec);
    let qf = Float::with_val(prec, q);
    let mut checks = Vec::new();

    let half = Float::with_val(prec, (q - 1) / 2);
    let num = half.ln() + 1u32;
    let pi2 = Float::with_val(prec, p.square_ref());
    let den = Float::with_val(prec, 1 - pi2 / 24u32) * &p * &qf;
    checks.push(check(
        "(1+log((Q-1)/2))/(pi(1-pi^2/24)Q) <= 0.1902",
        num / den,
        decimal(prec, "0.1902"),
    ));

    let e1 = Float::with_val(prec, -Float::with_val(prec, &p / &qf)).exp();
    checks.push(check(
        "1/(1-e^(-pi/Q)) <= pi*Q",
        Float::with_val(prec, 1 - e1).recip(),
        Float::with_val(prec, &p * &qf),
    ));

    let e2 = Float::with_val(prec, -Float::with_val(prec, &p * 2u32) / &qf).exp();
    checks.push(check(
        "1/(1-e^(-2pi/Q)) <= 2pi*Q",
        Float::with_val(prec, 1 - e2).recip(),
        Float::with_val(prec, &p * &qf) * 2u32,
    ));

    let two54 = crate::hp::pow_ratio(&Float::with_val(prec, 2), 5, 4);
    checks.push(check(
        "4/3+2^(5/4) <= 3.712",
        Float::with_val(prec, Rational::from((4, 3))) + two54,
        decimal(prec, "3.712"),
    ));

    let max_sin = (1..q)
        .map(|j| sin_pi(&Rational::from((j, q)), prec).abs())
        .fold(Float::new(prec), |a, b| if b > a { b } else { a });
    checks.push(check(
        "max_j |sin(pi j/Q)| <= 1",
        max_sin,
        Float::with_val(prec, 1),
    ));

    let inv = Float::with_val(prec, 2).sqrt().recip();
    checks.push(check(
        "1/(1-1/sqrt(n)) <= 3.415 at n=2",
        Float::with_val(prec, 1 - inv).recip(),
        decimal(prec, "3.415"),
    ));

    Ok(ElementaryReport { q, checks })
}
