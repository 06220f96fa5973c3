use std::collections::BTreeSet;
use std::io::{self, Write};

use rug::Integer;

use super::cyclotomic::CyclotomicInt;
use super::{crank_values_by_enumeration, BigCount};
use crate::error::{domain, CrankError, Result};

/// Exact crank counts M(m, n) for 0 <= n <= n_max and -n <= m <= n.
///
/// Built by expanding
///
/// ```text
///   C(w, q) = prod_{k>=1} (1 - q^k) / ((1 - w q^k)(1 - w^{-1} q^k))
/// ```
///
/// as a truncated series. The product's q^1 coefficient is w + w^{-1} - 1,
/// which is not a crank count; row 1 is replaced by M(-1, 1) = 1. Every
/// other row of the product is the crank distribution.
#[derive(Debug, Clone, PartialEq)]
pub struct CrankTable {
    n_max: usize,
    // rows[n][m + n]
    rows: Vec<Vec<Integer>>,
}

impl CrankTable {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// M(m, n); zero outside |m| <= n.
    pub fn get(&self, m: i64, n: usize) -> &Integer {
        static ZERO: Integer = Integer::ZERO;
        let row = &self.rows[n];
        let idx = m + n as i64;
        if idx < 0 || idx as usize >= row.len() {
            &ZERO
        } else {
            &row[idx as usize]
        }
    }

    /// Iterates (m, M(m, n)) over -n..=n.
    pub fn row(&self, n: usize) -> impl Iterator<Item = (i64, &Integer)> + '_ {
        self.rows[n]
            .iter()
            .enumerate()
            .map(move |(i, c)| (i as i64 - n as i64, c))
    }

    pub fn row_sum(&self, n: usize) -> Integer {
        self.rows[n].iter().sum()
    }

    /// Σ_{m ≡ r (mod q)} M(m, n) for every r.
    pub fn residue_counts(&self, q: u64, n: usize) -> Vec<Integer> {
        let mut out = vec![Integer::new(); q as usize];
        for (m, c) in self.row(n) {
            out[m.rem_euclid(q as i64) as usize] += c;
        }
        out
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "n,m,count")?;
        for n in 0..=self.n_max {
            for (m, c) in self.row(n) {
                writeln!(w, "{n},{m},{c}")?;
            }
        }
        Ok(())
    }
}

pub fn build_crank_table(n_max: usize, cap: u64) -> Result<CrankTable> {
    if n_max as u64 > cap {
        return Err(CrankError::Capacity {
            what: "crank table n_max",
            requested: n_max as u64,
            cap,
        });
    }
    let mut rows: Vec<Vec<Integer>> = (0..=n_max)
        .map(|n| vec![Integer::new(); 2 * n + 1])
        .collect();
    rows[0][0] = Integer::from(1);

    for k in 1..=n_max {
        // times (1 - q^k)
        for n in (k..=n_max).rev() {
            let (lo, hi) = rows.split_at_mut(n);
            let src = &lo[n - k];
            let dst = &mut hi[0];
            let shift = k;
            for (i, c) in src.iter().enumerate() {
                if *c != 0 {
                    dst[i + shift] -= c;
                }
            }
        }
        // divide by (1 - w q^k), then by (1 - w^{-1} q^k)
        for dm in [1i64, -1] {
            for n in k..=n_max {
                let (lo, hi) = rows.split_at_mut(n);
                let src = &lo[n - k];
                let dst = &mut hi[0];
                for (i, c) in src.iter().enumerate() {
                    if *c != 0 {
                        // src index i is m = i - (n - k); dst index is m + dm + n
                        let j = (i as i64 + k as i64 + dm) as usize;
                        dst[j] += c;
                    }
                }
            }
        }
    }

    if n_max >= 1 {
        rows[1] = vec![Integer::from(1), Integer::new(), Integer::new()];
    }
    Ok(CrankTable { n_max, rows })
}

/// Exact M(r, Q; n) for 0 <= r < Q and 0 <= n <= n_max.
///
/// The same product is expanded with w-exponents reduced modulo Q, so memory
/// is O(n_max · Q) instead of O(n_max²).
#[derive(Debug, Clone, PartialEq)]
pub struct ResidueTable {
    q: u64,
    n_max: usize,
    // rows[n][r]
    rows: Vec<Vec<Integer>>,
}

impl ResidueTable {
    pub fn modulus(&self) -> u64 {
        self.q
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn get(&self, r: u64, n: usize) -> &Integer {
        &self.rows[n][r as usize]
    }

    pub fn row(&self, n: usize) -> &[Integer] {
        &self.rows[n]
    }

    pub fn row_sum(&self, n: usize) -> Integer {
        self.rows[n].iter().sum()
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "n,r,count")?;
        for (n, row) in self.rows.iter().enumerate() {
            for (r, c) in row.iter().enumerate() {
                writeln!(w, "{n},{r},{c}")?;
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .enumerate()
            .map(|(n, row)| {
                serde_json::json!({
                    "n": n,
                    "counts": row.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        serde_json::json!({ "Q": self.q, "n_max": self.n_max, "rows": rows })
    }
}

pub fn build_residue_table(q: u64, n_max: usize, cap: u64) -> Result<ResidueTable> {
    if q < 2 {
        return domain(format!("residue tables need Q >= 2, got {q}"));
    }
    if n_max as u64 > cap {
        return Err(CrankError::Capacity {
            what: "residue table n_max",
            requested: n_max as u64,
            cap,
        });
    }
    let qs = q as usize;
    let mut rows: Vec<Vec<Integer>> = vec![vec![Integer::new(); qs]; n_max + 1];
    rows[0][0] = Integer::from(1);

    for k in 1..=n_max {
        for n in (k..=n_max).rev() {
            let (lo, hi) = rows.split_at_mut(n);
            for (d, s) in hi[0].iter_mut().zip(&lo[n - k]) {
                if *s != 0 {
                    *d -= s;
                }
            }
        }
        for shift in [1, qs - 1] {
            for n in k..=n_max {
                let (lo, hi) = rows.split_at_mut(n);
                let src = &lo[n - k];
                let dst = &mut hi[0];
                for (r, s) in src.iter().enumerate() {
                    if *s != 0 {
                        dst[(r + shift) % qs] += s;
                    }
                }
            }
        }
    }

    if n_max >= 1 {
        let mut row = vec![Integer::new(); qs];
        row[qs - 1] = Integer::from(1);
        rows[1] = row;
    }
    Ok(ResidueTable { q, n_max, rows })
}

/// Ã(j/Q, n) = Σ_m M(m, n) ζ^{jm} with ζ a primitive Q-th root of unity.
pub fn a_tilde_exact(j: u64, q: u64, n: usize, table: &CrankTable) -> Result<CyclotomicInt> {
    if q < 1 || j >= q {
        return domain(format!("need 0 <= j < Q, got j={j}, Q={q}"));
    }
    if n > table.n_max() {
        return domain(format!(
            "n={n} is beyond the table (n_max={})",
            table.n_max()
        ));
    }
    let mut z = CyclotomicInt::zero(q as usize);
    for (m, c) in table.row(n) {
        if *c != 0 {
            z.add_term(j as i64 * m, c);
        }
    }
    Ok(z)
}

/// Recovers M(r, Q; n) from the Ã(j/Q, n) by the root-of-unity filter
/// (1/Q) Σ_j ζ^{-jr} Ã(j/Q, n), evaluated exactly.
pub fn filter_reconstruct(r: u64, q: u64, n: usize, table: &CrankTable) -> Result<BigCount> {
    if q < 2 || r >= q {
        return domain(format!("need 0 <= r < Q and Q >= 2, got r={r}, Q={q}"));
    }
    let mut acc = CyclotomicInt::zero(q as usize);
    for j in 0..q {
        let term = a_tilde_exact(j, q, n, table)?.rotate(-((j * r) as i64));
        acc = &acc + &term;
    }
    let Some(total) = acc.as_integer() else {
        return Err(CrankError::Consistency(format!(
            "filter sum for r={r}, Q={q}, n={n} is not rational: {acc}"
        )));
    };
    let (quot, rem) = total.div_rem(Integer::from(q));
    if rem != 0 {
        return Err(CrankError::Consistency(format!(
            "filter sum for r={r}, Q={q}, n={n} is not divisible by Q"
        )));
    }
    Ok(quot)
}

/// {crank(λ) : λ ⊢ n}, by enumeration.
pub fn crank_value_set(n: u64, cap: u64) -> Result<BTreeSet<i64>> {
    if n == 0 {
        return domain("crank is undefined for the empty partition");
    }
    crank_values_by_enumeration(n, cap)
}
