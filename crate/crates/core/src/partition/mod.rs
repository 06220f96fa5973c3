//! Exact partition combinatorics: enumeration, crank and rank, p(n), and
//! exact crank counting tables.

mod cyclotomic;
mod tables;

pub use cyclotomic::CyclotomicInt;
pub use tables::{
    a_tilde_exact, build_crank_table, build_residue_table, crank_value_set, filter_reconstruct,
    CrankTable, ResidueTable,
};

use std::collections::BTreeSet;
use std::fmt;

use rug::Integer;

use crate::error::{domain, CrankError, Result};

/// Arbitrary-precision non-negative count.
pub type BigCount = Integer;

/// A partition stored as its parts in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return domain("partition parts must be positive");
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> Option<u64> {
        self.parts.first().copied()
    }

    /// o(λ): the number of parts equal to 1.
    pub fn ones(&self) -> u64 {
        self.parts.iter().rev().take_while(|&&p| p == 1).count() as u64
    }

    /// ν(λ): the number of parts strictly larger than o(λ).
    pub fn parts_above_ones(&self) -> u64 {
        let o = self.ones();
        self.parts.iter().take_while(|&&p| p > o).count() as u64
    }

    pub fn crank(&self) -> Result<i64> {
        crank(self)
    }

    pub fn rank(&self) -> Result<i64> {
        rank(self)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Andrews-Garvan crank: the largest part when there are no 1's, otherwise
/// ν(λ) − o(λ).
pub fn crank(lambda: &Partition) -> Result<i64> {
    let Some(largest) = lambda.largest() else {
        return domain("crank of the empty partition is undefined");
    };
    let o = lambda.ones();
    if o == 0 {
        Ok(largest as i64)
    } else {
        Ok(lambda.parts_above_ones() as i64 - o as i64)
    }
}

/// Dyson rank: largest part minus number of parts.
pub fn rank(lambda: &Partition) -> Result<i64> {
    let Some(largest) = lambda.largest() else {
        return domain("rank of the empty partition is undefined");
    };
    Ok(largest as i64 - lambda.len() as i64)
}

/// All partitions of `n` in reverse lexicographic order.
pub fn enumerate_partitions(n: u64, cap: u64) -> Result<Vec<Partition>> {
    if n > cap {
        return Err(CrankError::Capacity {
            what: "enumeration n",
            requested: n,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u64, max_part: u64, current: &mut Vec<u64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// p(0), ..., p(n_max) by Euler's pentagonal-number recurrence.
pub fn partition_counts(n_max: usize) -> Vec<BigCount> {
    let mut p: Vec<Integer> = Vec::with_capacity(n_max + 1);
    p.push(Integer::from(1));
    for i in 1..=n_max {
        let mut acc = Integer::new();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            if k % 2 == 1 {
                acc += &p[i - g1];
                if g2 <= i {
                    acc += &p[i - g2];
                }
            } else {
                acc -= &p[i - g1];
                if g2 <= i {
                    acc -= &p[i - g2];
                }
            }
        }
        p.push(acc);
    }
    p
}

pub fn partition_count(n: i64) -> Result<BigCount> {
    if n < 0 {
        return domain(format!("p(n) needs n >= 0, got {n}"));
    }
    let mut all = partition_counts(n as usize);
    Ok(all.pop().expect("table has n + 1 entries"))
}

/// Dyson rank counts N(r, Q; n) by enumeration.
pub fn rank_residue_counts(q: u64, n: u64, cap: u64) -> Result<Vec<u64>> {
    if q < 2 {
        return domain("modulus must be at least 2");
    }
    let mut counts = vec![0u64; q as usize];
    if n == 0 {
        counts[0] = 1;
        return Ok(counts);
    }
    for lambda in enumerate_partitions(n, cap)? {
        let r = rank(&lambda)?.rem_euclid(q as i64) as usize;
        counts[r] += 1;
    }
    Ok(counts)
}

/// Crank histogram of the partitions of `n` keyed by crank value.
pub fn crank_histogram(n: u64, cap: u64) -> Result<std::collections::BTreeMap<i64, u64>> {
    let mut hist = std::collections::BTreeMap::new();
    if n == 0 {
        hist.insert(0, 1);
        return Ok(hist);
    }
    for lambda in enumerate_partitions(n, cap)? {
        *hist.entry(crank(&lambda)?).or_insert(0) += 1;
    }
    Ok(hist)
}

pub(crate) fn crank_values_by_enumeration(n: u64, cap: u64) -> Result<BTreeSet<i64>> {
    Ok(crank_histogram(n, cap)?.into_keys().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small() {
        let zero = enumerate_partitions(0, 45).unwrap();
        assert_eq!(zero, vec![Partition::empty()]);

        let four = enumerate_partitions(4, 45).unwrap();
        let expected = vec![
            part(&[4]),
            part(&[3, 1]),
            part(&[2, 2]),
            part(&[2, 1, 1]),
            part(&[1, 1, 1, 1]),
        ];
        assert_eq!(four, expected);
        assert_eq!(enumerate_partitions(6, 45).unwrap().len(), 11);
    }

    #[test]
    fn enumeration_respects_cap() {
        let err = enumerate_partitions(46, 45).unwrap_err();
        assert!(matches!(err, CrankError::Capacity { requested: 46, .. }));
    }

    #[test]
    fn enumerated_partitions_are_valid() {
        for n in 0..=15 {
            for lambda in enumerate_partitions(n, 45).unwrap() {
                assert_eq!(lambda.n(), n);
                assert!(lambda.parts().windows(2).all(|w| w[0] >= w[1]));
                assert!(lambda.parts().iter().all(|&p| p >= 1));
            }
        }
    }

    #[test]
    fn crank_examples() {
        assert_eq!(crank(&part(&[3, 2])).unwrap(), 3);
        assert_eq!(crank(&part(&[1])).unwrap(), -1);
        assert_eq!(crank(&part(&[5, 2, 2, 1])).unwrap(), 2);
        assert_eq!(crank(&part(&[7, 1, 1, 1])).unwrap(), -2);
        assert!(crank(&Partition::empty()).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&part(&[3, 2])).unwrap(), 1);
        assert_eq!(rank(&part(&[1, 1, 1])).unwrap(), -2);
        for n in 1..20 {
            assert_eq!(rank(&part(&[n])).unwrap(), n as i64 - 1);
        }
        assert!(rank(&Partition::empty()).is_err());
    }

    #[test]
    fn new_sorts_and_rejects_zero() {
        assert_eq!(part(&[1, 2, 5, 2]).parts(), &[5, 2, 2, 1]);
        assert!(Partition::new(vec![0, 2]).is_err());
    }

    #[test]
    fn partition_count_values() {
        assert_eq!(partition_count(0).unwrap(), 1);
        assert_eq!(partition_count(4).unwrap(), 5);
        assert_eq!(partition_count(10).unwrap(), 42);
        assert_eq!(partition_count(100).unwrap(), 190_569_292u64);
        assert!(partition_count(-1).is_err());
    }

    #[test]
    fn pentagonal_matches_enumeration() {
        let p = partition_counts(30);
        for n in 0..=30u64 {
            let count = enumerate_partitions(n, 45).unwrap().len();
            assert_eq!(p[n as usize], count as u64, "p({n})");
        }
    }

    #[test]
    fn p_200_has_expected_digits() {
        // p(200) = 3972999029388
        assert_eq!(partition_count(200).unwrap(), 3_972_999_029_388u64);
    }

    #[test]
    fn rank_explains_five_and_seven() {
        for l in 0..=4u64 {
            let p5 = partition_count((5 * l + 4) as i64).unwrap();
            let counts = rank_residue_counts(5, 5 * l + 4, 45).unwrap();
            assert!(counts.iter().all(|&c| Integer::from(c) * 5u32 == p5));

            let p7 = partition_count((7 * l + 5) as i64).unwrap();
            let counts = rank_residue_counts(7, 7 * l + 5, 45).unwrap();
            assert!(counts.iter().all(|&c| Integer::from(c) * 7u32 == p7));
        }
    }

    #[test]
    fn crank_is_symmetric_by_enumeration() {
        for n in 2..=30 {
            let h = crank_histogram(n, 45).unwrap();
            for (&m, &c) in &h {
                assert_eq!(h.get(&-m).copied(), Some(c), "n={n} m={m}");
            }
        }
    }
}
