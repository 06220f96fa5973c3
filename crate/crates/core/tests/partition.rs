use std::collections::BTreeSet;

use cranklab::partition::{
    build_crank_table, build_residue_table, crank_histogram, crank_value_set, enumerate_partitions,
    filter_reconstruct, partition_counts, rank_residue_counts, Partition,
};
use proptest::prelude::*;
use rug::Integer;

#[test]
fn histogram_matches_generating_function() {
    let table = build_crank_table(30, 500).unwrap();
    for n in 0..=30u64 {
        let hist = crank_histogram(n, 45).unwrap();
        for (m, count) in table.row(n as usize) {
            assert_eq!(*count, hist.get(&m).copied().unwrap_or(0), "n={n} m={m}");
        }
    }
}

#[test]
fn crank_row_one_is_patched() {
    let table = build_crank_table(3, 500).unwrap();
    let row: Vec<(i64, Integer)> = table
        .row(1)
        .filter(|(_, c)| **c != 0)
        .map(|(m, c)| (m, c.clone()))
        .collect();
    assert_eq!(row, vec![(-1, Integer::from(1))]);
}

#[test]
fn normalization() {
    let p = partition_counts(400);
    let crank = build_crank_table(400, 500).unwrap();
    for (n, pn) in p.iter().enumerate() {
        assert_eq!(crank.row_sum(n), *pn);
    }
    for q in [2u64, 3, 4, 9, 17] {
        let t = build_residue_table(q, 400, 5000).unwrap();
        for (n, pn) in p.iter().enumerate() {
            assert_eq!(t.row_sum(n), *pn, "Q={q} n={n}");
        }
    }
}

#[test]
fn filter_is_exact() {
    let crank = build_crank_table(100, 500).unwrap();
    for q in [3u64, 5, 7, 9, 11] {
        let t = build_residue_table(q, 100, 5000).unwrap();
        for n in 0..=100 {
            for r in 0..q {
                assert_eq!(
                    filter_reconstruct(r, q, n, &crank).unwrap(),
                    *t.get(r, n),
                    "Q={q} n={n} r={r}"
                );
            }
        }
    }
}

#[test]
fn value_sets() {
    for n in 6..=30i64 {
        let expected: BTreeSet<i64> = (-n..=n).filter(|m| m.abs() != n - 1).collect();
        assert_eq!(crank_value_set(n as u64, 45).unwrap(), expected);
    }
    // Below 6 the set is whatever enumeration says.
    for n in 1..=5u64 {
        let direct: BTreeSet<i64> = enumerate_partitions(n, 45)
            .unwrap()
            .iter()
            .map(|l| l.crank().unwrap())
            .collect();
        assert_eq!(crank_value_set(n, 45).unwrap(), direct);
    }
    assert_eq!(crank_value_set(1, 45).unwrap(), BTreeSet::from([-1]));
}

#[test]
fn rank_splits_five_and_seven() {
    for (q, off) in [(5u64, 4u64), (7, 5)] {
        for l in 0..=4 {
            let n = q * l + off;
            let counts = rank_residue_counts(q, n, 45).unwrap();
            let p = enumerate_partitions(n, 45).unwrap().len() as u64;
            assert!(counts.iter().all(|&c| c * q == p), "Q={q} n={n}");
        }
    }
}

#[test]
fn residue_examples() {
    let t = build_residue_table(5, 9, 5000).unwrap();
    assert!(t.row(4).iter().all(|c| *c == 1));
    assert!(t.row(9).iter().all(|c| *c == 6));
    let t = build_residue_table(3, 2, 5000).unwrap();
    assert_eq!(t.row(0), [1, 0, 0]);
}

#[test]
fn caps_are_enforced() {
    assert!(enumerate_partitions(46, 45).is_err());
    assert!(build_crank_table(501, 500).is_err());
    assert!(build_residue_table(3, 5001, 5000).is_err());
}

proptest! {
    #[test]
    fn crank_and_rank_of_random_partitions(parts in prop::collection::vec(1u64..12, 1..10)) {
        let p = Partition::new(parts).unwrap();
        let rank = p.rank().unwrap();
        prop_assert_eq!(rank, p.largest().unwrap() as i64 - p.len() as i64);
        let crank = p.crank().unwrap();
        if p.ones() == 0 {
            prop_assert_eq!(crank, p.largest().unwrap() as i64);
        } else {
            prop_assert_eq!(crank, p.parts_above_ones() as i64 - p.ones() as i64);
        }
        prop_assert!(crank.unsigned_abs() <= p.n());
    }
}
