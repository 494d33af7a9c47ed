mod common;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;
use spinchar::partitions::{colorings, enumerate_partitions, enumerate_pvf, Partition, PartitionKind, Pvf};

fn parts(v: &[Partition]) -> Vec<Vec<u32>> {
    v.iter().map(|p| p.parts().to_vec()).collect()
}

#[test]
fn frozen_enumerations() {
    assert_eq!(parts(&enumerate_partitions(4, PartitionKind::Strict)), vec![vec![4], vec![3, 1]]);
    assert_eq!(parts(&enumerate_partitions(4, PartitionKind::Odd)), vec![vec![3, 1], vec![1, 1, 1, 1]]);
    assert_eq!(enumerate_partitions(0, PartitionKind::All), vec![Partition::empty()]);
    for n in 0..=10 {
        assert_eq!(parts(&enumerate_partitions(n, PartitionKind::All)), common::partitions(n));
        assert_eq!(parts(&enumerate_partitions(n, PartitionKind::Strict)), common::strict_partitions(n));
        assert_eq!(parts(&enumerate_partitions(n, PartitionKind::Odd)), common::odd_partitions(n));
    }
}

#[test]
fn z_order_matches_counted_centralizers() {
    for (v, z) in [(vec![1, 1, 1], 6), (vec![2, 1], 2), (vec![3], 3)] {
        assert_eq!(Partition::new(v).unwrap().z_order(), BigInt::from(z));
    }
    for n in 1..=6 {
        for p in enumerate_partitions(n, PartitionKind::All) {
            assert_eq!(p.z_order(), BigInt::from(common::centralizer_by_count(p.parts())), "{p}");
        }
    }
}

#[test]
fn parity_examples() {
    for (v, e) in [(vec![2], 1), (vec![3], 0), (vec![3, 2], 1)] {
        assert_eq!(Partition::new(v).unwrap().parity(), e);
    }
}

#[test]
fn pvf_examples() {
    let strict = enumerate_pvf(2, 2, PartitionKind::Strict);
    let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
    let want: BTreeSet<Pvf> =
        [Pvf::single(0, p(&[2])), Pvf::single(1, p(&[2])), Pvf::from_entries([(0, p(&[1])), (1, p(&[1]))])].into();
    assert_eq!(strict.iter().cloned().collect::<BTreeSet<_>>(), want);
    assert_eq!(strict.len(), 3);
    assert_eq!(enumerate_pvf(0, 3, PartitionKind::All), vec![Pvf::empty()]);
    assert_eq!(enumerate_pvf(1, 2, PartitionKind::All).len(), 2);
    let f = Pvf::from_entries([(0, p(&[3, 1])), (1, p(&[2]))]);
    assert_eq!(f.underlying(), p(&[3, 2, 1]));
    assert_eq!(Pvf::empty().underlying(), Partition::empty());
    assert_eq!(Pvf::from_entries([(0, p(&[2])), (1, p(&[2]))]).underlying(), p(&[2, 2]));
    assert_eq!(colorings(&p(&[2, 1]), 2).len(), 4);
    assert_eq!(colorings(&p(&[1, 1]), 2).len(), 3);
    assert_eq!(colorings(&p(&[4, 2, 2, 1]), 1).len(), 1);
}

#[test]
fn strict_and_odd_counts_agree() {
    for n in 0..=12 {
        assert_eq!(
            enumerate_partitions(n, PartitionKind::Strict).len(),
            enumerate_partitions(n, PartitionKind::Odd).len()
        );
    }
}

#[test]
fn class_equation_of_symmetric_groups() {
    for n in 0..=10u32 {
        let fact: BigInt = (1..=n).fold(BigInt::from(1), |a, k| a * k);
        let total: BigInt = enumerate_partitions(n, PartitionKind::All).iter().map(|p| &fact / p.z_order()).sum();
        assert_eq!(total, fact);
    }
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..7, 0..6).prop_map(|v| Partition::from_unsorted(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn colorings_recover_the_underlying(bar in partition_strategy(), k in 1usize..4) {
        let all = colorings(&bar, k);
        prop_assert!(!all.is_empty());
        let distinct: BTreeSet<_> = all.iter().cloned().collect();
        prop_assert_eq!(distinct.len(), all.len());
        for f in &all {
            prop_assert_eq!(f.underlying(), bar.clone());
        }
    }

    #[test]
    fn single_color_pvfs_are_partitions(n in 0u32..9, kind_ix in 0usize..3) {
        let kind = [PartitionKind::All, PartitionKind::Strict, PartitionKind::Odd][kind_ix];
        let pvfs = enumerate_pvf(n, 1, kind);
        let direct = enumerate_partitions(n, kind);
        prop_assert_eq!(pvfs.len(), direct.len());
        for (f, p) in pvfs.iter().zip(&direct) {
            prop_assert_eq!(f.weight(), n);
            prop_assert_eq!(f.get(0).cloned().unwrap_or_default(), p.clone());
        }
    }

    #[test]
    fn text_round_trip(p in partition_strategy()) {
        let back: Partition = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn pvf_counts_by_colorings(n in 0u32..6, k in 1usize..4) {
        let total: usize = enumerate_partitions(n, PartitionKind::All).iter().map(|b| colorings(b, k).len()).sum();
        prop_assert_eq!(enumerate_pvf(n, k, PartitionKind::All).len(), total);
    }
}
