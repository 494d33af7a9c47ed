//! Strict and odd partitions, centralizer orders, and partition-valued functions.

use spinchar::partitions::{colorings, enumerate_partitions, enumerate_pvf, Partition, PartitionKind};

fn main() {
    let n = 6;
    let strict = enumerate_partitions(n, PartitionKind::Strict);
    let odd = enumerate_partitions(n, PartitionKind::Odd);
    println!("strict partitions of {n}: {}", strict.iter().map(|p| p.label()).collect::<Vec<_>>().join(" "));
    println!("odd partitions of {n}:    {}", odd.iter().map(|p| p.label()).collect::<Vec<_>>().join(" "));
    assert_eq!(strict.len(), odd.len());

    for p in &odd {
        println!("  z{} = {}", p.label(), p.z_order());
    }

    // colorings of (2,1) by two colors
    let colors = ["a".to_string(), "b".to_string()];
    let bar: Partition = "2,1".parse().unwrap();
    for f in colorings(&bar, 2) {
        println!("  {}", f.label(&colors));
    }

    let count = enumerate_pvf(3, 2, PartitionKind::Strict).len();
    println!("strict two-colored functions of weight 3: {count}");
}
