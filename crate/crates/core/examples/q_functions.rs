//! Schur Q-functions in the power-sum basis and the character values they carry.

use spinchar::partitions::{enumerate_partitions, Partition, PartitionKind};
use spinchar::qfunctions::{bilinear, char_value, q_general, Algebra};

fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5u32);
    let strict = enumerate_partitions(n, PartitionKind::Strict);
    let odd = enumerate_partitions(n, PartitionKind::Odd);

    for nu in &strict {
        let q = q_general(nu).unwrap();
        println!("Q{} = {q}", nu.label());
        println!("  <Q, Q> = {}", bilinear(&q, &q));
    }

    println!("\nvalues of the spin symmetric group cover (rows ν, columns odd λ)");
    print!("{:>12}", "");
    for l in &odd {
        print!("{:>12}", l.label());
    }
    println!();
    for nu in &strict {
        print!("{:>12}", nu.label());
        for l in &odd {
            print!("{:>12}", char_value(nu, l, Algebra::A).unwrap().to_string());
        }
        println!();
    }

    let nu: Partition = "3,2".parse().unwrap();
    let ones = Partition::new(vec![1; 5]).unwrap();
    println!("\nsupercharacter degree of (3,2): {}", char_value(&nu, &ones, Algebra::B).unwrap());
}
