//! Spin characters of the double cover of Γ ≀ B_n, written as CSV.
//!
//! cargo run --example wreath_table -- cyclic3 2

use spinchar::classdata::builtin;
use spinchar::partitions::{Partition, Pvf};
use spinchar::spintable::{table_spin_wreath, wreath_q_expand, Format, Presentation};

fn main() {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "cyclic3".into());
    let n = args.next().and_then(|a| a.parse().ok()).unwrap_or(2);
    let g = builtin(&id).expect("known builtin group");

    let table = table_spin_wreath(n, &g, Presentation::AForm).unwrap();
    print!("{}", table.render(Format::Csv).unwrap());
    println!("substitution weight: {}", table.conventions.substitution_weight.as_deref().unwrap_or("-"));

    // even-class values of one row straight from the colored Q-function
    let lambda = Pvf::single(0, Partition::new(vec![n]).unwrap());
    let chars = g.character_labels();
    let classes = g.class_labels();
    println!("\nQ expansion of {}:", lambda.label(&chars));
    for (class, v) in wreath_q_expand(&lambda, &g) {
        println!("  {:<24} {v}", class.label(&classes));
    }

    let failed: Vec<_> = table.invariant_report().into_iter().filter(|c| !c.passed).collect();
    println!("\n{} invariant failures", failed.len());
}
