//! Spin character table of the double cover of S_n.
//!
//! cargo run --example symmetric_table -- 6

use spinchar::spintable::{table_spin_symmetric, Format};

fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(5);
    let table = table_spin_symmetric(n).expect("rank within bounds");
    println!("{}", table.render(Format::Pretty).unwrap());
    for check in table.invariant_report() {
        println!("{:<24} {}", check.name, if check.passed { "ok" } else { "FAILED" });
    }
}
