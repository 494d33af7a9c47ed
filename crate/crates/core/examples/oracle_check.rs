//! Build the double cover element by element and referee a generated table.

use spinchar::classdata::builtin;
use spinchar::oracle::{build_cover, oracle_check};
use spinchar::spintable::Presentation;

fn main() {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "trivial".into());
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let g = builtin(&id).unwrap();

    let cover = build_cover(n, &g, Presentation::AForm).unwrap();
    let colors = g.class_labels();
    println!("|cover| = {}, {} classes", cover.order(), cover.classes.len());
    for (k, c) in cover.classes.iter().enumerate() {
        let state = if c.is_split(k) { "split" } else { "fused" };
        println!("  {:<20} size {:>4}  {state}", c.label.label(&colors), c.size);
    }

    let report = oracle_check(n as u32, &g, Presentation::AForm).unwrap();
    print!("{}", report.to_pretty());
    std::process::exit(if report.passed() { 0 } else { 1 });
}
