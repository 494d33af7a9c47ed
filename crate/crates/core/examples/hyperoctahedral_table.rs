//! Spin characters of the hyperoctahedral double cover in both presentations.
//!
//! The two covers agree on even classes; on an odd class of length l the values
//! differ by i^l.

use spinchar::spintable::{table_spin_hyperoctahedral, Format, Presentation};

fn main() {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let a = table_spin_hyperoctahedral(n, Presentation::AForm).unwrap();
    let b = table_spin_hyperoctahedral(n, Presentation::BForm).unwrap();
    println!("a_j^2 = z\n{}", a.render(Format::Pretty).unwrap());
    println!("tau_j^2 = 1\n{}", b.render(Format::Pretty).unwrap());

    for (i, (ra, rb)) in a.rows.iter().zip(&b.rows).enumerate() {
        for (j, (va, vb)) in ra.values.iter().zip(&rb.values).enumerate() {
            if va != vb {
                println!("{} at {}: {} vs {}", a.row_label(i), a.column_label(j), va, vb);
            }
        }
    }
    let degrees: Vec<String> = a.rows.iter().map(|r| r.degree.to_string()).collect();
    println!("degrees: {}", degrees.join(" "));
}
