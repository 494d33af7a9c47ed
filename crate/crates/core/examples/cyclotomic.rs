//! Exact arithmetic in cyclotomic fields.

use spinchar::exactnum::{parse_value, rat, CycloValue};

fn main() {
    let i = CycloValue::i();
    let w = CycloValue::root_of_unity(3, 1);
    println!("i^2 = {}", &i * &i);
    println!("w + w^2 = {}", &w + &w.pow(2));

    let s = CycloValue::sqrt_rational(&rat(3, 2)).unwrap();
    println!("sqrt(3/2) = {s}");
    println!("squared: {}", &s * &s);

    let x = &(&i * &CycloValue::sqrt_rational(&rat(2, 1)).unwrap()) + &w;
    let inv = x.inv().unwrap();
    println!("x = {x}");
    println!("x * x^-1 = {}", &x * &inv);
    println!("|x|^2 ~ {:?}", x.norm_sq().to_complex());

    // the text form round-trips
    let back = parse_value(&x.to_string()).unwrap();
    assert_eq!(back, x);
}
