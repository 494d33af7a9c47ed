//! Exact coefficient arithmetic: big rationals and cyclotomic numbers.

mod cyclo;
mod field;
mod text;

pub use cyclo::CycloValue;
pub use num_rational::BigRational as Rational;
pub use text::{parse as parse_value, parse_rational};

use num_bigint::BigInt;

/// `a/b` as a rational.
pub fn rat(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

/// Integer as a rational.
pub fn int(a: i64) -> Rational {
    Rational::from_integer(BigInt::from(a))
}
