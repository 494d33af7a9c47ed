use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{self, euler_phi, lcm};
use crate::error::{Error, Result};

/// An element of a cyclotomic field Q(ζ_N).
///
/// Stored as `num / den` over the power basis 1, ζ_N, …, ζ_N^{φ(N)-1}, which is the
/// reduction modulo Φ_N. `N` is never ≡ 2 (mod 4); values whose non-constant
/// coefficients vanish drop to conductor 1.
#[derive(Clone, Debug)]
pub struct CycloValue {
    n: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloValue {
    pub fn zero() -> Self {
        CycloValue { n: 1, num: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::normalized(1, vec![q.numer().clone()], q.denom().clone())
    }

    /// ζ_N^k.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as u32;
        let g = e.gcd(&n);
        let (n, e) = if g == 0 { (1, 0) } else { (n / g, e / g) };
        if n % 4 == 2 {
            // ζ_{2m} = -ζ_m^{(m+1)/2} for odd m
            let m = n / 2;
            let base = Self::root_of_unity(m, (e as i64) * ((m as i64 + 1) / 2));
            return if e % 2 == 1 { -base } else { base };
        }
        let f = field::field(n);
        Self::normalized(n, f.power(e as usize), BigInt::one())
    }

    /// The imaginary unit ζ_4.
    pub fn i() -> Self {
        Self::root_of_unity(4, 1)
    }

    /// i^k.
    pub fn i_pow(k: i64) -> Self {
        Self::root_of_unity(4, k)
    }

    /// Positive square root of a positive rational.
    pub fn sqrt_rational(q: &BigRational) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::NonPositiveSqrt(q.to_string()));
        }
        // √(a/b) = √(ab)/b
        let ab = q.numer() * q.denom();
        let (square, free) = split_square(&ab);
        let mut root = Self::from_rational(&BigRational::new(square, q.denom().clone()));
        let free = free.to_u64().expect("squarefree part too large for a cyclotomic square root");
        if free > 1 {
            root = &root * &sqrt_squarefree(free);
        }
        Ok(root)
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.n == 1
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        if self.is_zero() {
            Some(BigRational::zero())
        } else if self.n == 1 {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    /// Coefficient of ζ_N^k in the reduced basis (0 <= k < φ(N)).
    pub fn coefficient(&self, k: usize) -> BigRational {
        match self.num.get(k) {
            Some(c) => BigRational::new(c.clone(), self.den.clone()),
            None => BigRational::zero(),
        }
    }

    /// Nonzero (k, coefficient) pairs in the reduced basis.
    pub fn terms(&self) -> Vec<(usize, BigRational)> {
        self.num
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, BigRational::new(c.clone(), self.den.clone())))
            .collect()
    }

    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// The field automorphism ζ ↦ ζ^j (j coprime to the conductor).
    pub fn galois(&self, j: i64) -> Self {
        if self.n == 1 {
            return self.clone();
        }
        let n = self.n as i64;
        let f = field::field(self.n);
        let mut wrapped = vec![BigInt::zero(); self.n as usize];
        for (k, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                wrapped[((k as i64) * j).rem_euclid(n) as usize] += c;
            }
        }
        Self::normalized(self.n, f.reduce(wrapped), self.den.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.to_rational() {
            return Ok(Self::from_rational(&q.recip()));
        }
        // product of the other Galois conjugates; a * rest is the (rational) norm
        let n = self.n as i64;
        let mut rest = Self::one();
        for j in 2..n {
            if j.gcd(&n) == 1 {
                rest = &rest * &self.galois(j);
            }
        }
        let norm = (self * &rest)
            .to_rational()
            .expect("field norm is rational");
        Ok(rest.scale(&norm.recip()))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::normalized(self.n, num, &self.den * q.denom())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        out
    }

    /// Squared absolute value a·conj(a), which is a non-negative rational for the
    /// values handled here (it always lies in the real subfield).
    pub fn norm_sq(&self) -> Self {
        self * &self.conj()
    }

    /// Numeric embedding with ζ_N = exp(2πi/N); for display and sanity checks.
    pub fn to_complex(&self) -> (f64, f64) {
        let den = self.den.to_f64().unwrap_or(f64::NAN);
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.num.iter().enumerate() {
            let c = c.to_f64().unwrap_or(f64::NAN) / den;
            let t = 2.0 * std::f64::consts::PI * (k as f64) / (self.n as f64);
            re += c * t.cos();
            im += c * t.sin();
        }
        (re, im)
    }

    /// Re-express in Q(ζ_m), where `self.n` divides `m`.
    fn embed(&self, m: u32) -> Vec<BigInt> {
        debug_assert!(m % self.n == 0);
        let f = field::field(m);
        let step = (m / self.n) as usize;
        let mut wrapped = vec![BigInt::zero(); m as usize];
        for (k, c) in self.num.iter().enumerate() {
            wrapped[k * step] = c.clone();
        }
        f.reduce(wrapped)
    }

    fn common(a: &Self, b: &Self) -> (u32, Vec<BigInt>, Vec<BigInt>) {
        if a.n == b.n {
            let phi = euler_phi(a.n);
            let pad = |v: &Vec<BigInt>| {
                let mut v = v.clone();
                v.resize(phi, BigInt::zero());
                v
            };
            return (a.n, pad(&a.num), pad(&b.num));
        }
        let m = lcm(a.n, b.n);
        (m, a.embed(m), b.embed(m))
    }

    fn normalized(n: u32, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert!(n % 4 != 2);
        if num.iter().all(|c| c.is_zero()) {
            return Self::zero();
        }
        let (n, num_len) = if num.iter().skip(1).all(|c| c.is_zero()) {
            (1, 1)
        } else {
            (n, euler_phi(n))
        };
        num.truncate(num_len);
        num.resize(num_len, BigInt::zero());
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -&*c;
            }
        }
        let mut g = den.clone();
        for c in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in num.iter_mut() {
                *c = &*c / &g;
            }
            den = &den / &g;
        }
        CycloValue { n, num, den }
    }
}


impl PartialEq for CycloValue {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.den == other.den && self.num == other.num;
        }
        if self.is_zero() || other.is_zero() {
            return false;
        }
        // a value need not sit in its least field, so compare inside the lcm
        let (_, a, b) = Self::common(self, other);
        // a/da == b/db  <=>  a*db == b*da
        a.iter()
            .zip(&b)
            .all(|(x, y)| x * &other.den == y * &self.den)
    }
}

impl Eq for CycloValue {}

impl<'a> Add<&'a CycloValue> for &'a CycloValue {
    type Output = CycloValue;
    fn add(self, rhs: &CycloValue) -> CycloValue {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (n, a, b) = CycloValue::common(self, rhs);
        let num = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x * &rhs.den + y * &self.den)
            .collect();
        CycloValue::normalized(n, num, &self.den * &rhs.den)
    }
}

impl<'a> Sub<&'a CycloValue> for &'a CycloValue {
    type Output = CycloValue;
    fn sub(self, rhs: &CycloValue) -> CycloValue {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycloValue> for &'a CycloValue {
    type Output = CycloValue;
    fn mul(self, rhs: &CycloValue) -> CycloValue {
        if self.is_zero() || rhs.is_zero() {
            return CycloValue::zero();
        }
        if self.n == 1 {
            let num = rhs.num.iter().map(|c| c * &self.num[0]).collect();
            return CycloValue::normalized(rhs.n, num, &self.den * &rhs.den);
        }
        if rhs.n == 1 {
            return rhs * self;
        }
        let (n, a, b) = CycloValue::common(self, rhs);
        let f = field::field(n);
        let nn = n as usize;
        let sparse = |v: Vec<BigInt>| -> Vec<(usize, BigInt)> {
            v.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        };
        let (a, b) = (sparse(a), sparse(b));
        let mut wrapped = vec![BigInt::zero(); nn];
        for (i, x) in &a {
            for (j, y) in &b {
                wrapped[(i + j) % nn] += x * y;
            }
        }
        CycloValue::normalized(n, f.reduce(wrapped), &self.den * &rhs.den)
    }
}

impl Neg for &CycloValue {
    type Output = CycloValue;
    fn neg(self) -> CycloValue {
        CycloValue {
            n: self.n,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloValue {
    type Output = CycloValue;
    fn neg(self) -> CycloValue {
        -&self
    }
}

impl Add for CycloValue {
    type Output = CycloValue;
    fn add(self, rhs: CycloValue) -> CycloValue {
        &self + &rhs
    }
}

impl Sub for CycloValue {
    type Output = CycloValue;
    fn sub(self, rhs: CycloValue) -> CycloValue {
        &self - &rhs
    }
}

impl Mul for CycloValue {
    type Output = CycloValue;
    fn mul(self, rhs: CycloValue) -> CycloValue {
        &self * &rhs
    }
}

impl AddAssign<&CycloValue> for CycloValue {
    fn add_assign(&mut self, rhs: &CycloValue) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for CycloValue {
    fn sum<I: Iterator<Item = CycloValue>>(iter: I) -> Self {
        iter.fold(CycloValue::zero(), |acc, x| &acc + &x)
    }
}

impl From<i64> for CycloValue {
    fn from(k: i64) -> Self {
        CycloValue::from_int(k)
    }
}

impl From<&BigRational> for CycloValue {
    fn from(q: &BigRational) -> Self {
        CycloValue::from_rational(q)
    }
}

impl fmt::Display for CycloValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::render(self))
    }
}

/// Split m = s²·f with f squarefree.
fn split_square(m: &BigInt) -> (BigInt, BigInt) {
    let mut rest = m.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            square *= p.pow(e / 2);
            if e % 2 == 1 {
                free *= &p;
            }
        }
        p += 1;
    }
    free *= rest;
    (square, free)
}

fn prime_factors(mut rest: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        if rest % p == 0 {
            out.push(p);
            rest /= p;
        }
        p += 1;
    }
    if rest > 1 {
        out.push(rest);
    }
    out
}

/// Positive √m for squarefree m > 1.
fn sqrt_squarefree(m: u64) -> CycloValue {
    let sqrt2 = || &CycloValue::root_of_unity(8, 1) + &CycloValue::root_of_unity(8, -1);
    if m == 2 {
        return sqrt2();
    }
    let odd = if m % 2 == 0 { m / 2 } else { m };
    let primes = prime_factors(odd);
    // Gauss sum of the Jacobi symbol mod odd: √odd when odd ≡ 1 (mod 4), i√odd otherwise
    let mut wrapped = vec![BigInt::zero(); odd as usize];
    for k in 1..odd {
        let s: i32 = primes.iter().map(|&p| legendre(k, p)).product();
        wrapped[k as usize] = BigInt::from(s);
    }
    let n = u32::try_from(odd).expect("conductor too large");
    let mut g = CycloValue::normalized(n, field::field(n).reduce(wrapped), BigInt::one());
    if odd % 4 == 3 {
        g = &g * &CycloValue::i_pow(3);
    }
    if m % 2 == 0 {
        g = &g * &sqrt2();
    }
    g
}

fn legendre(a: u64, p: u64) -> i32 {
    let mut r = 1u64;
    let mut b = a % p;
    if b == 0 {
        return 0;
    }
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    if r == 1 {
        1
    } else {
        -1
    }
}
