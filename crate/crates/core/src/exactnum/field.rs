//! Cyclotomic field data: Φ_N and reduction of polynomials modulo Φ_N.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

pub(crate) struct Field {
    n: usize,
    pub phi: usize,
    /// Φ_N(x) = Φ_m(±x^s) with m the odd part of rad(N); the sign is − for even N.
    m: usize,
    s: usize,
    even: bool,
    phi_m: usize,
    /// Nonzero coefficients of Φ_m below its (monic) leading term.
    low: Vec<(usize, i64)>,
}

impl Field {
    /// Remainder of `a` (little-endian, any length) modulo Φ_N, as a length-φ vector.
    pub fn reduce(&self, a: Vec<BigInt>) -> Vec<BigInt> {
        let (n, m, s) = (self.n, self.m, self.s);
        let mut w = vec![BigInt::zero(); n];
        for (i, c) in a.into_iter().enumerate() {
            if !c.is_zero() {
                w[i % n] += c;
            }
        }
        if self.even {
            // Φ_N divides x^{N/2} + 1
            let half = n / 2;
            for i in 0..half {
                if !w[i + half].is_zero() {
                    let c = std::mem::take(&mut w[i + half]);
                    w[i] -= c;
                }
            }
            w.truncate(half);
        }
        let flip = |j: usize, c: BigInt| if self.even && j % 2 == 1 { -c } else { c };
        let mut out = vec![BigInt::zero(); self.phi];
        for r in 0..s {
            // substitute y = ±x^s and reduce modulo Φ_m(y)
            let mut y: Vec<BigInt> = (0..m).map(|j| flip(j, std::mem::take(&mut w[r + s * j]))).collect();
            for i in (self.phi_m..m).rev() {
                if y[i].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut y[i]);
                let shift = i - self.phi_m;
                for &(j, d) in &self.low {
                    y[shift + j] -= &c * d;
                }
            }
            for (j, c) in y.into_iter().take(self.phi_m).enumerate() {
                out[r + s * j] = flip(j, c);
            }
        }
        out
    }

    /// x^e modulo Φ_N.
    pub fn power(&self, e: usize) -> Vec<BigInt> {
        let mut a = vec![BigInt::zero(); e + 1];
        a[e] = BigInt::from(1);
        self.reduce(a)
    }
}

/// Cyclotomic polynomial Φ_n as little-endian integer coefficients.
pub(crate) fn cyclotomic_poly(n: u32) -> Vec<i64> {
    // x^n - 1 divided by every Φ_d for proper divisors d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            num = exact_div(&num, &cyclotomic_poly(d));
        }
    }
    num
}

fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let lead = den[dn];
    assert!(lead == 1, "cyclotomic divisor must be monic");
    let qlen = num.len() - dn;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

pub(crate) fn euler_phi(n: u32) -> usize {
    let mut result = n as u64;
    let mut m = n as u64;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result as usize
}

pub(crate) fn lcm(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

fn build(n: u32) -> Field {
    let mut odd = n;
    while odd % 2 == 0 {
        odd /= 2;
    }
    let mut m = 1;
    let mut rest = odd;
    let mut p = 3;
    while rest > 1 {
        if rest % p == 0 {
            m *= p;
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 2;
    }
    let even = n % 2 == 0;
    let s = if even { n / (2 * m) } else { n / m };
    let poly = cyclotomic_poly(m);
    let phi_m = poly.len() - 1;
    let low = poly[..phi_m].iter().enumerate().filter(|(_, &c)| c != 0).map(|(j, &c)| (j, c)).collect();
    Field {
        n: n as usize,
        phi: s as usize * phi_m,
        m: m as usize,
        s: s as usize,
        even,
        phi_m,
        low,
    }
}

static FIELDS: OnceLock<Mutex<HashMap<u32, Arc<Field>>>> = OnceLock::new();

pub(crate) fn field(n: u32) -> Arc<Field> {
    let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = map.lock().expect("field cache poisoned").get(&n) {
        return Arc::clone(f);
    }
    // Built outside the lock; a concurrent duplicate build is harmless.
    let f = Arc::new(build(n));
    let mut guard = map.lock().expect("field cache poisoned");
    Arc::clone(guard.entry(n).or_insert(f))
}
