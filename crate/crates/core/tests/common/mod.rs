//! Reference computations that share no code with the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Poly = BTreeMap<Vec<u32>, BigRational>;

pub fn q(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// All partitions of n, parts non-increasing, generated by choosing the first part.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            go(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn strict_partitions(n: u32) -> Vec<Vec<u32>> {
    partitions(n).into_iter().filter(|p| p.windows(2).all(|w| w[0] > w[1])).collect()
}

pub fn odd_partitions(n: u32) -> Vec<Vec<u32>> {
    partitions(n).into_iter().filter(|p| p.iter().all(|x| x % 2 == 1)).collect()
}

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, k| a * k)
}

/// z_λ = ∏ k^{m_k} m_k!.
pub fn z(lambda: &[u32]) -> BigInt {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for &p in lambda {
        *counts.entry(p).or_default() += 1;
    }
    counts.iter().fold(BigInt::one(), |acc, (&k, &m)| acc * BigInt::from(k).pow(m as u32) * factorial(m))
}

/// Centralizer order of a permutation of cycle type λ, by counting commuting permutations.
pub fn centralizer_by_count(lambda: &[u32]) -> usize {
    let n: usize = lambda.iter().map(|&p| p as usize).sum();
    let mut sigma = vec![0; n];
    let mut start = 0;
    for &p in lambda {
        let p = p as usize;
        for j in start..start + p {
            sigma[j] = if j + 1 == start + p { start } else { j + 1 };
        }
        start += p;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        if (0..n).all(|i| perm[sigma[i]] == sigma[perm[i]]) {
            count += 1;
        }
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else { break };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    count
}

fn key(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (x, c) in a {
        for (y, d) in b {
            let k = key(x.iter().chain(y).copied().collect());
            let e = out.entry(k.clone()).or_insert_with(BigRational::zero);
            *e += c * d;
            if e.is_zero() {
                out.remove(&k);
            }
        }
    }
    out
}

pub fn poly_add_scaled(acc: &mut Poly, a: &Poly, s: &BigRational) {
    for (x, c) in a {
        let e = acc.entry(x.clone()).or_insert_with(BigRational::zero);
        *e += c * s;
        if e.is_zero() {
            acc.remove(x);
        }
    }
}

/// q_m = Σ_{λ odd, |λ| = m} 2^{l(λ)} z_λ⁻¹ p_λ.
pub fn q_row(m: i64) -> Poly {
    if m < 0 {
        return Poly::new();
    }
    odd_partitions(m as u32)
        .into_iter()
        .map(|l| {
            let c = BigRational::new(BigInt::from(2).pow(l.len() as u32), z(&l));
            (l, c)
        })
        .collect()
}

/// Q_ν = ∏_{i<j} (1 − R_ij)/(1 + R_ij) q_ν₁ ⋯ q_ν_l, expanding each factor as
/// 1 + 2 Σ_{k ≥ 1} (−1)^k R_ij^k.
pub fn q_raising(nu: &[u32]) -> Poly {
    let l = nu.len();
    let n: i64 = nu.iter().map(|&x| x as i64).sum();
    let pairs: Vec<(usize, usize)> = (0..l).flat_map(|i| (i + 1..l).map(move |j| (i, j))).collect();
    let mut total = Poly::new();
    let mut ks = vec![0i64; pairs.len()];
    fn rec(
        idx: usize,
        pairs: &[(usize, usize)],
        ks: &mut Vec<i64>,
        nu: &[u32],
        n: i64,
        total: &mut Poly,
    ) {
        if idx == pairs.len() {
            let mut alpha: Vec<i64> = nu.iter().map(|&x| x as i64).collect();
            let mut coeff = BigRational::one();
            for (p, &(i, j)) in pairs.iter().enumerate() {
                alpha[i] += ks[p];
                alpha[j] -= ks[p];
                if ks[p] > 0 {
                    coeff *= BigRational::from_integer(BigInt::from(if ks[p] % 2 == 0 { 2 } else { -2 }));
                }
            }
            if alpha.iter().any(|&a| a < 0) {
                return;
            }
            let mut prod: Poly = [(Vec::new(), BigRational::one())].into();
            for &a in &alpha {
                prod = poly_mul(&prod, &q_row(a));
            }
            poly_add_scaled(total, &prod, &coeff);
            return;
        }
        for k in 0..=n {
            ks[idx] = k;
            rec(idx + 1, pairs, ks, nu, n, total);
        }
        ks[idx] = 0;
    }
    rec(0, &pairs, &mut ks, nu, n, &mut total);
    total
}

/// ⟨f, g⟩ with ⟨p_λ, p_μ⟩ = δ z_λ 2^{−l(λ)}.
pub fn poly_bilinear(f: &Poly, g: &Poly) -> BigRational {
    let mut acc = BigRational::zero();
    for (l, c) in f {
        if let Some(d) = g.get(l) {
            acc += c * d * BigRational::new(z(l), BigInt::from(2).pow(l.len() as u32));
        }
    }
    acc
}

/// Determinant by fraction-field elimination.
pub fn det(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut d = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return BigRational::zero() };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for k in c..n {
                let v = &f * &m[c][k];
                m[r][k] -= v;
            }
        }
    }
    d
}

/// Complex value of Σ coefficient · ζ_N^k, for numerical cross-checks.
pub fn complex_of(terms: &[(usize, f64)], conductor: u32) -> (f64, f64) {
    let w = 2.0 * std::f64::consts::PI / conductor as f64;
    terms.iter().fold((0.0, 0.0), |(re, im), &(k, c)| (re + c * (w * k as f64).cos(), im + c * (w * k as f64).sin()))
}
