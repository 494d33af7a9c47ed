//! Schur Q-functions in the odd power-sum basis and the supercharacter values
//! read off from them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::CycloValue;
use crate::partitions::Partition;

/// Σ c_λ p_λ over odd-part partitions λ of a common weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSumVector {
    degree: u32,
    coeffs: BTreeMap<Partition, BigRational>,
}

impl PowerSumVector {
    pub fn zero(degree: u32) -> Self {
        PowerSumVector { degree, coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), BigRational::one())
    }

    /// c·p_λ; λ must have odd parts only.
    pub fn monomial(lambda: Partition, c: BigRational) -> Self {
        assert!(lambda.is_odd(), "power-sum index {lambda} has an even part");
        let degree = lambda.weight();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(lambda, c);
        }
        PowerSumVector { degree, coeffs }
    }

    /// p_k for odd k.
    pub fn p(k: u32) -> Self {
        Self::monomial(Partition::new(vec![k]).expect("positive part"), BigRational::one())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigRational {
        self.coeffs.get(lambda).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Terms in increasing lexicographic order of the index.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch(self.degree as usize, other.degree as usize));
        }
        let mut coeffs = self.coeffs.clone();
        for (k, v) in &other.coeffs {
            let e = coeffs.entry(k.clone()).or_insert_with(BigRational::zero);
            *e += v;
            if e.is_zero() {
                coeffs.remove(k);
            }
        }
        Ok(PowerSumVector { degree: self.degree, coeffs })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(self.degree);
        }
        PowerSumVector {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * q)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut coeffs: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (a, x) in &self.coeffs {
            for (b, y) in &other.coeffs {
                let mut parts = a.parts().to_vec();
                parts.extend_from_slice(b.parts());
                let key = Partition::from_unsorted(parts).expect("positive parts");
                let e = coeffs.entry(key).or_insert_with(BigRational::zero);
                *e += x * y;
            }
        }
        coeffs.retain(|_, v| !v.is_zero());
        PowerSumVector { degree: self.degree + other.degree, coeffs }
    }
}

impl fmt::Display for PowerSumVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.coeffs.iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if lambda.is_empty() {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*p[{lambda}]")?;
            }
        }
        Ok(())
    }
}

/// The operations the Pfaffian needs.
pub trait CommutativeRing: Clone + PartialEq {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn is_zero_elem(&self) -> bool;
}

impl CommutativeRing for BigRational {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl CommutativeRing for CycloValue {
    fn zero_elem() -> Self {
        CycloValue::zero()
    }
    fn one_elem() -> Self {
        CycloValue::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero_elem(&self) -> bool {
        CycloValue::is_zero(self)
    }
}

/// Homogeneous power-sum vectors; adding two nonzero vectors of different degree
/// is a logic error here (use [`PowerSumVector::checked_add`] for the fallible form).
impl CommutativeRing for PowerSumVector {
    fn zero_elem() -> Self {
        PowerSumVector::zero(0)
    }
    fn one_elem() -> Self {
        PowerSumVector::one()
    }
    fn plus(&self, other: &Self) -> Self {
        self.checked_add(other).expect("inhomogeneous sum")
    }
    fn negated(&self) -> Self {
        self.scale(&-BigRational::one())
    }
    fn times(&self, other: &Self) -> Self {
        PowerSumVector::mul(self, other)
    }
    fn is_zero_elem(&self) -> bool {
        PowerSumVector::is_zero(self)
    }
}

/// Pfaffian of an even-dimensional antisymmetric matrix, by expansion along the
/// first row.
pub fn pfaffian<R: CommutativeRing>(m: &[Vec<R>]) -> Result<R> {
    let dim = m.len();
    if m.iter().any(|row| row.len() != dim) {
        return Err(Error::InvalidMatrix("matrix is not square".into()));
    }
    if dim % 2 == 1 {
        return Err(Error::InvalidMatrix(format!("odd dimension {dim}")));
    }
    for i in 0..dim {
        if !m[i][i].is_zero_elem() {
            return Err(Error::InvalidMatrix(format!("nonzero diagonal entry at {i}")));
        }
        for j in i + 1..dim {
            if m[i][j] != m[j][i].negated() {
                return Err(Error::InvalidMatrix(format!("entries ({i},{j}) and ({j},{i}) are not opposite")));
            }
        }
    }
    let idx: Vec<usize> = (0..dim).collect();
    Ok(pf_rec(m, &idx))
}

fn pf_rec<R: CommutativeRing>(m: &[Vec<R>], idx: &[usize]) -> R {
    if idx.is_empty() {
        return R::one_elem();
    }
    let first = idx[0];
    let mut acc = R::zero_elem();
    for j in 1..idx.len() {
        let entry = &m[first][idx[j]];
        if entry.is_zero_elem() {
            continue;
        }
        let rest: Vec<usize> = idx[1..].iter().copied().filter(|&x| x != idx[j]).collect();
        let term = entry.times(&pf_rec(m, &rest));
        acc = if j % 2 == 1 { acc.plus(&term) } else { acc.plus(&term.negated()) };
    }
    acc
}

type Cache<K> = OnceLock<Mutex<HashMap<K, PowerSumVector>>>;

static ONE_ROW: Cache<u32> = OnceLock::new();
static TWO_ROW: Cache<(u32, u32)> = OnceLock::new();
static GENERAL: Cache<Partition> = OnceLock::new();

fn cached<K: std::hash::Hash + Eq + Clone>(
    cache: &'static Cache<K>,
    key: &K,
    compute: impl FnOnce() -> PowerSumVector,
) -> PowerSumVector {
    let map = cache.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(v) = map.lock().expect("q cache poisoned").get(key) {
        return v.clone();
    }
    // computed without holding the lock: recursion re-enters the cache
    let v = compute();
    map.lock().expect("q cache poisoned").entry(key.clone()).or_insert(v).clone()
}

/// Q_n, the degree-n part of exp(2 Σ_{k odd} p_k t^k / k).
pub fn q_one_row(n: u32) -> PowerSumVector {
    if n == 0 {
        return PowerSumVector::one();
    }
    cached(&ONE_ROW, &n, || {
        // n Q_n = 2 Σ_{k odd ≤ n} p_k Q_{n-k}
        let mut acc = PowerSumVector::zero(n);
        for k in (1..=n).step_by(2) {
            let term = PowerSumVector::p(k).mul(&q_one_row(n - k));
            acc = acc.checked_add(&term).expect("homogeneous");
        }
        acc.scale(&BigRational::new(BigInt::from(2), BigInt::from(n)))
    })
}

/// Q_{(a,b)} = Q_a Q_b + 2 Σ_{i=1}^{b} (−1)^i Q_{a+i} Q_{b−i}, for a > b ≥ 0.
pub fn q_two_row(a: u32, b: u32) -> Result<PowerSumVector> {
    if a <= b {
        return Err(Error::Precondition(format!("two-row index needs a > b, got ({a},{b})")));
    }
    if b == 0 {
        return Ok(q_one_row(a));
    }
    Ok(cached(&TWO_ROW, &(a, b), || {
        let mut acc = q_one_row(a).mul(&q_one_row(b));
        for i in 1..=b {
            let sign = if i % 2 == 0 { 2 } else { -2 };
            let term = q_one_row(a + i).mul(&q_one_row(b - i)).scale(&BigRational::from_integer(sign.into()));
            acc = acc.checked_add(&term).expect("homogeneous");
        }
        acc
    }))
}

/// Q_ν for strict ν, as the Pfaffian of two-row functions.
pub fn q_general(nu: &Partition) -> Result<PowerSumVector> {
    if !nu.is_strict() {
        return Err(Error::InvalidPartition { parts: nu.parts().to_vec(), reason: "Q-functions need a strict partition".into() });
    }
    match nu.parts() {
        [] => return Ok(PowerSumVector::one()),
        [a] => return Ok(q_one_row(*a)),
        [a, b] => return q_two_row(*a, *b),
        _ => {}
    }
    Ok(cached(&GENERAL, nu, || {
        let mut parts = nu.parts().to_vec();
        if parts.len() % 2 == 1 {
            parts.push(0);
        }
        let dim = parts.len();
        let mut m = vec![vec![PowerSumVector::zero(nu.weight()); dim]; dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let q = q_two_row(parts[i], parts[j]).expect("strict parts");
                m[j][i] = q.negated();
                m[i][j] = q;
            }
        }
        pfaffian(&m).expect("antisymmetric by construction")
    }))
}

/// Which Clifford-twisted algebra a supercharacter value refers to: `A` for the
/// spin symmetric group, `B` for the spin hyperoctahedral group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    A,
    B,
}

fn pow2(e: i64) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    if e >= 0 {
        num_traits::pow(two, e as usize)
    } else {
        num_traits::pow(two, (-e) as usize).recip()
    }
}

/// Character value read off the coefficient of p_λ in Q_ν.
///
/// `A`: ζ^λ_ν from Q_ν = Σ 2^{(l(ν)+l(λ)+p(ν))/2} z_λ⁻¹ ζ^λ_ν p_λ; an integer, the
/// value of one ordinary spin character of the symmetric group cover.
/// `B`: ξ^λ_ν from Q_ν = Σ 2^{[l(ν)/2]} z_λ⁻¹ ξ^λ_ν p_λ; the supercharacter value.
pub fn char_value(nu: &Partition, lambda: &Partition, algebra: Algebra) -> Result<BigRational> {
    if nu.weight() != lambda.weight() {
        return Err(Error::Precondition(format!("weights differ: {nu} vs {lambda}")));
    }
    if !lambda.is_odd() {
        return Err(Error::InvalidPartition { parts: lambda.parts().to_vec(), reason: "class index must have odd parts".into() });
    }
    let q = q_general(nu)?;
    let c = q.coeff(lambda) * BigRational::from_integer(lambda.z_order());
    match algebra {
        Algebra::A => {
            let e = nu.len() + lambda.len() + nu.parity() as usize;
            debug_assert!(e % 2 == 0);
            let v = c * pow2(-((e / 2) as i64));
            assert!(v.is_integer(), "non-integral value {v} for ({nu}; {lambda})");
            Ok(v)
        }
        Algebra::B => Ok(c * pow2(-((nu.len() / 2) as i64))),
    }
}

/// ⟨f, g⟩ with ⟨p_λ, p_μ⟩ = δ z_λ 2^{−l(λ)}.
pub fn bilinear(f: &PowerSumVector, g: &PowerSumVector) -> BigRational {
    let mut acc = BigRational::zero();
    for (lambda, x) in f.terms() {
        let y = g.coeff(lambda);
        if !y.is_zero() {
            acc += x * y * BigRational::from_integer(lambda.z_order()) * pow2(-(lambda.len() as i64));
        }
    }
    acc
}
