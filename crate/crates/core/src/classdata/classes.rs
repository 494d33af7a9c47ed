use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::GroupData;
use crate::error::{Error, Result};
use crate::exactnum::CycloValue;
use crate::partitions::{enumerate_pvf, ClassLabel, PartitionKind, Pvf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitFamily {
    EvenSplit,
    OddSplit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// One of the two classes D± lying over a split class of the base group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitClassLabel {
    pub base: ClassLabel,
    pub family: SplitFamily,
    pub sign: Sign,
}

impl SplitClassLabel {
    /// The partition-valued function carrying the class: ρ⁺ for even splits, ρ⁻ for odd.
    pub fn support(&self) -> &Pvf {
        match self.family {
            SplitFamily::EvenSplit => &self.base.positive,
            SplitFamily::OddSplit => &self.base.negative,
        }
    }
}

impl fmt::Display for SplitFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SplitFamily::EvenSplit => "even_split",
            SplitFamily::OddSplit => "odd_split",
        })
    }
}

/// All types (ρ⁺, ρ⁻) of total weight n; ρ⁺ heaviest first.
pub fn enumerate_classes(n: u32, g: &GroupData) -> Vec<ClassLabel> {
    let k = g.num_classes();
    let mut out = Vec::new();
    for w in (0..=n).rev() {
        let pos = enumerate_pvf(w, k, PartitionKind::All);
        let neg = enumerate_pvf(n - w, k, PartitionKind::All);
        for a in &pos {
            for b in &neg {
                out.push(ClassLabel::new(a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Whether the preimage of the class splits in the cover: ρ⁻ = ∅ with ρ⁺ odd, or
/// ρ⁺ = ∅ with ρ⁻ strict of odd length.
pub fn is_split(c: &ClassLabel) -> Option<SplitFamily> {
    if c.negative.is_empty() && c.positive.is_odd() {
        Some(SplitFamily::EvenSplit)
    } else if c.positive.is_empty() && c.negative.is_strict() && c.negative.len() % 2 == 1 {
        Some(SplitFamily::OddSplit)
    } else {
        None
    }
}

/// The same test with the odd family filtered by (n − l(ρ⁻)) odd instead of
/// l(ρ⁻) odd. Kept for comparison; it undercounts split classes at odd n.
pub fn is_split_by_rank_parity(c: &ClassLabel, n: u32) -> Option<SplitFamily> {
    if c.negative.is_empty() && c.positive.is_odd() {
        Some(SplitFamily::EvenSplit)
    } else if c.positive.is_empty() && c.negative.is_strict() && (n as usize - c.negative.len()) % 2 == 1 {
        Some(SplitFamily::OddSplit)
    } else {
        None
    }
}

/// Split classes in column order: even splits, then odd splits.
pub fn split_classes(n: u32, g: &GroupData) -> Vec<(ClassLabel, SplitFamily)> {
    let k = g.num_classes();
    let even = enumerate_pvf(n, k, PartitionKind::Odd)
        .into_iter()
        .map(|r| (ClassLabel::new(r, Pvf::empty()), SplitFamily::EvenSplit));
    let odd = enumerate_pvf(n, k, PartitionKind::Strict)
        .into_iter()
        .filter(|r| r.len() % 2 == 1)
        .map(|r| (ClassLabel::new(Pvf::empty(), r), SplitFamily::OddSplit));
    even.chain(odd).collect()
}

/// Z_ρ = ∏_c z_{ρ(c)} ζ_c^{l(ρ(c))}.
pub fn z_wreath(rho: &Pvf, g: &GroupData) -> BigInt {
    rho.entries().fold(BigInt::one(), |acc, (c, p)| {
        acc * p.z_order() * BigInt::from(g.centralizer_order(c)).pow(p.len() as u32)
    })
}

/// Order of the centralizer in the cover of an element of a split class: 2^{1+l(ρ)} Z_ρ.
pub fn split_centralizer_order(rho: &Pvf, g: &GroupData) -> BigInt {
    z_wreath(rho, g) * BigInt::from(2).pow(1 + rho.len() as u32)
}

/// Weight (2^{l(ρ)} Z_ρ)⁻¹ of a split class in the spin inner product.
pub fn class_weight(rho: &Pvf, g: &GroupData) -> BigRational {
    BigRational::new(BigInt::one(), z_wreath(rho, g) * BigInt::from(2).pow(rho.len() as u32))
}

/// ⟨f, g⟩ = Σ_ρ (2^{l(ρ)} Z_ρ)⁻¹ f(D⁺_ρ) conj(g(D⁺_ρ)) over the split classes of rank n.
pub fn inner_product(
    f: &BTreeMap<ClassLabel, CycloValue>,
    h: &BTreeMap<ClassLabel, CycloValue>,
    n: u32,
    g: &GroupData,
) -> Result<CycloValue> {
    let colors = g.class_labels();
    let mut acc = CycloValue::zero();
    for (label, family) in split_classes(n, g) {
        let fv = f.get(&label).ok_or_else(|| Error::MissingValue(label.label(&colors)))?;
        let hv = h.get(&label).ok_or_else(|| Error::MissingValue(label.label(&colors)))?;
        let rho = match family {
            SplitFamily::EvenSplit => &label.positive,
            SplitFamily::OddSplit => &label.negative,
        };
        acc = &acc + &(fv * &hv.conj()).scale(&class_weight(rho, g));
    }
    Ok(acc)
}

/// Group order 2·(2|Γ|)ⁿ·n! of the cover.
pub fn cover_order(n: u32, g: &GroupData) -> BigInt {
    let fact: BigInt = (1..=n).fold(BigInt::one(), |a, k| a * k);
    BigInt::from(2) * BigInt::from(2 * g.order).pow(n) * fact
}
