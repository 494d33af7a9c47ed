//! Partitions, partition-valued functions and class labels.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition with non-increasing positive parts.
///
/// The derived order is lexicographic on the parts; enumerations list partitions
/// from largest to smallest in that order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionKind {
    All,
    Strict,
    Odd,
    /// Strict ν with (‖ν‖ − l(ν)) ≡ i (mod 2).
    StrictWithParity(u8),
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition { parts, reason: "parts must be positive".into() });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition { parts, reason: "parts must be non-increasing".into() });
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts; zeros are rejected.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn matches(&self, kind: PartitionKind) -> bool {
        match kind {
            PartitionKind::All => true,
            PartitionKind::Strict => self.is_strict(),
            PartitionKind::Odd => self.is_odd(),
            PartitionKind::StrictWithParity(i) => self.is_strict() && self.parity() == i % 2,
        }
    }

    pub fn multiplicity(&self, k: u32) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// z_λ = ∏_i i^{m_i} m_i!.
    pub fn z_order(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let mut m = 0u32;
            while i < self.0.len() && self.0[i] == k {
                m += 1;
                i += 1;
                z *= k * m;
            }
        }
        z
    }

    /// (‖ν‖ − l(ν)) mod 2.
    pub fn parity(&self) -> u8 {
        ((self.weight() as usize - self.len()) % 2) as u8
    }

    /// Number of odd parts.
    pub fn odd_parts(&self) -> usize {
        self.0.iter().filter(|p| *p % 2 == 1).count()
    }

    /// ∏ parts.
    pub fn product(&self) -> BigInt {
        self.0.iter().fold(BigInt::one(), |acc, &p| acc * p)
    }

    /// Parenthesized form, e.g. `(2,1)`.
    pub fn label(&self) -> String {
        format!("({self})")
    }

    fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Comma-separated parts in any order; `""` or `()` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|_| Error::Parse {
                    text: s.to_string(),
                    reason: "expected comma-separated positive integers".into(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::from_unsorted(parts)
    }
}

/// All partitions of `n` of the given kind, largest first.
pub fn enumerate_partitions(n: u32, kind: PartitionKind) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    go(n, n, &mut Vec::new(), &mut all);
    all.retain(|p| p.matches(kind));
    all
}

/// A partition-valued function on a finite color set `0..k`.
///
/// Colors index either the classes or the irreducible characters of Γ; empty
/// entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Pvf(BTreeMap<usize, Partition>);

impl Pvf {
    pub fn empty() -> Self {
        Pvf(BTreeMap::new())
    }

    pub fn single(color: usize, p: Partition) -> Self {
        let mut m = BTreeMap::new();
        if !p.is_empty() {
            m.insert(color, p);
        }
        Pvf(m)
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Partition)>) -> Self {
        Pvf(entries.into_iter().filter(|(_, p)| !p.is_empty()).collect())
    }

    pub fn get(&self, color: usize) -> Option<&Partition> {
        self.0.get(&color)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, &Partition)> {
        self.0.iter().map(|(c, p)| (*c, p))
    }

    pub fn weight(&self) -> u32 {
        self.0.values().map(|p| p.weight()).sum()
    }

    pub fn len(&self) -> usize {
        self.0.values().map(|p| p.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strict(&self) -> bool {
        self.0.values().all(|p| p.is_strict())
    }

    pub fn is_odd(&self) -> bool {
        self.0.values().all(|p| p.is_odd())
    }

    pub fn matches(&self, kind: PartitionKind) -> bool {
        self.0.values().all(|p| p.matches(kind))
    }

    /// The multiset of all parts, colors forgotten.
    pub fn underlying(&self) -> Partition {
        self.0.values().fold(Partition::empty(), |acc, p| acc.union(p))
    }

    /// (part, color) pairs, color-major with parts descending inside a color.
    pub fn colored_parts(&self) -> Vec<(u32, usize)> {
        self.0
            .iter()
            .flat_map(|(c, p)| p.parts().iter().map(move |&r| (r, *c)))
            .collect()
    }

    /// Parenthesized form with color labels, e.g. `{g:(2,1), h:(1)}`.
    pub fn label(&self, colors: &[String]) -> String {
        if colors.len() == 1 {
            return self.get(0).cloned().unwrap_or_default().label();
        }
        let items: Vec<String> = self
            .0
            .iter()
            .map(|(c, p)| format!("{}:{}", colors.get(*c).map(String::as_str).unwrap_or("?"), p.label()))
            .collect();
        format!("{{{}}}", items.join(", "))
    }

    /// `{label: "4,3,1"}` map used by the JSON formats.
    pub fn to_label_map(&self, colors: &[String]) -> BTreeMap<String, String> {
        self.0.iter().map(|(c, p)| (colors[*c].clone(), p.to_string())).collect()
    }

    pub fn from_label_map(map: &BTreeMap<String, String>, colors: &[String]) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (label, parts) in map {
            let c = colors
                .iter()
                .position(|x| x == label)
                .ok_or_else(|| Error::UnknownColor(label.clone()))?;
            let p: Partition = parts.parse()?;
            if !p.is_empty() {
                out.insert(c, p);
            }
        }
        Ok(Pvf(out))
    }

    /// Per-color partitions for all `k` colors, empty where absent.
    fn key(&self, k: usize) -> Vec<Partition> {
        (0..k).map(|c| self.get(c).cloned().unwrap_or_default()).collect()
    }
}

/// All partition-valued functions of total weight `n` on colors `0..k` whose
/// per-color partitions are of the given kind.
///
/// Ordered by underlying partition (largest first), then by the per-color
/// partitions read from color 0 upwards (largest first).
pub fn enumerate_pvf(n: u32, k: usize, kind: PartitionKind) -> Vec<Pvf> {
    assert!(k > 0, "color set must be non-empty");
    enumerate_partitions(n, PartitionKind::All)
        .iter()
        .flat_map(|bar| colorings(bar, k))
        .filter(|f| f.matches(kind))
        .collect()
}

/// All ρ on colors `0..k` with `underlying(ρ) = bar`.
pub fn colorings(bar: &Partition, k: usize) -> Vec<Pvf> {
    assert!(k > 0, "color set must be non-empty");
    // distribute each multiplicity block over the colors
    let mut sizes: Vec<(u32, usize)> = Vec::new();
    for &p in bar.parts() {
        match sizes.last_mut() {
            Some((q, m)) if *q == p => *m += 1,
            _ => sizes.push((p, 1)),
        }
    }
    let mut acc: Vec<Vec<Vec<u32>>> = vec![vec![Vec::new(); k]];
    for (part, mult) in sizes {
        let mut next = Vec::new();
        for base in &acc {
            for comp in compositions(mult, k) {
                let mut f = base.clone();
                for (c, &m) in comp.iter().enumerate() {
                    f[c].extend(std::iter::repeat(part).take(m));
                }
                next.push(f);
            }
        }
        acc = next;
    }
    let mut out: Vec<Pvf> = acc
        .into_iter()
        .map(|f| Pvf::from_entries(f.into_iter().enumerate().map(|(c, p)| (c, Partition(p)))))
        .collect();
    out.sort_by(|a, b| b.key(k).cmp(&a.key(k)));
    out
}

fn compositions(m: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for first in (0..=m).rev() {
        for mut rest in compositions(m - first, k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The type (ρ⁺, ρ⁻) of an element of the wreath product; colors are classes of Γ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ClassLabel {
    pub positive: Pvf,
    pub negative: Pvf,
}

impl ClassLabel {
    pub fn new(positive: Pvf, negative: Pvf) -> Self {
        ClassLabel { positive, negative }
    }

    pub fn weight(&self) -> u32 {
        self.positive.weight() + self.negative.weight()
    }

    pub fn label(&self, colors: &[String]) -> String {
        format!("({} ; {})", self.positive.label(colors), self.negative.label(colors))
    }
}
