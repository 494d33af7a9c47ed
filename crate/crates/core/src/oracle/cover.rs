use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::element::{inverse, multiply, CoverElement};
use crate::classdata::{Cayley, GroupData};
use crate::error::{Error, Result};
use crate::partitions::{ClassLabel, Partition, Pvf};
use crate::spintable::Presentation;

/// Largest cover the oracle will enumerate.
pub const COVER_CAP: u64 = 20_000;

/// One brute-force conjugacy class.
#[derive(Clone, Debug)]
pub struct CoverClass {
    /// Index of the first element found in the class.
    pub representative: usize,
    pub size: usize,
    pub label: ClassLabel,
    /// The class of z times the representative; equal to the class itself unless it splits.
    pub partner: usize,
}

impl CoverClass {
    pub fn is_split(&self, me: usize) -> bool {
        self.partner != me
    }
}

/// An explicitly enumerated double cover of Γ ≀ B_n.
#[derive(Clone, Debug)]
pub struct Cover {
    pub n: usize,
    pub group: GroupData,
    pub presentation: Presentation,
    cayley: Cayley,
    pub elements: Vec<CoverElement>,
    index: HashMap<CoverElement, usize>,
    pub class_of: Vec<usize>,
    pub classes: Vec<CoverClass>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for k in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=k).map(move |pos| {
                    let mut q = p.clone();
                    q.insert(pos, k);
                    q
                })
            })
            .collect();
    }
    out.sort();
    out
}

/// Predicted order 2(2|Γ|)ⁿn!.
pub fn predicted_order(n: usize, order: u64) -> u64 {
    let fact: u64 = (1..=n as u64).product();
    2 * (2 * order).pow(n as u32) * fact
}

/// Enumerates the cover of rank n over Γ and its conjugacy classes.
pub fn build_cover(n: usize, g: &GroupData, presentation: Presentation) -> Result<Cover> {
    let cayley = g
        .cayley
        .clone()
        .ok_or_else(|| Error::InvalidGroup(format!("{} has no multiplication table", g.name)))?;
    let order = predicted_order(n, g.order);
    if n == 0 || n > 4 || g.order > 3 {
        return Err(Error::Precondition(format!(
            "explicit covers need 1 ≤ n ≤ 4 and |Γ| ≤ 3, got n = {n} and |Γ| = {}",
            g.order
        )));
    }
    if order > COVER_CAP {
        return Err(Error::CoverTooLarge { order, cap: COVER_CAP });
    }
    let k = g.order as usize;
    let perms = permutations(n);
    let mut elements = Vec::with_capacity(order as usize);
    for sign in 0..2u8 {
        for code in 0..k.pow(n as u32) {
            let colors: Vec<usize> = (0..n).map(|j| code / k.pow(j as u32) % k).collect();
            for aword in 0..1u32 << n {
                for perm in &perms {
                    elements.push(CoverElement { sign, colors: colors.clone(), aword, perm: perm.clone() });
                }
            }
        }
    }
    let index: HashMap<CoverElement, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut cover = Cover {
        n,
        group: g.clone(),
        presentation,
        cayley,
        elements,
        index,
        class_of: Vec::new(),
        classes: Vec::new(),
    };
    cover.close_classes()?;
    Ok(cover)
}

impl Cover {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn cayley(&self) -> &Cayley {
        &self.cayley
    }

    pub fn multiply(&self, x: &CoverElement, y: &CoverElement) -> Result<CoverElement> {
        multiply(x, y, &self.cayley, self.presentation)
    }

    pub fn inverse(&self, x: &CoverElement) -> Result<CoverElement> {
        inverse(x, &self.cayley, self.presentation)
    }

    pub fn index_of(&self, x: &CoverElement) -> Result<usize> {
        self.index
            .get(x)
            .copied()
            .ok_or_else(|| Error::AmbientMismatch(format!("{x:?} is not an element of this cover")))
    }

    pub fn class_of_element(&self, x: &CoverElement) -> Result<usize> {
        Ok(self.class_of[self.index_of(x)?])
    }

    /// Simple transpositions, odd generators, and every element of Γ at index 0.
    pub fn generators(&self) -> Vec<CoverElement> {
        let n = self.n;
        let mut out: Vec<CoverElement> = (0..n - 1).map(|i| CoverElement::s(n, i)).collect();
        out.extend((0..n).map(|j| CoverElement::a(n, j)));
        out.extend((1..self.group.order as usize).map(|h| CoverElement::color(n, 0, h)));
        out
    }

    fn close_classes(&mut self) -> Result<()> {
        let gens = self.generators();
        let ginv = gens.iter().map(|g| self.inverse(g)).collect::<Result<Vec<_>>>()?;
        let mut class_of = vec![usize::MAX; self.elements.len()];
        let mut reps = Vec::new();
        for start in 0..self.elements.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(start);
            class_of[start] = id;
            let mut stack = vec![start];
            while let Some(y) = stack.pop() {
                for (g, gi) in gens.iter().zip(&ginv) {
                    let w = self.multiply(&self.multiply(g, &self.elements[y])?, gi)?;
                    let wi = self.index_of(&w)?;
                    if class_of[wi] == usize::MAX {
                        class_of[wi] = id;
                        stack.push(wi);
                    }
                }
            }
        }
        let mut sizes = vec![0usize; reps.len()];
        for &c in &class_of {
            sizes[c] += 1;
        }
        let mut classes = Vec::with_capacity(reps.len());
        for (id, &r) in reps.iter().enumerate() {
            let label = self.type_of_element(&self.elements[r]);
            let partner = class_of[self.index_of(&self.elements[r].times_z())?];
            classes.push(CoverClass { representative: r, size: sizes[id], label, partner });
        }
        self.class_of = class_of;
        self.classes = classes;
        Ok(())
    }

    /// The signed cycle type: each cycle of σ contributes its length to ρ⁺ or ρ⁻
    /// by the parity of |I| on the cycle, colored by the class of g_{j_m}⋯g_{j_1}.
    pub fn type_of_element(&self, x: &CoverElement) -> ClassLabel {
        let n = x.rank();
        let mut seen = vec![false; n];
        let mut pos: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        let mut neg: BTreeMap<usize, Vec<u32>> = BTreeMap::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut prod = 0;
            let mut len = 0;
            let mut odd = 0;
            let mut j = start;
            loop {
                seen[j] = true;
                prod = self.cayley.mul(x.colors[j], prod);
                len += 1;
                odd += (x.aword >> j & 1) as usize;
                j = x.perm[j];
                if j == start {
                    break;
                }
            }
            let side = if odd % 2 == 1 { &mut neg } else { &mut pos };
            side.entry(self.cayley.class_of[prod]).or_default().push(len);
        }
        let pvf = |m: BTreeMap<usize, Vec<u32>>| {
            Pvf::from_entries(m.into_iter().map(|(c, v)| (c, Partition::from_unsorted(v).expect("positive"))))
        };
        ClassLabel::new(pvf(pos), pvf(neg))
    }

    /// D⁺ over a base class: one cycle j → j + 1 per consecutive block, positive
    /// blocks first, colors in class order with parts descending, the class
    /// representative of Γ and the odd generator at the first index of each block.
    pub fn canonical_representative(&self, label: &ClassLabel) -> Result<CoverElement> {
        if label.weight() as usize != self.n {
            return Err(Error::AmbientMismatch(format!("class of weight {} in rank {}", label.weight(), self.n)));
        }
        let reps = self.cayley.representatives(self.group.num_classes());
        let mut x = CoverElement::identity(self.n);
        let mut start = 0;
        for (negative, side) in [(false, &label.positive), (true, &label.negative)] {
            for (r, c) in side.colored_parts() {
                let r = r as usize;
                for j in start..start + r {
                    x.perm[j] = if j + 1 == start + r { start } else { j + 1 };
                }
                x.colors[start] = *reps.get(c).ok_or_else(|| Error::UnknownColor(c.to_string()))?;
                if negative {
                    x.aword |= 1 << start;
                }
                start += r;
            }
        }
        Ok(x)
    }

    /// Base classes whose preimage breaks into two classes.
    pub fn empirical_splits(&self) -> BTreeSet<ClassLabel> {
        self.classes
            .iter()
            .enumerate()
            .filter(|(i, c)| c.is_split(*i))
            .map(|(_, c)| c.label.clone())
            .collect()
    }

    /// Distinct types realized by elements of the cover.
    pub fn realized_types(&self) -> BTreeSet<ClassLabel> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }

    /// Whether every element of each class has the class's type.
    pub fn type_is_class_invariant(&self) -> bool {
        self.elements
            .iter()
            .zip(&self.class_of)
            .all(|(x, &c)| self.type_of_element(x) == self.classes[c].label)
    }

    pub fn statistics(&self) -> ClassStatistics {
        let mut sizes: Vec<(ClassLabel, usize)> = self.classes.iter().map(|c| (c.label.clone(), c.size)).collect();
        sizes.sort();
        ClassStatistics {
            order: self.order(),
            class_count: self.classes.len(),
            splits: self.empirical_splits(),
            sizes,
        }
    }
}

/// Presentation-independent summary of the class structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassStatistics {
    pub order: usize,
    pub class_count: usize,
    pub splits: BTreeSet<ClassLabel>,
    /// (type, size) for every class, sorted.
    pub sizes: Vec<(ClassLabel, usize)>,
}

/// Class statistics of the a-form and b-form covers of the same rank.
pub fn compare_presentations(n: usize, g: &GroupData) -> Result<(ClassStatistics, ClassStatistics)> {
    let a = build_cover(n, g, Presentation::AForm)?.statistics();
    let b = build_cover(n, g, Presentation::BForm)?.statistics();
    Ok((a, b))
}
