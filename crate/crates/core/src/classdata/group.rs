use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::CycloValue;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupClass {
    pub label: String,
    pub size: u64,
    /// Index of the class of inverses.
    pub inverse: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupCharacter {
    pub label: String,
    pub values: Vec<CycloValue>,
}

/// An explicit multiplication table; element 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cayley {
    pub table: Vec<Vec<usize>>,
    /// Class index of every element.
    pub class_of: Vec<usize>,
}

impl Cayley {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.table[a].iter().position(|&x| x == 0).expect("group element has an inverse")
    }

    /// First element of each class, used as the class representative.
    pub fn representatives(&self, classes: usize) -> Vec<usize> {
        (0..classes)
            .map(|c| self.class_of.iter().position(|&k| k == c).expect("non-empty class"))
            .collect()
    }
}

/// Class and character data of a finite group Γ.
///
/// Class 0 is the identity class, so `values[0]` of a character is its degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    pub name: String,
    pub order: u64,
    pub classes: Vec<GroupClass>,
    pub characters: Vec<GroupCharacter>,
    pub cayley: Option<Cayley>,
}

#[derive(Serialize, Deserialize)]
struct GroupDoc {
    name: String,
    order: u64,
    classes: Vec<ClassDoc>,
    characters: Vec<CharDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    cayley: Option<Cayley>,
}

#[derive(Serialize, Deserialize)]
struct ClassDoc {
    label: String,
    size: u64,
    inverse: String,
}

#[derive(Serialize, Deserialize)]
struct CharDoc {
    label: String,
    values: Vec<String>,
}

impl GroupData {
    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_labels(&self) -> Vec<String> {
        self.classes.iter().map(|c| c.label.clone()).collect()
    }

    pub fn character_labels(&self) -> Vec<String> {
        self.characters.iter().map(|c| c.label.clone()).collect()
    }

    /// ζ_c = |Γ| / |c|.
    pub fn centralizer_order(&self, c: usize) -> u64 {
        self.order / self.classes[c].size
    }

    pub fn value(&self, chi: usize, c: usize) -> &CycloValue {
        &self.characters[chi].values[c]
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    /// Parses and validates a group document.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GroupDoc = serde_json::from_str(text)?;
        let labels: Vec<&str> = doc.classes.iter().map(|c| c.label.as_str()).collect();
        let classes = doc
            .classes
            .iter()
            .map(|c| {
                let inverse = labels
                    .iter()
                    .position(|l| *l == c.inverse)
                    .ok_or_else(|| Error::InvalidGroup(format!("class {}: unknown inverse class {}", c.label, c.inverse)))?;
                Ok(GroupClass { label: c.label.clone(), size: c.size, inverse })
            })
            .collect::<Result<Vec<_>>>()?;
        let characters = doc
            .characters
            .iter()
            .map(|ch| {
                let values = ch.values.iter().map(|v| v.parse()).collect::<Result<Vec<CycloValue>>>()?;
                Ok(GroupCharacter { label: ch.label.clone(), values })
            })
            .collect::<Result<Vec<_>>>()?;
        let g = GroupData { name: doc.name, order: doc.order, classes, characters, cayley: doc.cayley };
        g.validate()?;
        Ok(g)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// `builtin:<id>` or a path to a group file.
    pub fn resolve(source: &str) -> Result<Self> {
        match source.strip_prefix("builtin:") {
            Some(id) => super::builtin::builtin(id),
            None => Self::from_path(Path::new(source)),
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = GroupDoc {
            name: self.name.clone(),
            order: self.order,
            classes: self
                .classes
                .iter()
                .map(|c| ClassDoc { label: c.label.clone(), size: c.size, inverse: self.classes[c.inverse].label.clone() })
                .collect(),
            characters: self
                .characters
                .iter()
                .map(|ch| CharDoc { label: ch.label.clone(), values: ch.values.iter().map(|v| v.to_string()).collect() })
                .collect(),
            cayley: self.cayley.clone(),
        };
        serde_json::to_value(doc).expect("group document serializes")
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        Self::from_json(&v.to_string())
    }

    /// Exact consistency checks: sizes, inverses, both orthogonality relations,
    /// and the multiplication table when present.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidGroup(format!("{}: {m}", self.name)));
        let k = self.classes.len();
        if k == 0 {
            return bad("no classes".into());
        }
        if self.characters.len() != k {
            return bad(format!("{} classes but {} characters", k, self.characters.len()));
        }
        let total: u64 = self.classes.iter().map(|c| c.size).sum();
        if total != self.order {
            return bad(format!("class sizes sum to {total}, order is {}", self.order));
        }
        if self.classes[0].size != 1 {
            return bad("class 0 must be the identity class".into());
        }
        for c in &self.classes {
            if c.size == 0 || self.order % c.size != 0 {
                return bad(format!("class {} has size {} not dividing {}", c.label, c.size, self.order));
            }
            if self.classes[c.inverse].size != c.size {
                return bad(format!("class {} and its inverse class differ in size", c.label));
            }
        }
        for (i, c) in self.classes.iter().enumerate() {
            if self.classes[c.inverse].inverse != i {
                return bad(format!("inverse of the inverse of class {} is not itself", c.label));
            }
        }
        for ch in &self.characters {
            if ch.values.len() != k {
                return bad(format!("character {} has {} values for {} classes", ch.label, ch.values.len(), k));
            }
            for (i, c) in self.classes.iter().enumerate() {
                if ch.values[c.inverse] != ch.values[i].conj() {
                    return bad(format!("character {} at class {}: value at the inverse class is not the conjugate", ch.label, c.label));
                }
            }
        }
        let order = CycloValue::from_int(self.order as i64);
        for (a, x) in self.characters.iter().enumerate() {
            for (b, y) in self.characters.iter().enumerate() {
                let mut s = CycloValue::zero();
                for (i, c) in self.classes.iter().enumerate() {
                    let t = &x.values[i] * &y.values[i].conj();
                    s = &s + &t.scale(&BigRational::from_integer(BigInt::from(c.size)));
                }
                let want = if a == b { order.clone() } else { CycloValue::zero() };
                if s != want {
                    return bad(format!("row orthogonality fails for ({}, {}): sum is {s}, expected {want}", x.label, y.label));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                let s: CycloValue = self.characters.iter().map(|ch| &ch.values[i] * &ch.values[j].conj()).sum();
                let want = if i == j { CycloValue::from_int(self.centralizer_order(i) as i64) } else { CycloValue::zero() };
                if s != want {
                    return bad(format!(
                        "column orthogonality fails for ({}, {}): sum is {s}, expected {want}",
                        self.classes[i].label, self.classes[j].label
                    ));
                }
            }
        }
        if let Some(cay) = &self.cayley {
            self.validate_cayley(cay)?;
        }
        Ok(())
    }

    fn validate_cayley(&self, cay: &Cayley) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidGroup(format!("{}: multiplication table: {m}", self.name)));
        let n = self.order as usize;
        if cay.table.len() != n || cay.table.iter().any(|r| r.len() != n) || cay.class_of.len() != n {
            return bad("dimensions do not match the order".into());
        }
        if cay.table.iter().flatten().any(|&x| x >= n) || cay.class_of.iter().any(|&c| c >= self.classes.len()) {
            return bad("entry out of range".into());
        }
        for a in 0..n {
            if cay.table[0][a] != a || cay.table[a][0] != a {
                return bad("element 0 is not the identity".into());
            }
            let mut seen = vec![false; n];
            for &x in &cay.table[a] {
                seen[x] = true;
            }
            if seen.iter().any(|s| !s) {
                return bad(format!("row {a} is not a permutation"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if cay.table[cay.table[a][b]][c] != cay.table[a][cay.table[b][c]] {
                        return bad(format!("not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
        for a in 0..n {
            for g in 0..n {
                let conj = cay.mul(cay.mul(g, a), cay.inverse(g));
                if cay.class_of[conj] != cay.class_of[a] {
                    return bad(format!("class_of is not conjugation invariant at element {a}"));
                }
            }
            let inv = cay.inverse(a);
            if cay.class_of[inv] != self.classes[cay.class_of[a]].inverse {
                return bad(format!("inverse class mismatch at element {a}"));
            }
        }
        for (c, class) in self.classes.iter().enumerate() {
            let count = cay.class_of.iter().filter(|&&k| k == c).count() as u64;
            if count != class.size {
                return bad(format!("class {} has {count} elements, size says {}", class.label, class.size));
            }
        }
        // classes must be single conjugacy orbits
        let reps = cay.representatives(self.classes.len());
        for (c, &r) in reps.iter().enumerate() {
            let mut orbit = vec![false; n];
            for g in 0..n {
                orbit[cay.mul(cay.mul(g, r), cay.inverse(g))] = true;
            }
            if orbit.iter().filter(|&&x| x).count() as u64 != self.classes[c].size {
                return bad(format!("class {} is not a single conjugacy class", self.classes[c].label));
            }
        }
        Ok(())
    }
}
