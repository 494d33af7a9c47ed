use crate::classdata::Cayley;
use crate::error::{Error, Result};
use crate::spintable::Presentation;

/// z^sign · (g_1, …, g_n) · a_I · σ in normal form.
///
/// `aword` is the index set I as a bitmask (bit j for index j, 0-based), with the
/// a-generators taken in increasing index order. `perm[j]` is σ(j). `colors` are
/// element indices of Γ's multiplication table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoverElement {
    pub sign: u8,
    pub colors: Vec<usize>,
    pub aword: u32,
    pub perm: Vec<usize>,
}

impl CoverElement {
    pub fn identity(n: usize) -> Self {
        CoverElement { sign: 0, colors: vec![0; n], aword: 0, perm: (0..n).collect() }
    }

    /// The central element z.
    pub fn z(n: usize) -> Self {
        CoverElement { sign: 1, ..Self::identity(n) }
    }

    /// The odd generator at index j (a_j or τ_j, depending on the presentation).
    pub fn a(n: usize, j: usize) -> Self {
        CoverElement { aword: 1 << j, ..Self::identity(n) }
    }

    /// The simple transposition exchanging i and i + 1.
    pub fn s(n: usize, i: usize) -> Self {
        let mut e = Self::identity(n);
        e.perm.swap(i, i + 1);
        e
    }

    /// The element h of Γ placed at index j.
    pub fn color(n: usize, j: usize, h: usize) -> Self {
        let mut e = Self::identity(n);
        e.colors[j] = h;
        e
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// |I| mod 2.
    pub fn parity(&self) -> u8 {
        (self.aword.count_ones() % 2) as u8
    }

    pub fn times_z(&self) -> Self {
        CoverElement { sign: self.sign ^ 1, ..self.clone() }
    }

    fn check(&self, n: usize, order: usize) -> Result<()> {
        let mut seen = vec![false; n];
        let ok = self.perm.len() == n
            && self.colors.len() == n
            && self.sign <= 1
            && (n >= 32 || self.aword >> n == 0)
            && self.colors.iter().all(|&h| h < order)
            && self.perm.iter().all(|&p| p < n && !std::mem::replace(&mut seen[p], true));
        if ok {
            Ok(())
        } else {
            Err(Error::AmbientMismatch(format!("element {self:?} does not live in rank {n} over a group of order {order}")))
        }
    }
}

/// Product in the cover; see [`CoverElement`] for the normal form.
///
/// Moving σ_x past a_J gives a_{σ_x(J)} reordered, which costs one z per
/// inversion. Merging a_I with a_K costs one z per pair (i, k) with i > k, and
/// in the a-form one more per common index since a_j² = z.
pub fn multiply(
    x: &CoverElement,
    y: &CoverElement,
    cayley: &Cayley,
    presentation: Presentation,
) -> Result<CoverElement> {
    let n = x.rank();
    x.check(n, cayley.table.len())?;
    y.check(n, cayley.table.len())?;
    let seq: Vec<usize> = (0..n).filter(|&j| y.aword >> j & 1 == 1).map(|j| x.perm[j]).collect();
    let mut c = 0u32;
    for a in 0..seq.len() {
        for b in a + 1..seq.len() {
            if seq[a] > seq[b] {
                c += 1;
            }
        }
    }
    let k: u32 = seq.iter().fold(0, |m, &j| m | 1 << j);
    for i in 0..n {
        if x.aword >> i & 1 == 1 {
            c += (k & ((1u32 << i) - 1)).count_ones();
        }
    }
    if presentation == Presentation::AForm {
        c += (x.aword & k).count_ones();
    }
    let mut inv = vec![0; n];
    for (i, &p) in x.perm.iter().enumerate() {
        inv[p] = i;
    }
    let colors = (0..n).map(|i| cayley.mul(x.colors[i], y.colors[inv[i]])).collect();
    let perm = (0..n).map(|i| x.perm[y.perm[i]]).collect();
    Ok(CoverElement { sign: ((x.sign as u32 + y.sign as u32 + c) % 2) as u8, colors, aword: x.aword ^ k, perm })
}

/// Inverse, found by solving for the Γⁿ, I and σ parts and fixing the sign.
pub fn inverse(x: &CoverElement, cayley: &Cayley, presentation: Presentation) -> Result<CoverElement> {
    let n = x.rank();
    let mut pinv = vec![0; n];
    for (i, &p) in x.perm.iter().enumerate() {
        pinv[p] = i;
    }
    let aword = (0..n).filter(|&i| x.aword >> i & 1 == 1).fold(0u32, |m, i| m | 1 << pinv[i]);
    let colors = (0..n).map(|j| cayley.inverse(x.colors[x.perm[j]])).collect();
    let y = CoverElement { sign: 0, colors, aword, perm: pinv };
    let p = multiply(x, &y, cayley, presentation)?;
    Ok(CoverElement { sign: p.sign, ..y })
}
