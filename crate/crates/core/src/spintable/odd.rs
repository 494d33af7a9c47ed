//! Character values on odd split classes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::classdata::GroupData;
use crate::error::{Error, Result};
use crate::exactnum::CycloValue;
use crate::partitions::{Partition, Pvf};
use crate::qfunctions::{char_value, Algebra};

/// Which defining relations the hyperoctahedral cover is built from.
///
/// `AForm`: generators a_j with a_j² = z, pairwise anticommuting up to z.
/// `BForm`: generators τ_j with τ_j² = 1, pairwise anticommuting up to z.
/// The two covers are isomorphic via a_j ↦ iτ_j inside the twisted group
/// algebra, so values at an odd class of length l differ by i^l.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Presentation {
    #[default]
    AForm,
    BForm,
}

impl std::fmt::Display for Presentation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Presentation::AForm => "a_form",
            Presentation::BForm => "b_form",
        })
    }
}

impl std::str::FromStr for Presentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a_form" | "a" => Ok(Presentation::AForm),
            "b_form" | "b" => Ok(Presentation::BForm),
            _ => Err(Error::Parse { text: s.into(), reason: "expected a_form or b_form".into() }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorKind {
    DoubleSpin,
    Associate,
}

/// One tensor factor of a reduced Clifford product: its kind, its character value
/// at the factor's input, and the difference-character value there (only read
/// for double-spin factors).
#[derive(Clone, Debug)]
pub struct Factor {
    pub kind: FactorKind,
    pub value: CycloValue,
    pub difference: CycloValue,
}

impl Factor {
    pub fn associate(value: CycloValue) -> Self {
        Factor { kind: FactorKind::Associate, value, difference: CycloValue::zero() }
    }

    pub fn double_spin(value: CycloValue, difference: CycloValue) -> Self {
        Factor { kind: FactorKind::DoubleSpin, value, difference }
    }
}

/// Value of the reduced product of spin characters at a tuple of inputs with the
/// given parities.
///
/// With k associate factors: all-even inputs give 2^{[k/2]} ∏ values; for k odd,
/// even inputs on the double-spin factors and odd inputs on the associate ones
/// give (2i)^{(k−1)/2} ∏ differences · ∏ values; every other pattern gives 0.
pub fn star_product_values(factors: &[Factor], parities: &[u8]) -> Result<CycloValue> {
    if factors.len() != parities.len() {
        return Err(Error::Precondition(format!(
            "{} factors but {} parities",
            factors.len(),
            parities.len()
        )));
    }
    if parities.iter().any(|&p| p > 1) {
        return Err(Error::Precondition("parities must be 0 or 1".into()));
    }
    let k = factors.iter().filter(|f| f.kind == FactorKind::Associate).count();
    if parities.iter().all(|&p| p == 0) {
        let prod = factors.iter().fold(CycloValue::one(), |acc, f| &acc * &f.value);
        return Ok(prod.scale(&BigRational::from_integer(BigInt::from(2).pow((k / 2) as u32))));
    }
    let odd_pattern = factors.iter().zip(parities).all(|(f, &p)| match f.kind {
        FactorKind::DoubleSpin => p == 0,
        FactorKind::Associate => p == 1,
    });
    if k % 2 == 1 && odd_pattern {
        let prod = factors.iter().fold(CycloValue::one(), |acc, f| match f.kind {
            FactorKind::DoubleSpin => &acc * &f.difference,
            FactorKind::Associate => &acc * &f.value,
        });
        let two_i = &CycloValue::from_int(2) * &CycloValue::i();
        return Ok(&prod * &two_i.pow(((k - 1) / 2) as u32));
    }
    Ok(CycloValue::zero())
}

fn sqrt_int(n: &BigInt) -> CycloValue {
    CycloValue::sqrt_rational(&BigRational::from_integer(n.clone())).expect("positive")
}

fn sqrt_half(n: &BigInt) -> CycloValue {
    CycloValue::sqrt_rational(&BigRational::new(n.clone(), BigInt::from(2))).expect("positive")
}

/// Closed form 2^{l/2} i^{(n−m)/2} √(ν₁⋯ν_l/2) for the "+" member of the
/// associate pair ν of the hyperoctahedral cover at the odd class μ (zero unless
/// μ = ν); m is the number of odd parts of ν.
///
/// The phase i^{(n−m)/2} is the classical normalization; the tables use
/// [`odd_split_value`], whose phase is fixed by an explicit presentation.
pub fn hyperoctahedral_odd_closed_form(nu: &Partition, mu: &Partition) -> Result<CycloValue> {
    if !nu.is_strict() || nu.len() % 2 == 0 {
        return Err(Error::Precondition(format!(
            "{} has even length: its character is self-associate (type M) and has no associate pair",
            nu.label()
        )));
    }
    if mu != nu {
        return Ok(CycloValue::zero());
    }
    let n = nu.weight() as usize;
    let m = nu.odd_parts();
    assert!((n - m) % 2 == 0, "n − m is even for every partition");
    let two_l = BigRational::from_integer(BigInt::from(2).pow(nu.len() as u32));
    let root = CycloValue::sqrt_rational(&(two_l * BigRational::new(nu.product(), BigInt::from(2))))?;
    Ok(&root * &CycloValue::i_pow(((n - m) / 2) as i64))
}

/// Value i^{(n−l+1)/2} √(ν₁⋯ν_l/2) of the "+" member of the associate pair ν of
/// the spin symmetric group at the odd class μ (zero unless μ = ν).
pub fn symmetric_odd_value(nu: &Partition, mu: &Partition) -> Result<CycloValue> {
    if !nu.is_strict() || nu.parity() == 0 {
        return Err(Error::Precondition(format!(
            "{} has n − l even: its character is self-associate",
            nu.label()
        )));
    }
    if mu != nu {
        return Ok(CycloValue::zero());
    }
    let e = (nu.weight() as usize - nu.len() + 1) / 2;
    Ok(&sqrt_half(&nu.product()) * &CycloValue::i_pow(e as i64))
}

/// Value of χ⁺_λ at D⁺_ρ for an odd split class ρ (on classes of Γ) and a
/// strict λ of odd length (on characters of Γ).
///
/// Nonzero only when ρ and λ have the same underlying partition. Then, with the
/// parts of both listed color-major and descending, the value is
/// Σ_β sgn(β) ∏_j γ_{β(j)}(c_j) times the reduced product of the one-cycle
/// values √r_j, summed over size-preserving bijections β of parts; the a-form
/// adds i^{l(ρ)}.
pub fn odd_split_value(lambda: &Pvf, rho: &Pvf, g: &GroupData, presentation: Presentation) -> CycloValue {
    if lambda.len() % 2 == 0 || lambda.underlying() != rho.underlying() {
        return CycloValue::zero();
    }
    let src = rho.colored_parts();
    let dst = lambda.colored_parts();
    let mut sum = CycloValue::zero();
    let mut used = vec![false; dst.len()];
    let mut perm = Vec::with_capacity(src.len());
    bijections(&src, &dst, &mut used, &mut perm, &mut |perm| {
        let mut term = CycloValue::from_int(perm_sign(perm));
        for (j, &t) in perm.iter().enumerate() {
            term = &term * g.value(dst[t].1, src[j].1);
        }
        sum = &sum + &term;
    });
    if sum.is_zero() {
        return sum;
    }
    let factors: Vec<Factor> =
        src.iter().map(|&(r, _)| Factor::associate(sqrt_int(&BigInt::from(r)))).collect();
    let star = star_product_values(&factors, &vec![1; factors.len()]).expect("aligned");
    let value = &sum * &star;
    match presentation {
        Presentation::BForm => value,
        Presentation::AForm => &value * &CycloValue::i_pow(rho.len() as i64),
    }
}

fn bijections(
    src: &[(u32, usize)],
    dst: &[(u32, usize)],
    used: &mut Vec<bool>,
    perm: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    let j = perm.len();
    if j == src.len() {
        visit(perm);
        return;
    }
    for t in 0..dst.len() {
        if !used[t] && dst[t].0 == src[j].0 {
            used[t] = true;
            perm.push(t);
            bijections(src, dst, used, perm, visit);
            perm.pop();
            used[t] = false;
        }
    }
}

fn perm_sign(perm: &[usize]) -> i64 {
    let mut inv = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Closed form for χ⁺_λ(D⁺_ρ) summed over decompositions ρ = ∪_γ ρ_γ in which
/// ρ_γ is a coloring of λ_γ for each γ with l(λ_γ) odd (the set J) and ρ_γ is odd
/// and strict of weight ‖λ_γ‖ for the remaining γ (the set J′):
///
/// ∏_γ ∏_c γ(c)^{l(ρ_γ(c))} · ∏_{γ∈J′} ξ_{λ_γ}(ρ̄_γ) · 2^{l_J/2} i^{(‖ρ‖_J − m_J)/2} √(∏_{γ∈J} ∏_c z_{ρ_γ(c)} / 2).
///
/// For Γ trivial this is [`hyperoctahedral_odd_closed_form`].
pub fn wreath_odd_closed_form(lambda: &Pvf, rho: &Pvf, g: &GroupData) -> Result<CycloValue> {
    if lambda.len() % 2 == 0 {
        return Err(Error::Precondition(format!(
            "{} has even length: no associate pair",
            lambda.label(&g.character_labels())
        )));
    }
    if rho.len() % 2 == 0 || !rho.is_strict() {
        return Ok(CycloValue::zero());
    }
    let gammas: Vec<(usize, &Partition)> = lambda.entries().collect();
    let parts = rho.colored_parts();
    let mut total = CycloValue::zero();
    let mut assign = vec![0usize; parts.len()];
    let combos = gammas.len().pow(parts.len() as u32);
    for code in 0..combos {
        let mut x = code;
        for a in assign.iter_mut() {
            *a = x % gammas.len();
            x /= gammas.len();
        }
        let mut pieces: Vec<Vec<(usize, Partition)>> = vec![Vec::new(); gammas.len()];
        for (slot, &(r, c)) in parts.iter().enumerate() {
            let bucket = &mut pieces[assign[slot]];
            match bucket.iter_mut().find(|(cc, _)| *cc == c) {
                Some((_, p)) => {
                    let mut v = p.parts().to_vec();
                    v.push(r);
                    *p = Partition::from_unsorted(v).expect("positive");
                }
                None => bucket.push((c, Partition::new(vec![r]).expect("positive"))),
            }
        }
        let mut ok = true;
        let mut term = CycloValue::one();
        let mut l_j = 0usize;
        let mut weight_j = 0u32;
        let mut odd_j = 0usize;
        let mut zprod = BigInt::one();
        for (k, &(gamma, lam)) in gammas.iter().enumerate() {
            let piece = Pvf::from_entries(pieces[k].iter().cloned());
            if piece.weight() != lam.weight() {
                ok = false;
                break;
            }
            for (c, p) in piece.entries() {
                term = &term * &g.value(gamma, c).pow(p.len() as u32);
            }
            if lam.len() % 2 == 1 {
                if piece.underlying() != *lam {
                    ok = false;
                    break;
                }
                l_j += lam.len();
                weight_j += piece.weight();
                odd_j += piece.underlying().odd_parts();
                for (_, p) in piece.entries() {
                    zprod *= p.z_order();
                }
            } else {
                if !(piece.is_odd() && piece.is_strict()) {
                    ok = false;
                    break;
                }
                let xi = char_value(lam, &piece.underlying(), Algebra::B)?;
                term = term.scale(&xi);
            }
        }
        if !ok || term.is_zero() {
            continue;
        }
        let phase = (weight_j as usize - odd_j) / 2;
        let scale = BigRational::from_integer(BigInt::from(2).pow(l_j as u32)) * BigRational::new(zprod, BigInt::from(2));
        let root = CycloValue::sqrt_rational(&scale)?;
        total = &total + &(&(&term * &root) * &CycloValue::i_pow(phase as i64));
    }
    Ok(total)
}
