//! Even-class values of the wreath family from products of Q-functions in
//! colored power sums.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::classdata::{builtin, z_wreath, GroupData};
use crate::exactnum::CycloValue;
use crate::partitions::{ClassLabel, Partition, Pvf};
use crate::qfunctions::q_general;

/// Candidate weights w(γ, c) in p_r(γ) = Σ_c w(γ, c) p_r(c).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubstitutionWeight {
    /// γ(c)
    Character,
    /// γ(c) / ζ_c
    CharacterOverCentralizer,
    /// |c| γ(c) / |Γ|
    ClassFraction,
}

impl SubstitutionWeight {
    pub const CANDIDATES: [SubstitutionWeight; 3] = [
        SubstitutionWeight::Character,
        SubstitutionWeight::CharacterOverCentralizer,
        SubstitutionWeight::ClassFraction,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubstitutionWeight::Character => "gamma(c)",
            SubstitutionWeight::CharacterOverCentralizer => "gamma(c)/centralizer(c)",
            SubstitutionWeight::ClassFraction => "|c|*gamma(c)/|G|",
        }
    }

    pub fn weight(self, g: &GroupData, gamma: usize, c: usize) -> CycloValue {
        let v = g.value(gamma, c);
        match self {
            SubstitutionWeight::Character => v.clone(),
            SubstitutionWeight::CharacterOverCentralizer => {
                v.scale(&BigRational::new(1.into(), BigInt::from(g.centralizer_order(c))))
            }
            SubstitutionWeight::ClassFraction => {
                v.scale(&BigRational::new(BigInt::from(g.classes[c].size), BigInt::from(g.order)))
            }
        }
    }
}

/// Colored power-sum polynomial: monomial ∏_c p_{ρ(c)}(c) keyed by ρ.
type Colored = BTreeMap<Pvf, CycloValue>;

fn add_part(f: &Pvf, c: usize, r: u32) -> Pvf {
    let mut entries: Vec<(usize, Partition)> = f.entries().map(|(k, p)| (k, p.clone())).collect();
    match entries.iter_mut().find(|(k, _)| *k == c) {
        Some((_, p)) => {
            let mut v = p.parts().to_vec();
            v.push(r);
            *p = Partition::from_unsorted(v).expect("positive");
        }
        None => entries.push((c, Partition::new(vec![r]).expect("positive"))),
    }
    Pvf::from_entries(entries)
}

fn merge(a: &Pvf, b: &Pvf) -> Pvf {
    let mut out = a.clone();
    for (c, p) in b.entries() {
        for &r in p.parts() {
            out = add_part(&out, c, r);
        }
    }
    out
}

fn accumulate(map: &mut Colored, key: Pvf, v: CycloValue) {
    let e = map.entry(key.clone()).or_insert_with(CycloValue::zero);
    *e = &*e + &v;
    if e.is_zero() {
        map.remove(&key);
    }
}

/// Q_{λ_γ}(γ) with each p_r(γ) replaced by Σ_c w(γ,c) p_r(c).
fn expand_color(lam: &Partition, gamma: usize, g: &GroupData, w: SubstitutionWeight) -> Colored {
    let q = q_general(lam).expect("strict component");
    let weights: Vec<CycloValue> = (0..g.num_classes()).map(|c| w.weight(g, gamma, c)).collect();
    let mut out = Colored::new();
    for (mu, coeff) in q.terms() {
        let mut partial: Colored = [(Pvf::empty(), CycloValue::from_rational(coeff))].into();
        for &r in mu.parts() {
            let mut next = Colored::new();
            for (key, v) in &partial {
                for (c, wc) in weights.iter().enumerate() {
                    if !wc.is_zero() {
                        accumulate(&mut next, add_part(key, c, r), v * wc);
                    }
                }
            }
            partial = next;
        }
        for (key, v) in partial {
            accumulate(&mut out, key, v);
        }
    }
    out
}

/// Supercharacter expansion ∏_γ Q_{λ_γ}(γ) in the colored power sums p_ρ.
pub fn colored_expansion(lambda: &Pvf, g: &GroupData, w: SubstitutionWeight) -> BTreeMap<Pvf, CycloValue> {
    let mut acc: Colored = [(Pvf::empty(), CycloValue::one())].into();
    for (gamma, lam) in lambda.entries() {
        let factor = expand_color(lam, gamma, g, w);
        let mut next = Colored::new();
        for (a, x) in &acc {
            for (b, y) in &factor {
                accumulate(&mut next, merge(a, b), x * y);
            }
        }
        acc = next;
    }
    acc
}

/// Ordinary character values of the row λ on the even split classes: the
/// coefficient of p_ρ rescaled by 2^{−[l(λ)/2]} Z_ρ, halved for l(λ) odd.
pub fn wreath_q_expand_with(lambda: &Pvf, g: &GroupData, w: SubstitutionWeight) -> BTreeMap<ClassLabel, CycloValue> {
    let mut denom = BigInt::from(2).pow((lambda.len() / 2) as u32);
    if lambda.len() % 2 == 1 {
        denom *= 2;
    }
    colored_expansion(lambda, g, w)
        .into_iter()
        .map(|(rho, c)| {
            let scale = BigRational::new(z_wreath(&rho, g), denom.clone());
            (ClassLabel::new(rho, Pvf::empty()), c.scale(&scale))
        })
        .collect()
}

/// [`wreath_q_expand_with`] using the selected substitution weight.
pub fn wreath_q_expand(lambda: &Pvf, g: &GroupData) -> BTreeMap<ClassLabel, CycloValue> {
    wreath_q_expand_with(lambda, g, selected_weight())
}

static SELECTED: OnceLock<SubstitutionWeight> = OnceLock::new();

/// The substitution weight that passes degree positivity, integrality and
/// orthonormality on the validation tables (n ≤ 2, Γ cyclic of order 2 and 3).
///
/// Candidates that pass must agree as functions of (γ, c); the first one is kept.
pub fn selected_weight() -> SubstitutionWeight {
    *SELECTED.get_or_init(|| {
        let groups = [builtin("cyclic2").expect("builtin"), builtin("cyclic3").expect("builtin")];
        let passing: Vec<SubstitutionWeight> = SubstitutionWeight::CANDIDATES
            .into_iter()
            .filter(|&w| {
                groups.iter().all(|g| {
                    (1..=2).all(|n| match super::build::wreath_with_weight(n, g, super::Presentation::AForm, w) {
                        Ok(t) => t.check_degrees().is_ok() && t.check_orthonormality().is_ok(),
                        Err(_) => false,
                    })
                })
            })
            .collect();
        let first = *passing.first().expect("some substitution weight passes the validation set");
        for &other in &passing[1..] {
            for g in &groups {
                for gamma in 0..g.num_classes() {
                    for c in 0..g.num_classes() {
                        assert_eq!(
                            first.weight(g, gamma, c),
                            other.weight(g, gamma, c),
                            "validated substitution weights disagree"
                        );
                    }
                }
            }
        }
        first
    })
}
