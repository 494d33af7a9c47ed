use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;

use super::expand::{selected_weight, wreath_q_expand_with, SubstitutionWeight};
use super::odd::{odd_split_value, symmetric_odd_value, Presentation};
use super::{CharacterRow, CharacterTable, Column, Conventions, Family, RowKind};
use crate::classdata::{class_weight, split_classes, trivial, GroupData, Sign, SplitClassLabel, SplitFamily};
use crate::error::{Error, Result};
use crate::exactnum::CycloValue;
use crate::partitions::{enumerate_partitions, enumerate_pvf, ClassLabel, Partition, PartitionKind, Pvf};
use crate::qfunctions::{char_value, Algebra};

/// Largest ranks the table builders accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub symmetric: u32,
    pub hyperoctahedral: u32,
    /// For nontrivial Γ with at most three classes; Γ trivial uses `hyperoctahedral`.
    pub wreath_small: u32,
    pub wreath_large: u32,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { symmetric: 9, hyperoctahedral: 8, wreath_small: 5, wreath_large: 3 }
    }
}

impl Bounds {
    /// Defaults overridden by `SPINCHAR_MAX_SYMMETRIC`, `SPINCHAR_MAX_HYPEROCTAHEDRAL`
    /// and `SPINCHAR_MAX_WREATH` (the last applies to every Γ).
    pub fn from_env() -> Self {
        let read = |k: &str| std::env::var(k).ok().and_then(|v| v.parse::<u32>().ok());
        let mut b = Bounds::default();
        if let Some(v) = read("SPINCHAR_MAX_SYMMETRIC") {
            b.symmetric = v;
        }
        if let Some(v) = read("SPINCHAR_MAX_HYPEROCTAHEDRAL") {
            b.hyperoctahedral = v;
        }
        if let Some(v) = read("SPINCHAR_MAX_WREATH") {
            b.wreath_small = v;
            b.wreath_large = v;
        }
        b
    }

    fn check(&self, family: Family, n: u32, g: &GroupData) -> Result<()> {
        let max = match family {
            Family::SpinSymmetric => self.symmetric,
            Family::SpinHyperoctahedral => self.hyperoctahedral,
            // over the trivial group the wreath table is the hyperoctahedral one
            Family::SpinWreath if g.is_trivial() => self.hyperoctahedral,
            Family::SpinWreath if g.num_classes() <= 3 => self.wreath_small,
            Family::SpinWreath => self.wreath_large,
        };
        if n == 0 || n > max {
            return Err(Error::RankOutOfRange { family: family.to_string(), n: n as usize, max: max as usize });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct TableBuilder {
    pub bounds: Bounds,
    pub presentation: Presentation,
}

impl TableBuilder {
    pub fn new() -> Self {
        TableBuilder { bounds: Bounds::from_env(), presentation: Presentation::default() }
    }

    pub fn presentation(mut self, p: Presentation) -> Self {
        self.presentation = p;
        self
    }

    pub fn bounds(mut self, b: Bounds) -> Self {
        self.bounds = b;
        self
    }

    pub fn symmetric(&self, n: u32) -> Result<CharacterTable> {
        self.bounds.check(Family::SpinSymmetric, n, &trivial())?;
        Ok(symmetric_table(n))
    }

    pub fn hyperoctahedral(&self, n: u32) -> Result<CharacterTable> {
        self.bounds.check(Family::SpinHyperoctahedral, n, &trivial())?;
        Ok(hyperoctahedral_table(n, self.presentation))
    }

    pub fn wreath(&self, n: u32, g: &GroupData) -> Result<CharacterTable> {
        g.validate()?;
        self.bounds.check(Family::SpinWreath, n, g)?;
        wreath_with_weight(n, g, self.presentation, selected_weight())
    }

    pub fn build(&self, family: Family, n: u32, g: &GroupData) -> Result<CharacterTable> {
        match family {
            Family::SpinSymmetric => self.symmetric(n),
            Family::SpinHyperoctahedral => self.hyperoctahedral(n),
            Family::SpinWreath => self.wreath(n, g),
        }
    }
}

/// Spin characters of the double cover of S_n, with bounds from the environment.
pub fn table_spin_symmetric(n: u32) -> Result<CharacterTable> {
    TableBuilder::new().symmetric(n)
}

/// Spin characters of the double cover of the hyperoctahedral group B_n.
pub fn table_spin_hyperoctahedral(n: u32, presentation: Presentation) -> Result<CharacterTable> {
    TableBuilder::new().presentation(presentation).hyperoctahedral(n)
}

/// Spin characters of the double cover of Γ ≀ B_n.
pub fn table_spin_wreath(n: u32, g: &GroupData, presentation: Presentation) -> Result<CharacterTable> {
    TableBuilder::new().presentation(presentation).wreath(n, g)
}

const HALVING: &str = "rows of odd length (associate pairs) take half the supercharacter value on even split classes";
const SIGN: &str = "D+ holds the canonical representative: one cycle j -> j+1 per consecutive block, positive cycles \
before negative ones, colors in class order, parts descending, the class representative of Gamma and the odd \
generator at the first index of the block, no central factor; the + member of a pair takes the odd-class value \
with the positive square root";
const ODD_PREDICATE: &str = "rho+ empty, rho- strict for every color, l(rho-) odd";
const SQRT: &str = "positive real branch";

fn single(p: &Partition) -> Pvf {
    Pvf::single(0, p.clone())
}

fn even_label(rho: Pvf) -> SplitClassLabel {
    SplitClassLabel { base: ClassLabel::new(rho, Pvf::empty()), family: SplitFamily::EvenSplit, sign: Sign::Plus }
}

fn odd_label(rho: Pvf) -> SplitClassLabel {
    SplitClassLabel { base: ClassLabel::new(Pvf::empty(), rho), family: SplitFamily::OddSplit, sign: Sign::Plus }
}

pub(crate) fn expected_columns(family: Family, n: u32, g: &GroupData) -> Vec<SplitClassLabel> {
    match family {
        Family::SpinSymmetric => enumerate_partitions(n, PartitionKind::Odd)
            .iter()
            .map(|p| even_label(single(p)))
            .chain(enumerate_partitions(n, PartitionKind::StrictWithParity(1)).iter().map(|p| odd_label(single(p))))
            .collect(),
        Family::SpinHyperoctahedral | Family::SpinWreath => split_classes(n, g)
            .into_iter()
            .map(|(base, family)| SplitClassLabel { base, family, sign: Sign::Plus })
            .collect(),
    }
}

pub(crate) fn expected_row_count(family: Family, n: u32, g: &GroupData) -> usize {
    match family {
        Family::SpinSymmetric => enumerate_partitions(n, PartitionKind::Strict)
            .iter()
            .map(|p| if p.parity() == 1 { 2 } else { 1 })
            .sum(),
        Family::SpinHyperoctahedral | Family::SpinWreath => enumerate_pvf(n, g.num_classes(), PartitionKind::Strict)
            .iter()
            .map(|p| if p.len() % 2 == 1 { 2 } else { 1 })
            .sum(),
    }
}

fn conventions(presentation: Option<Presentation>, weight: Option<SubstitutionWeight>) -> Conventions {
    Conventions {
        presentation,
        substitution_weight: weight.map(|w| w.name().to_string()),
        halving: HALVING.to_string(),
        sign: SIGN.to_string(),
        odd_split_predicate: ODD_PREDICATE.to_string(),
        sqrt_branch: SQRT.to_string(),
    }
}

/// Emits the row (or the ± pair) for `index` given its D⁺ values.
fn emit(index: Pvf, paired: bool, values: Vec<CycloValue>, columns: &[Column], id: usize) -> Vec<CharacterRow> {
    let degree = values[id].to_rational().map(|q| q.to_integer()).unwrap_or_else(|| BigInt::from(0));
    if !paired {
        return vec![CharacterRow { index, kind: RowKind::DoubleSpin, degree, values }];
    }
    let plus = CharacterRow { index, kind: RowKind::AssociatePlus, degree, values };
    let minus = super::associate_partner(&plus, columns).expect("associate row");
    vec![plus, minus]
}

fn assemble(
    family: Family,
    n: u32,
    group: GroupData,
    conventions: Conventions,
    columns: Vec<Column>,
    rows: Vec<CharacterRow>,
) -> CharacterTable {
    CharacterTable { family, n, group, conventions, columns, rows }
}

fn identity_index(columns: &[Column], n: u32) -> usize {
    let ones = single(&Partition::new(vec![1; n as usize]).expect("valid"));
    columns
        .iter()
        .position(|c| c.class.family == SplitFamily::EvenSplit && c.class.base.positive == ones)
        .expect("identity class is an even split")
}

fn symmetric_table(n: u32) -> CharacterTable {
    let columns: Vec<Column> = expected_columns(Family::SpinSymmetric, n, &trivial())
        .into_iter()
        .map(|class| {
            let rho = class.support().get(0).cloned().unwrap_or_default();
            Column { weight: BigRational::new(BigInt::one(), rho.z_order()), class }
        })
        .collect();
    let id = identity_index(&columns, n);
    let strict = enumerate_partitions(n, PartitionKind::Strict);
    let rows = strict
        .par_iter()
        .map(|nu| {
            let values = columns
                .iter()
                .map(|c| {
                    let rho = c.class.support().get(0).cloned().unwrap_or_default();
                    match c.class.family {
                        SplitFamily::EvenSplit => {
                            CycloValue::from_rational(&char_value(nu, &rho, Algebra::A).expect("weights agree"))
                        }
                        SplitFamily::OddSplit if nu.parity() == 1 => {
                            symmetric_odd_value(nu, &rho).expect("pair row")
                        }
                        SplitFamily::OddSplit => CycloValue::zero(),
                    }
                })
                .collect();
            emit(single(nu), nu.parity() == 1, values, &columns, id)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    assemble(Family::SpinSymmetric, n, trivial(), conventions(None, None), columns, rows)
}

/// χ⁺_ν(D⁺_μ) for the hyperoctahedral cover: zero unless μ = ν (l odd), where it is
/// 2^{(l−1)/2} i^{(l−1)/2} √(ν₁⋯ν_l) in the b-form and i^l times that in the a-form.
pub fn hyperoctahedral_odd_value(nu: &Partition, mu: &Partition, presentation: Presentation) -> CycloValue {
    if nu != mu || nu.len() % 2 == 0 {
        return CycloValue::zero();
    }
    let l = nu.len();
    let root = CycloValue::sqrt_rational(&BigRational::from_integer(nu.product() * BigInt::from(2).pow((l - 1) as u32)))
        .expect("positive");
    let phase = match presentation {
        Presentation::BForm => (l - 1) / 2,
        Presentation::AForm => (l - 1) / 2 + l,
    };
    &root * &CycloValue::i_pow(phase as i64)
}

fn hyperoctahedral_table(n: u32, presentation: Presentation) -> CharacterTable {
    let g = trivial();
    let columns: Vec<Column> = expected_columns(Family::SpinHyperoctahedral, n, &g)
        .into_iter()
        .map(|class| Column { weight: class_weight(class.support(), &g), class })
        .collect();
    let id = identity_index(&columns, n);
    let strict = enumerate_partitions(n, PartitionKind::Strict);
    let rows = strict
        .par_iter()
        .map(|nu| {
            let paired = nu.len() % 2 == 1;
            let half = BigRational::new(BigInt::one(), BigInt::from(if paired { 2 } else { 1 }));
            let values = columns
                .iter()
                .map(|c| {
                    let rho = c.class.support().get(0).cloned().unwrap_or_default();
                    match c.class.family {
                        SplitFamily::EvenSplit => {
                            let xi = char_value(nu, &rho, Algebra::B).expect("weights agree");
                            CycloValue::from_rational(&(xi * &half))
                        }
                        SplitFamily::OddSplit => hyperoctahedral_odd_value(nu, &rho, presentation),
                    }
                })
                .collect();
            emit(single(nu), paired, values, &columns, id)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    assemble(Family::SpinHyperoctahedral, n, g, conventions(Some(presentation), None), columns, rows)
}

pub(crate) fn wreath_with_weight(
    n: u32,
    g: &GroupData,
    presentation: Presentation,
    weight: SubstitutionWeight,
) -> Result<CharacterTable> {
    if n == 0 {
        return Err(Error::RankOutOfRange { family: Family::SpinWreath.to_string(), n: 0, max: 0 });
    }
    let columns: Vec<Column> = expected_columns(Family::SpinWreath, n, g)
        .into_iter()
        .map(|class| Column { weight: class_weight(class.support(), g), class })
        .collect();
    let id = identity_index(&columns, n);
    let strict = enumerate_pvf(n, g.num_classes(), PartitionKind::Strict);
    let rows = strict
        .par_iter()
        .map(|lambda| {
            let even = wreath_q_expand_with(lambda, g, weight);
            let values = columns
                .iter()
                .map(|c| match c.class.family {
                    SplitFamily::EvenSplit => even.get(&c.class.base).cloned().unwrap_or_else(CycloValue::zero),
                    SplitFamily::OddSplit => odd_split_value(lambda, &c.class.base.negative, g, presentation),
                })
                .collect();
            emit(lambda.clone(), lambda.len() % 2 == 1, values, &columns, id)
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(assemble(
        Family::SpinWreath,
        n,
        g.clone(),
        conventions(Some(presentation), Some(weight)),
        columns,
        rows,
    ))
}
