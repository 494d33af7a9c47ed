//! Spin character tables of the three families.

mod build;
mod expand;
mod format;
mod odd;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use build::{
    hyperoctahedral_odd_value, table_spin_hyperoctahedral, table_spin_symmetric, table_spin_wreath, Bounds,
    TableBuilder,
};
pub use expand::{colored_expansion, selected_weight, wreath_q_expand, wreath_q_expand_with, SubstitutionWeight};
pub use format::Format;
pub use odd::{
    hyperoctahedral_odd_closed_form, odd_split_value, star_product_values, symmetric_odd_value,
    wreath_odd_closed_form, Factor, FactorKind, Presentation,
};

use crate::classdata::{GroupData, Sign, SplitClassLabel, SplitFamily};
use crate::error::{Error, Result};
use crate::exactnum::CycloValue;
use crate::partitions::{Partition, Pvf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    SpinSymmetric,
    SpinHyperoctahedral,
    SpinWreath,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::SpinSymmetric => "spin_symmetric",
            Family::SpinHyperoctahedral => "spin_hyperoctahedral",
            Family::SpinWreath => "spin_wreath",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RowKind {
    DoubleSpin,
    AssociatePlus,
    AssociateMinus,
}

/// A column: the D⁺ class over a split class, with its inner-product weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Column {
    pub class: SplitClassLabel,
    pub weight: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterRow {
    /// Strict partition-valued function on the characters of Γ (one color when Γ is trivial).
    pub index: Pvf,
    pub kind: RowKind,
    pub degree: BigInt,
    /// Values at D⁺ of each column, aligned with [`CharacterTable::columns`].
    pub values: Vec<CycloValue>,
}

/// Conventions an emitted table depends on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub presentation: Option<Presentation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub substitution_weight: Option<String>,
    pub halving: String,
    pub sign: String,
    pub odd_split_predicate: String,
    pub sqrt_branch: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub family: Family,
    pub n: u32,
    pub group: GroupData,
    pub conventions: Conventions,
    pub columns: Vec<Column>,
    pub rows: Vec<CharacterRow>,
}

/// Outcome of one table invariant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn new(name: &str, r: std::result::Result<(), String>) -> Self {
        Check { name: name.to_string(), passed: r.is_ok(), witness: r.err() }
    }
}

impl CharacterRow {
    pub fn label(&self, chars: &[String]) -> String {
        let base = self.index.label(chars);
        match self.kind {
            RowKind::DoubleSpin => base,
            RowKind::AssociatePlus => format!("{base}+"),
            RowKind::AssociateMinus => format!("{base}-"),
        }
    }
}

/// The other member of an associate pair: odd-class values negated.
pub fn associate_partner(row: &CharacterRow, columns: &[Column]) -> Result<CharacterRow> {
    let kind = match row.kind {
        RowKind::AssociatePlus => RowKind::AssociateMinus,
        RowKind::AssociateMinus => RowKind::AssociatePlus,
        RowKind::DoubleSpin => {
            return Err(Error::Precondition("a double spin character has no associate partner".into()))
        }
    };
    if row.values.len() != columns.len() {
        return Err(Error::Precondition("row and columns are misaligned".into()));
    }
    let values = row
        .values
        .iter()
        .zip(columns)
        .map(|(v, c)| match c.class.family {
            SplitFamily::EvenSplit => v.clone(),
            SplitFamily::OddSplit => -v,
        })
        .collect();
    Ok(CharacterRow { index: row.index.clone(), kind, degree: row.degree.clone(), values })
}

impl CharacterTable {
    pub fn class_colors(&self) -> Vec<String> {
        self.group.class_labels()
    }

    pub fn character_colors(&self) -> Vec<String> {
        self.group.character_labels()
    }

    pub fn row_label(&self, i: usize) -> String {
        self.rows[i].label(&self.character_colors())
    }

    pub fn column_label(&self, j: usize) -> String {
        column_label(&self.columns[j].class, &self.class_colors())
    }

    /// Value of row `i` at either sign class over a split class; zero off the columns.
    pub fn value(&self, i: usize, class: &SplitClassLabel) -> CycloValue {
        let found = self
            .columns
            .iter()
            .position(|c| c.class.base == class.base && c.class.family == class.family);
        match found {
            None => CycloValue::zero(),
            Some(j) => match class.sign {
                Sign::Plus => self.rows[i].values[j].clone(),
                Sign::Minus => -&self.rows[i].values[j],
            },
        }
    }

    pub fn identity_column(&self) -> Option<usize> {
        let ones = Partition::new(vec![1; self.n as usize]).expect("valid");
        self.columns.iter().position(|c| {
            c.class.family == SplitFamily::EvenSplit && c.class.base.positive == Pvf::single(0, ones.clone())
        })
    }

    /// Order of the group whose spin characters these are (half the cover).
    pub fn spin_order(&self) -> BigInt {
        let fact: BigInt = (1..=self.n).fold(BigInt::one(), |a, k| a * k);
        match self.family {
            Family::SpinSymmetric => fact,
            Family::SpinHyperoctahedral | Family::SpinWreath => {
                fact * BigInt::from(2).pow(self.n) * BigInt::from(self.group.order).pow(self.n)
            }
        }
    }

    /// Matrix of ⟨row_i, row_j⟩ under the column weights.
    pub fn gram(&self) -> Vec<Vec<CycloValue>> {
        let conj: Vec<Vec<CycloValue>> =
            self.rows.iter().map(|r| r.values.iter().map(|v| v.conj()).collect()).collect();
        (0..self.rows.len())
            .into_par_iter()
            .map(|i| {
                (0..self.rows.len())
                    .map(|j| {
                        let mut acc = CycloValue::zero();
                        for (k, col) in self.columns.iter().enumerate() {
                            let a = &self.rows[i].values[k];
                            let b = &conj[j][k];
                            if !a.is_zero() && !b.is_zero() {
                                acc = &acc + &(a * b).scale(&col.weight);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect()
    }

    pub fn check_shape(&self) -> std::result::Result<(), String> {
        if self.rows.len() != self.columns.len() {
            return Err(format!("{} rows but {} columns", self.rows.len(), self.columns.len()));
        }
        for (i, r) in self.rows.iter().enumerate() {
            if r.values.len() != self.columns.len() {
                return Err(format!("row {} has {} values", self.row_label(i), r.values.len()));
            }
        }
        Ok(())
    }

    pub fn check_orthonormality(&self) -> std::result::Result<(), String> {
        self.check_shape()?;
        let gram = self.gram();
        for (i, row) in gram.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                let want = if i == j { CycloValue::one() } else { CycloValue::zero() };
                if *v != want {
                    return Err(format!(
                        "<{}, {}> = {v}, expected {want}",
                        self.row_label(i),
                        self.row_label(j)
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn check_degrees(&self) -> std::result::Result<(), String> {
        let id = self.identity_column().ok_or("no identity column")?;
        let mut total = BigInt::zero();
        for (i, r) in self.rows.iter().enumerate() {
            let v = &r.values[id];
            let q = v.to_rational().ok_or_else(|| format!("degree of {} is not rational: {v}", self.row_label(i)))?;
            if !q.is_integer() || !q.is_positive() {
                return Err(format!("degree of {} is {q}", self.row_label(i)));
            }
            if q.to_integer() != r.degree {
                return Err(format!("row {} records degree {} but its identity value is {q}", self.row_label(i), r.degree));
            }
            total += &r.degree * &r.degree;
        }
        let want = self.spin_order();
        if total != want {
            return Err(format!("sum of squared degrees is {total}, expected {want}"));
        }
        Ok(())
    }

    pub fn check_double_spin_vanishing(&self) -> std::result::Result<(), String> {
        for (i, r) in self.rows.iter().enumerate() {
            if r.kind != RowKind::DoubleSpin {
                continue;
            }
            for (j, c) in self.columns.iter().enumerate() {
                if c.class.family == SplitFamily::OddSplit && !r.values[j].is_zero() {
                    return Err(format!("double spin {} is {} at {}", self.row_label(i), r.values[j], self.column_label(j)));
                }
            }
        }
        Ok(())
    }

    pub fn check_partner_law(&self) -> std::result::Result<(), String> {
        let mut i = 0;
        while i < self.rows.len() {
            match self.rows[i].kind {
                RowKind::DoubleSpin => i += 1,
                RowKind::AssociatePlus => {
                    let partner = self.rows.get(i + 1).ok_or("unpaired associate row")?;
                    if partner.kind != RowKind::AssociateMinus || partner.index != self.rows[i].index {
                        return Err(format!("{} is not followed by its partner", self.row_label(i)));
                    }
                    let expected = associate_partner(&self.rows[i], &self.columns).map_err(|e| e.to_string())?;
                    if &expected != partner {
                        return Err(format!("{} violates the partner sign law", self.row_label(i + 1)));
                    }
                    i += 2;
                }
                RowKind::AssociateMinus => return Err(format!("{} has no preceding + member", self.row_label(i))),
            }
        }
        Ok(())
    }

    /// Each associate row has weight 1/2 on the odd split classes.
    pub fn check_odd_half_norm(&self) -> std::result::Result<(), String> {
        let half = CycloValue::from_rational(&BigRational::new(1.into(), 2.into()));
        for (i, r) in self.rows.iter().enumerate() {
            if r.kind == RowKind::DoubleSpin {
                continue;
            }
            let mut acc = CycloValue::zero();
            for (j, c) in self.columns.iter().enumerate() {
                if c.class.family == SplitFamily::OddSplit {
                    acc = &acc + &r.values[j].norm_sq().scale(&c.weight);
                }
            }
            if acc != half {
                return Err(format!("odd-class norm of {} is {acc}", self.row_label(i)));
            }
        }
        Ok(())
    }

    /// Runs every table-level invariant.
    pub fn invariant_report(&self) -> Vec<Check> {
        let mut out = vec![
            Check::new("shape", self.check_shape()),
            Check::new("counting_identity", self.check_counting()),
        ];
        if out.iter().all(|c| c.passed) {
            out.push(Check::new("orthonormality", self.check_orthonormality()));
            out.push(Check::new("degree_identity", self.check_degrees()));
            out.push(Check::new("double_spin_vanishing", self.check_double_spin_vanishing()));
            out.push(Check::new("partner_sign_law", self.check_partner_law()));
            out.push(Check::new("odd_half_norm", self.check_odd_half_norm()));
        }
        out
    }

    /// #columns equals the number of split classes and #rows the number of spin irreducibles.
    pub fn check_counting(&self) -> std::result::Result<(), String> {
        let expected = build::expected_columns(self.family, self.n, &self.group);
        let got: Vec<&SplitClassLabel> = self.columns.iter().map(|c| &c.class).collect();
        if got.len() != expected.len() || got.iter().zip(&expected).any(|(a, b)| *a != b) {
            return Err(format!("{} columns, expected {} split classes", got.len(), expected.len()));
        }
        let rows = build::expected_row_count(self.family, self.n, &self.group);
        if self.rows.len() != rows {
            return Err(format!("{} rows, expected {rows} spin irreducibles", self.rows.len()));
        }
        Ok(())
    }
}

pub fn column_label(c: &SplitClassLabel, colors: &[String]) -> String {
    let side = |p: &Pvf| if p.is_empty() { "∅".to_string() } else { p.label(colors) };
    format!("{} ; {}", side(&c.base.positive), side(&c.base.negative))
}
