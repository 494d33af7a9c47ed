use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::cover::{build_cover, compare_presentations, Cover};
use super::element::CoverElement;
use crate::classdata::{is_split_by_rank_parity, split_classes, GroupData};
use crate::error::{Error, Result};
use crate::exactnum::CycloValue;
use crate::partitions::ClassLabel;
use crate::spintable::{column_label, CharacterTable, Check, Family, Presentation, TableBuilder};

/// Outcome of refereeing a table against an explicit cover.
#[derive(Clone, Debug, Serialize)]
pub struct OracleReport {
    pub family: Family,
    pub n: usize,
    pub group: String,
    pub presentation: Presentation,
    pub cover_order: usize,
    pub class_count: usize,
    pub empirical_splits: Vec<String>,
    pub predicted_splits: Vec<String>,
    /// Splits the (n − l) parity filter would predict, for comparison.
    pub rank_parity_splits: Vec<String>,
    pub checks: Vec<Check>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_pretty(&self) -> String {
        let mut out = format!(
            "{} n={} group={} presentation={} |cover|={} classes={}\n",
            self.family, self.n, self.group, self.presentation, self.cover_order, self.class_count
        );
        out.push_str(&format!("empirical splits: {{{}}}\n", self.empirical_splits.join(", ")));
        out.push_str(&format!("predicted splits: {{{}}}\n", self.predicted_splits.join(", ")));
        out.push_str(&format!("rank-parity filter: {{{}}}\n", self.rank_parity_splits.join(", ")));
        for c in &self.checks {
            out.push_str(&format!("{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!(": {w}"));
            }
            out.push('\n');
        }
        out
    }
}

fn labels(set: &BTreeSet<ClassLabel>, g: &GroupData) -> Vec<String> {
    let colors = g.class_labels();
    set.iter().map(|l| format!("({})", plain_label(l, &colors))).collect()
}

fn plain_label(l: &ClassLabel, colors: &[String]) -> String {
    let side = |p: &crate::partitions::Pvf| if p.is_empty() { "∅".to_string() } else { p.label(colors) };
    format!("{},{}", side(&l.positive), side(&l.negative))
}

/// Class-level data the checks share.
struct Frame<'a> {
    cover: &'a Cover,
    table: &'a CharacterTable,
    /// values[row][class]
    values: Vec<Vec<CycloValue>>,
    inverse_class: Vec<usize>,
    identity_class: usize,
}

fn frame<'a>(cover: &'a Cover, table: &'a CharacterTable) -> Result<Frame<'a>> {
    let k = cover.classes.len();
    // (column, negated) for each class
    let mut slot: Vec<Option<(usize, bool)>> = vec![None; k];
    for (j, col) in table.columns.iter().enumerate() {
        let rep = cover.canonical_representative(&col.class.base)?;
        let plus = cover.class_of_element(&rep)?;
        let minus = cover.class_of_element(&rep.times_z())?;
        slot[minus] = Some((j, true));
        slot[plus] = Some((j, false));
    }
    let values = table
        .rows
        .iter()
        .map(|r| {
            slot.iter()
                .map(|s| match s {
                    None => CycloValue::zero(),
                    Some((j, false)) => r.values[*j].clone(),
                    Some((j, true)) => -&r.values[*j],
                })
                .collect()
        })
        .collect();
    let inverse_class = cover
        .classes
        .iter()
        .map(|c| cover.inverse(&cover.elements[c.representative]).and_then(|y| cover.class_of_element(&y)))
        .collect::<Result<Vec<_>>>()?;
    let identity_class = cover.class_of_element(&CoverElement::identity(cover.n))?;
    Ok(Frame { cover, table, values, inverse_class, identity_class })
}

impl Frame<'_> {
    fn row(&self, i: usize) -> String {
        self.table.row_label(i)
    }

    fn class(&self, k: usize) -> String {
        let c = &self.cover.classes[k];
        let sign = if self.cover.elements[c.representative].sign == 1 { "z·" } else { "" };
        format!("{sign}({})", plain_label(&c.label, &self.cover.group.class_labels()))
    }

    /// (a) the zero extension is well defined on classes and odd under z.
    fn class_function(&self) -> std::result::Result<(), String> {
        if !self.cover.type_is_class_invariant() {
            return Err("element type is not constant on a conjugacy class".into());
        }
        for (i, vals) in self.values.iter().enumerate() {
            for (k, c) in self.cover.classes.iter().enumerate() {
                if vals[c.partner] != -&vals[k] {
                    return Err(format!(
                        "{} is {} at {} but {} at its z-translate",
                        self.row(i),
                        vals[k],
                        self.class(k),
                        vals[c.partner]
                    ));
                }
            }
        }
        Ok(())
    }

    /// (b) Σ_x χ(x) conj χ′(x) = |cover| δ.
    fn orthogonality(&self) -> std::result::Result<(), String> {
        let order = CycloValue::from_int(self.cover.order() as i64);
        let sizes: Vec<BigRational> =
            self.cover.classes.iter().map(|c| BigRational::from_integer(BigInt::from(c.size))).collect();
        let rows = self.values.len();
        let bad = (0..rows)
            .into_par_iter()
            .flat_map_iter(|i| (0..rows).map(move |j| (i, j)))
            .find_first(|&(i, j)| {
                let mut acc = CycloValue::zero();
                for k in 0..sizes.len() {
                    let (a, b) = (&self.values[i][k], &self.values[j][k]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * &b.conj()).scale(&sizes[k]);
                    }
                }
                let want = if i == j { order.clone() } else { CycloValue::zero() };
                acc != want
            });
        match bad {
            None => Ok(()),
            Some((i, j)) => Err(format!("sum over the cover of {} times conj {} is not {}", self.row(i), self.row(j), if i == j { "|cover|" } else { "0" })),
        }
    }

    /// (c) the split classes found by conjugation are exactly the columns.
    fn split_set(&self) -> std::result::Result<(), String> {
        let empirical = self.cover.empirical_splits();
        let columns: BTreeSet<ClassLabel> = self.table.columns.iter().map(|c| c.class.base.clone()).collect();
        if empirical == columns {
            return Ok(());
        }
        let g = &self.cover.group;
        let extra: BTreeSet<ClassLabel> = columns.difference(&empirical).cloned().collect();
        let missing: BTreeSet<ClassLabel> = empirical.difference(&columns).cloned().collect();
        Err(format!("columns not split: {:?}; split but missing: {:?}", labels(&extra, g), labels(&missing, g)))
    }

    /// (d) recorded degrees are the values at the identity.
    fn degrees(&self) -> std::result::Result<(), String> {
        for (i, r) in self.table.rows.iter().enumerate() {
            let v = &self.values[i][self.identity_class];
            if *v != CycloValue::from_rational(&BigRational::from_integer(r.degree.clone())) {
                return Err(format!("{} records degree {} but χ(1) = {v}", self.row(i), r.degree));
            }
        }
        Ok(())
    }

    /// (e) χ(x⁻¹) = conj χ(x).
    fn inverse_consistency(&self) -> std::result::Result<(), String> {
        for (i, vals) in self.values.iter().enumerate() {
            for (k, &ki) in self.inverse_class.iter().enumerate() {
                if vals[ki] != vals[k].conj() {
                    return Err(format!(
                        "{} is {} at {} but {} at the inverse class",
                        self.row(i),
                        vals[k],
                        self.class(k),
                        vals[ki]
                    ));
                }
            }
        }
        Ok(())
    }

    /// (f) ω(K_g) ω(K_j) = Σ_k a_{g,j,k} ω(K_k) for the classes K_g of the generators,
    /// where ω(K) = |K| χ(K) / χ(1).
    fn central_characters(&self) -> std::result::Result<(), String> {
        let cover = self.cover;
        let k = cover.classes.len();
        let mut gen_classes: Vec<usize> =
            cover.generators().iter().map(|g| cover.class_of_element(g)).collect::<Result<_>>().map_err(|e| e.to_string())?;
        gen_classes.sort();
        gen_classes.dedup();
        let reps: Vec<&CoverElement> = cover.classes.iter().map(|c| &cover.elements[c.representative]).collect();
        for &gi in &gen_classes {
            // a[j][kk] = #{x ∈ K_gi : x⁻¹ r_kk ∈ K_j}
            let mut a = vec![vec![0u64; k]; k];
            for (idx, x) in cover.elements.iter().enumerate() {
                if cover.class_of[idx] != gi {
                    continue;
                }
                let xi = cover.inverse(x).map_err(|e| e.to_string())?;
                for (kk, r) in reps.iter().enumerate() {
                    let y = cover.multiply(&xi, r).map_err(|e| e.to_string())?;
                    a[cover.class_of_element(&y).map_err(|e| e.to_string())?][kk] += 1;
                }
            }
            for (i, vals) in self.values.iter().enumerate() {
                let deg = BigRational::from_integer(self.table.rows[i].degree.clone());
                let omega: Vec<CycloValue> = (0..k)
                    .map(|c| vals[c].scale(&(BigRational::from_integer(BigInt::from(cover.classes[c].size)) / &deg)))
                    .collect();
                for j in 0..k {
                    let lhs = &omega[gi] * &omega[j];
                    let mut rhs = CycloValue::zero();
                    for kk in 0..k {
                        if a[j][kk] != 0 && !omega[kk].is_zero() {
                            rhs = &rhs + &omega[kk].scale(&BigRational::from_integer(BigInt::from(a[j][kk])));
                        }
                    }
                    if lhs != rhs {
                        return Err(format!(
                            "central character of {} is not multiplicative on {} and {}",
                            self.row(i),
                            self.class(gi),
                            self.class(j)
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Referees `table` against the explicit cover: (a) class function with χ(zx) = −χ(x),
/// (b) orthogonality over the elements, (c) split set, (d) degrees, (e) inverse
/// consistency, (f) central characters.
pub fn verify_table(table: &CharacterTable, cover: &Cover) -> Result<OracleReport> {
    let presentation = table
        .conventions
        .presentation
        .ok_or_else(|| Error::AmbientMismatch(format!("{} tables are not covers of a wreath product", table.family)))?;
    if table.n as usize != cover.n || table.group != cover.group || presentation != cover.presentation {
        return Err(Error::AmbientMismatch(format!(
            "table is {} n={} over {} ({presentation}), cover is n={} over {} ({})",
            table.family, table.n, table.group.name, cover.n, cover.group.name, cover.presentation
        )));
    }
    let f = frame(cover, table)?;
    let g = &cover.group;
    let empirical = cover.empirical_splits();
    let predicted: BTreeSet<ClassLabel> = split_classes(table.n, g).into_iter().map(|(l, _)| l).collect();
    let rank_parity: BTreeSet<ClassLabel> = crate::classdata::enumerate_classes(table.n, g)
        .into_iter()
        .filter(|l| is_split_by_rank_parity(l, table.n).is_some())
        .collect();
    let predicate = if empirical == predicted {
        Ok(())
    } else {
        Err(format!("empirical {:?} vs predicted {:?}", labels(&empirical, g), labels(&predicted, g)))
    };
    let realized = cover.realized_types().len();
    let expected = crate::classdata::enumerate_classes(table.n, g).len();
    let types = if realized == expected {
        Ok(())
    } else {
        Err(format!("{realized} types realized, {expected} expected"))
    };
    let rows = if empirical.len() == table.rows.len() {
        Ok(())
    } else {
        Err(format!("{} split classes but {} spin rows", empirical.len(), table.rows.len()))
    };
    let order = if cover.order() as u64 == super::cover::predicted_order(cover.n, g.order) {
        Ok(())
    } else {
        Err(format!("cover has {} elements", cover.order()))
    };
    let checks = vec![
        Check::new("cover_order", order),
        Check::new("class_function", f.class_function()),
        Check::new("element_orthogonality", f.orthogonality()),
        Check::new("split_set_matches_columns", f.split_set()),
        Check::new("degrees_at_identity", f.degrees()),
        Check::new("inverse_consistency", f.inverse_consistency()),
        Check::new("central_characters", f.central_characters()),
        Check::new("split_predicate", predicate),
        Check::new("realized_types", types),
        Check::new("splits_equal_rows", rows),
    ];
    Ok(OracleReport {
        family: table.family,
        n: cover.n,
        group: g.name.clone(),
        presentation,
        cover_order: cover.order(),
        class_count: cover.classes.len(),
        empirical_splits: labels(&empirical, g),
        predicted_splits: labels(&predicted, g),
        rank_parity_splits: labels(&rank_parity, g),
        checks,
    })
}

/// Builds the cover and the generated table for (n, Γ) and referees one against
/// the other; also compares class statistics across the two presentations.
pub fn oracle_check(n: u32, g: &GroupData, presentation: Presentation) -> Result<OracleReport> {
    let cover = build_cover(n as usize, g, presentation)?;
    let family = if g.is_trivial() { Family::SpinHyperoctahedral } else { Family::SpinWreath };
    let table = TableBuilder::default().presentation(presentation).build(family, n, g)?;
    let mut report = verify_table(&table, &cover)?;
    let (a, b) = compare_presentations(n as usize, g)?;
    let same = if a == b {
        Ok(())
    } else {
        Err(format!("a_form: {} classes, {} splits; b_form: {} classes, {} splits", a.class_count, a.splits.len(), b.class_count, b.splits.len()))
    };
    report.checks.push(Check::new("presentations_agree", same));
    Ok(report)
}

/// Column labels of `table` in the oracle's notation, for reports.
pub fn column_labels(table: &CharacterTable) -> Vec<String> {
    let colors = table.class_colors();
    table.columns.iter().map(|c| column_label(&c.class, &colors)).collect()
}
