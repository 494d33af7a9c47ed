//! Rendering tables as text, CSV and JSON, and reading JSON back.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{CharacterRow, CharacterTable, Column, Conventions, Family, RowKind};
use crate::classdata::{GroupData, Sign, SplitClassLabel, SplitFamily};
use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, parse_value};
use crate::partitions::{ClassLabel, Pvf};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Pretty,
    Csv,
    Json,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Pretty => "pretty",
            Format::Csv => "csv",
            Format::Json => "json",
        })
    }
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pretty" => Ok(Format::Pretty),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse { text: s.into(), reason: "expected pretty, csv or json".into() }),
        }
    }
}

fn parse_enum<T: for<'de> Deserialize<'de>>(v: &Value, what: &str) -> Result<T> {
    serde_json::from_value(v.clone()).map_err(|e| Error::Parse { text: v.to_string(), reason: format!("{what}: {e}") })
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| Error::Parse { text: key.into(), reason: "missing field".into() })
}

fn str_field<'a>(v: &'a Value, key: &str) -> Result<&'a str> {
    field(v, key)?
        .as_str()
        .ok_or_else(|| Error::Parse { text: key.into(), reason: "expected a string".into() })
}

fn label_map(v: &Value) -> Result<BTreeMap<String, String>> {
    parse_enum(v, "label map")
}

impl CharacterTable {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Pretty => Ok(self.to_pretty()),
            Format::Csv => self.to_csv(),
            Format::Json => Ok(serde_json::to_string_pretty(&self.to_json())? + "\n"),
        }
    }

    pub fn to_json(&self) -> Value {
        let colors = self.class_colors();
        let chars = self.character_colors();
        let columns: Vec<Value> = self
            .columns
            .iter()
            .enumerate()
            .map(|(j, c)| {
                json!({
                    "family": c.class.family,
                    "positive": c.class.base.positive.to_label_map(&colors),
                    "negative": c.class.base.negative.to_label_map(&colors),
                    "label": self.column_label(j),
                    "weight": c.weight.to_string(),
                })
            })
            .collect();
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                json!({
                    "index": r.index.to_label_map(&chars),
                    "label": r.label(&chars),
                    "kind": r.kind,
                    "degree": r.degree.to_string(),
                    "values": r.values.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({
            "format": "spin-character-table",
            "family": self.family,
            "n": self.n,
            "presentation": self.conventions.presentation,
            "conventions": self.conventions,
            "group": self.group.to_json_value(),
            "columns": columns,
            "rows": rows,
        })
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text)?;
        Self::from_json_value(&v)
    }

    pub fn from_json_value(v: &Value) -> Result<Self> {
        if str_field(v, "format")? != "spin-character-table" {
            return Err(Error::Parse { text: "format".into(), reason: "not a spin character table".into() });
        }
        let family: Family = parse_enum(field(v, "family")?, "family")?;
        let n = field(v, "n")?
            .as_u64()
            .ok_or_else(|| Error::Parse { text: "n".into(), reason: "expected an integer".into() })? as u32;
        let conventions: Conventions = parse_enum(field(v, "conventions")?, "conventions")?;
        let group = GroupData::from_json_value(field(v, "group")?)?;
        let colors = group.class_labels();
        let chars = group.character_labels();
        let list = |key: &str| -> Result<Vec<Value>> {
            field(v, key)?
                .as_array()
                .cloned()
                .ok_or_else(|| Error::Parse { text: key.into(), reason: "expected an array".into() })
        };
        let columns = list("columns")?
            .iter()
            .map(|c| {
                let family: SplitFamily = parse_enum(field(c, "family")?, "column family")?;
                let positive = Pvf::from_label_map(&label_map(field(c, "positive")?)?, &colors)?;
                let negative = Pvf::from_label_map(&label_map(field(c, "negative")?)?, &colors)?;
                let weight = parse_rational(str_field(c, "weight")?)?;
                Ok(Column {
                    class: SplitClassLabel { base: ClassLabel::new(positive, negative), family, sign: Sign::Plus },
                    weight,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let rows = list("rows")?
            .iter()
            .map(|r| {
                let index = Pvf::from_label_map(&label_map(field(r, "index")?)?, &chars)?;
                let kind: RowKind = parse_enum(field(r, "kind")?, "row kind")?;
                let degree: BigInt = str_field(r, "degree")?
                    .parse()
                    .map_err(|_| Error::Parse { text: "degree".into(), reason: "expected an integer".into() })?;
                let values = field(r, "values")?
                    .as_array()
                    .ok_or_else(|| Error::Parse { text: "values".into(), reason: "expected an array".into() })?
                    .iter()
                    .map(|x| {
                        x.as_str()
                            .ok_or_else(|| Error::Parse { text: x.to_string(), reason: "expected a string".into() })
                            .and_then(parse_value)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(CharacterRow { index, kind, degree, values })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CharacterTable { family, n, group, conventions, columns, rows })
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["character".to_string(), "kind".to_string(), "degree".to_string()];
        header.extend((0..self.columns.len()).map(|j| self.column_label(j)));
        w.write_record(&header)?;
        for (i, r) in self.rows.iter().enumerate() {
            let mut rec = vec![self.row_label(i), kind_name(r.kind).to_string(), r.degree.to_string()];
            rec.extend(r.values.iter().map(|v| v.to_string()));
            w.write_record(&rec)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("utf8"))
    }

    pub fn to_pretty(&self) -> String {
        let mut grid: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new()];
        header.extend((0..self.columns.len()).map(|j| self.column_label(j)));
        grid.push(header);
        let mut weights = vec!["weight".to_string()];
        weights.extend(self.columns.iter().map(|c| c.weight.to_string()));
        grid.push(weights);
        for (i, r) in self.rows.iter().enumerate() {
            let mut line = vec![self.row_label(i)];
            line.extend(r.values.iter().map(|v| v.to_string()));
            grid.push(line);
        }
        let ncol = grid[0].len();
        let widths: Vec<usize> =
            (0..ncol).map(|j| grid.iter().map(|row| row[j].chars().count()).max().unwrap_or(0)).collect();
        let mut out = String::new();
        out.push_str(&format!("{} n={}", self.family, self.n));
        if !self.group.is_trivial() {
            out.push_str(&format!(" group={}", self.group.name));
        }
        if let Some(p) = self.conventions.presentation {
            out.push_str(&format!(" presentation={p}"));
        }
        out.push('\n');
        for (k, row) in grid.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(s, &w)| format!("{s}{}", " ".repeat(w - s.chars().count())))
                .collect();
            out.push_str(cells.join(" | ").trim_end());
            out.push('\n');
            if k == 1 {
                let rule: Vec<String> = widths.iter().map(|&w| "-".repeat(w)).collect();
                out.push_str(&rule.join("-+-"));
                out.push('\n');
            }
        }
        out
    }
}

fn kind_name(k: RowKind) -> &'static str {
    match k {
        RowKind::DoubleSpin => "double_spin",
        RowKind::AssociatePlus => "associate_plus",
        RowKind::AssociateMinus => "associate_minus",
    }
}
