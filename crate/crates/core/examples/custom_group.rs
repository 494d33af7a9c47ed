//! Tables over a group read from a file: here the Klein four-group.

use spinchar::classdata::GroupData;
use spinchar::spintable::{table_spin_wreath, Format, Presentation};

const KLEIN: &str = r#"{
  "name": "klein4",
  "order": 4,
  "classes": [
    {"label": "e", "size": 1, "inverse": "e"},
    {"label": "a", "size": 1, "inverse": "a"},
    {"label": "b", "size": 1, "inverse": "b"},
    {"label": "ab", "size": 1, "inverse": "ab"}
  ],
  "characters": [
    {"label": "1", "values": ["1", "1", "1", "1"]},
    {"label": "x", "values": ["1", "-1", "1", "-1"]},
    {"label": "y", "values": ["1", "1", "-1", "-1"]},
    {"label": "xy", "values": ["1", "-1", "-1", "1"]}
  ]
}"#;

fn main() {
    let path = std::env::temp_dir().join("klein4.json");
    std::fs::write(&path, KLEIN).unwrap();
    let g = GroupData::from_path(&path).expect("valid group file");

    let table = table_spin_wreath(2, &g, Presentation::AForm).unwrap();
    println!("{} rows, {} columns", table.rows.len(), table.columns.len());
    println!("{}", table.render(Format::Pretty).unwrap());
    for c in table.invariant_report() {
        println!("{:<24} {}", c.name, if c.passed { "ok" } else { "FAILED" });
    }
}
