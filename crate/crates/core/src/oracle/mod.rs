//! Brute-force referee: the double covers built element by element from their
//! defining relations, with conjugacy classes found by closure.

mod cover;
mod element;
mod verify;

pub use cover::{build_cover, compare_presentations, predicted_order, ClassStatistics, Cover, CoverClass, COVER_CAP};
pub use element::{inverse, multiply, CoverElement};
pub use verify::{column_labels, oracle_check, verify_table, OracleReport};
