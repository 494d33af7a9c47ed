//! Group data for Γ and the class combinatorics of its hyperoctahedral wreath product.

mod builtin;
mod classes;
mod group;

pub use builtin::{builtin, trivial};
pub use classes::{
    class_weight, cover_order, enumerate_classes, inner_product, is_split, is_split_by_rank_parity,
    split_centralizer_order, split_classes, z_wreath, Sign, SplitClassLabel, SplitFamily,
};
pub use group::{Cayley, GroupCharacter, GroupClass, GroupData};
