//! Exact spin character tables for the double covers of the symmetric group,
//! the hyperoctahedral group and the wreath products `Γ ≀ B_n`.

pub mod error;
pub mod exactnum;
pub mod partitions;
pub mod classdata;
pub mod qfunctions;
pub mod spintable;
pub mod oracle;
pub mod cli;

pub use error::{Error, Result};
