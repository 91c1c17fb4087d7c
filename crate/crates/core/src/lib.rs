#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bounds;
pub mod cli;
pub mod error;
pub mod kinetic;
pub mod numerics;
pub mod oracle;
pub mod potential;

pub use error::{Error, Result};
pub use potential::{PotentialSum, PowerTerm, Problem};
