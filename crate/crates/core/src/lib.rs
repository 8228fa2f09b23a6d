//! Exact partially ordered groups and Riesz decomposition tables.
//!
//! Carriers are described by [`GroupDescriptor`] trees and their values by
//! [`Element`]. Tables for equations `a1 + a2 = b1 + b2` come from the
//! constructions in [`solvers`] and are always re-checked by
//! [`rdp::verify_table`]. Arithmetic is exact throughout.

pub mod budget;
pub mod casebook;
pub mod encode;
pub mod error;
pub mod group;
pub mod num;
pub mod oracle;
pub mod parse;
pub mod props;
pub mod random;
pub mod rdp;
pub mod sample;
pub mod solvers;
pub mod word;

pub use budget::{SearchBudget, SearchOutcome};
pub use error::{Error, Result};
pub use group::{Element, GroupDescriptor, ProductMode};
pub use props::Verdict;
pub use rdp::{Equation, RdpTable, TableReport};
pub use solvers::{solve, SolverTrace};
