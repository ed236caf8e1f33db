//! Subdivision graphs, permutation groups and local distance-transitivity.

pub mod autsolve;
pub mod checks;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod perm;

pub use error::{Error, Result};
