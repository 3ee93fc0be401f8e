//! Tools for studying the Erdős–Ko–Rado property of disjoint unions of path
//! and cycle powers: exact maximum intersecting families of independent
//! r-sets, the compression and shifting machinery used to bound them, and
//! audits that check each step on concrete instances.

pub mod error;
pub mod families;
pub mod graphcore;
pub mod solver;
pub mod verifier;

pub use error::{Error, Result};
