//! Grothendieck groups and rings of finitely presented n-angulated
//! categories, computed with exact integer lattice arithmetic.
//!
//! A category is presented by its indecomposable objects, a suspension
//! permutation and a list of generating n-angles (as object tuples). Objects
//! are multiplicity vectors, so `K_0` is `Z^r` modulo the lattice spanned by
//! the Euler vectors of the angles. On top of that the crate classifies dense
//! complete subcategories by subgroups, tensor ideals by ring ideals, and
//! checks induced maps from cluster-tilting data.

pub mod category;
pub mod classification;
pub mod cluster;
pub mod error;
pub mod grothendieck;
pub mod lattice;
pub mod parallel;
pub mod samples;
pub mod tensor;
pub mod validation;
pub mod witness;

pub use error::{Error, Result};
