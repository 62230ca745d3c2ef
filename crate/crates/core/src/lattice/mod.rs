//! Exact integer linear algebra: normal forms, lattices, finitely generated
//! abelian groups, subgroups and homomorphisms.

pub mod enumerate;
pub mod group;
pub mod hom;
pub mod matrix;
pub mod normal_form;
pub mod span;

pub use enumerate::enumerate_subgroups;
pub use group::{quotient_by_rows, FgAbelianGroup, GroupElement, Subgroup};
pub use hom::GroupHom;
pub use matrix::{big_vec, IntMatrix};
pub use normal_form::{hermite_normal_form, smith_normal_form, HermiteForm, SmithForm};
pub use span::Lattice;
