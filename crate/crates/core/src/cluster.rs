//! The map `K_0(C) → K_0(T)` induced by including a subcategory `C` of a
//! triangulated category `T` closed under `Σ^{n-2}`.
//!
//! Only object-level data is checked: injectivity of the map on
//! indecomposables and the intertwining `ι(Σ̂ x) = Σ_T^{n-2}(ι x)`. The
//! cluster-tilting conditions themselves are not visible here, so a
//! non-surjective result points at incomplete input data.

use num_bigint::BigInt;
use num_traits::One;

use crate::category::Presentation;
use crate::error::{Error, Result};
use crate::grothendieck::{k0, relation_generators};
use crate::lattice::{GroupHom, IntMatrix};
use crate::validation::{Parity, ValidationReport, Violation};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EmbeddingData {
    pub t: Presentation,
    pub c: Presentation,
    /// `iota[x]` is the `T`-indecomposable that `C`-indecomposable `x` maps to.
    pub iota: Vec<usize>,
}

pub fn validate_embedding(e: &EmbeddingData) -> ValidationReport {
    let mut violations = Vec::new();
    if e.t.n() != 3 {
        violations.push(Violation::new("target-triangulated", format!("T must have n = 3, found {}", e.t.n())));
    }
    if e.iota.len() != e.c.rank() {
        violations.push(Violation::new(
            "map-domain",
            format!("map has {} entries for {} indecomposables", e.iota.len(), e.c.rank()),
        ));
    }
    if let Some(x) = e.iota.iter().position(|&y| y >= e.t.rank()) {
        violations.push(Violation::new("map-range", format!("{x} maps outside T")));
    }
    for (x, &y) in e.iota.iter().enumerate() {
        if let Some(x2) = e.iota[..x].iter().position(|&z| z == y) {
            violations.push(Violation::new("not injective", format!("{x2} and {x} both map to {y}")));
        }
    }
    if violations.is_empty() {
        let shift = e.c.n() as i64 - 2;
        for (x, &y) in e.iota.iter().enumerate() {
            let lhs = e.iota[e.c.suspension().apply_index(x, 1)];
            let rhs = e.t.suspension().apply_index(y, shift);
            if lhs != rhs {
                violations.push(Violation::new(
                    "intertwining",
                    format!("x = {x}: ι(Σ̂ x) = {lhs} but Σ^{shift} ι(x) = {rhs}"),
                ));
            }
        }
    }
    ValidationReport {
        violations,
        parity: Parity::of(e.c.n()),
        classification_applies: e.c.is_odd(),
    }
}

/// `e_x ↦ e_{ι(x)}`, `r_T × r_C`.
pub fn embedding_matrix(e: &EmbeddingData) -> IntMatrix {
    let mut m = IntMatrix::zeros(e.t.rank(), e.c.rank());
    for (x, &y) in e.iota.iter().enumerate() {
        m.set(y, x, BigInt::one());
    }
    m
}

/// The induced homomorphism. Each generating relation of `C` is checked
/// separately so the offending angle or suspension row can be named.
pub fn induced_hom(e: &EmbeddingData) -> Result<GroupHom> {
    let report = validate_embedding(e);
    if !report.is_valid() {
        return Err(Error::InvalidEmbedding(report.violations));
    }
    let m = embedding_matrix(e);
    let kc = k0(&e.c);
    let kt = k0(&e.t);
    for (origin, row) in relation_generators(&e.c) {
        let image = m.apply(&row);
        if !kt.relation_lattice().contains(&image)? {
            return Err(Error::RelationNotPreserved { origin, image });
        }
    }
    GroupHom::from_generator_images(kc.group().clone(), kt.group().clone(), m)
}

pub fn check_surjective(hom: &GroupHom) -> bool {
    hom.is_surjective()
}
