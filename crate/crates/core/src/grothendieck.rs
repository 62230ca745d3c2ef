//! The Grothendieck group of a presentation.
//!
//! `K_0` is computed in the split model: `Z^r` on the indecomposables modulo
//! the Euler vectors of the listed angles together with the suspension rows
//! `e_j + (-1)^{n+1} S e_j` contributed by the rotated trivial angles.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::category::{AngleGen, ObjectVec, Presentation};
use crate::error::Result;
use crate::lattice::{FgAbelianGroup, GroupElement, IntMatrix, Lattice};

/// Alternating vertex sum `A_1 - A_2 + ... + (-1)^{n+1} A_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EulerVector(Vec<BigInt>);

impl EulerVector {
    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<BigInt> {
        self.0
    }
}

pub fn euler_vector(p: &Presentation, a: &AngleGen) -> Result<EulerVector> {
    p.check_angle(a)?;
    let mut out = vec![BigInt::zero(); p.rank()];
    for (i, v) in a.vertices().iter().enumerate() {
        for (acc, &m) in out.iter_mut().zip(v.multiplicities()) {
            if i % 2 == 0 {
                *acc += m;
            } else {
                *acc -= m;
            }
        }
    }
    Ok(EulerVector(out))
}

/// `e_j + (-1)^{n+1} S e_j` for every indecomposable `j`.
pub fn suspension_rows(p: &Presentation) -> Vec<Vec<BigInt>> {
    let r = p.rank();
    let sign = if p.is_odd() { 1 } else { -1 };
    (0..r)
        .map(|j| {
            let mut row = vec![BigInt::zero(); r];
            row[j] += 1;
            row[p.suspension().apply_index(j, 1)] += sign;
            row
        })
        .collect()
}

/// Where a generating relation comes from.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationSource {
    /// Euler vector of the listed angle with this index.
    Angle(usize),
    /// Suspension row of this indecomposable.
    SuspensionRow(usize),
}

impl std::fmt::Display for RelationSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RelationSource::Angle(i) => write!(f, "Euler vector of angle {i}"),
            RelationSource::SuspensionRow(j) => write!(f, "suspension row {j}"),
        }
    }
}

/// Generating rows of the relation lattice, before canonicalization:
/// the Euler vectors of the listed angles followed by the suspension rows.
pub fn relation_generators(p: &Presentation) -> Vec<(RelationSource, Vec<BigInt>)> {
    let mut rows: Vec<(RelationSource, Vec<BigInt>)> = p
        .angles()
        .iter()
        .enumerate()
        .map(|(i, a)| (RelationSource::Angle(i), euler_vector(p, a).expect("validated angle").into_vec()))
        .collect();
    rows.extend(
        suspension_rows(p)
            .into_iter()
            .enumerate()
            .map(|(j, row)| (RelationSource::SuspensionRow(j), row)),
    );
    rows
}

pub fn relation_lattice(p: &Presentation) -> Lattice {
    let rows = relation_generators(p).into_iter().map(|(_, row)| row).collect();
    Lattice::from_matrix(&IntMatrix::from_rows(p.rank(), rows))
}

/// `K_0` of a presentation together with its class map.
#[derive(Clone, Debug)]
pub struct K0Result {
    presentation: Presentation,
    group: FgAbelianGroup,
}

/// What [`K0Result::object_for_element`] realizes an element as.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ElementObject {
    /// Odd `n`: a single object `A` with `[A] = x`.
    Single(ObjectVec),
    /// Even `n`: objects `(A, B)` with `[A] - [B] = x`.
    Pair(ObjectVec, ObjectVec),
}

pub fn k0(p: &Presentation) -> K0Result {
    K0Result {
        presentation: p.clone(),
        group: FgAbelianGroup::quotient(relation_lattice(p)),
    }
}

impl K0Result {
    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn relation_lattice(&self) -> &Lattice {
        self.group.relations()
    }

    pub fn class_of(&self, v: &ObjectVec) -> Result<GroupElement> {
        self.presentation.check_object(v)?;
        self.group.class_of(&v.to_big())
    }

    /// `[A] = [B]` iff `A - B` is a relation.
    pub fn equal_classes(&self, a: &ObjectVec, b: &ObjectVec) -> Result<bool> {
        self.presentation.check_object(a)?;
        self.presentation.check_object(b)?;
        let diff: Vec<BigInt> = a.to_big().iter().zip(b.to_big()).map(|(x, y)| x - y).collect();
        self.relation_lattice().contains(&diff)
    }

    pub fn object_for_element(&self, x: &GroupElement) -> Result<ElementObject> {
        self.group.check_element(x)?;
        self.object_for_lift(x.representative())
    }

    /// Splits a lift `v = v⁺ - v⁻`. For odd `n` the negative part is moved
    /// across with one suspension (`[S w] = -[w]`), giving `v⁺ + S v⁻`.
    pub fn object_for_lift(&self, v: &[BigInt]) -> Result<ElementObject> {
        crate::lattice::span::check_len(self.presentation.rank(), v.len())?;
        let pos: Vec<BigInt> = v.iter().map(|x| if x.is_positive() { x.clone() } else { BigInt::zero() }).collect();
        let neg: Vec<BigInt> = v.iter().map(|x| if x.is_negative() { -x } else { BigInt::zero() }).collect();
        let pos = ObjectVec::from_big(&pos)?;
        let neg = ObjectVec::from_big(&neg)?;
        if self.presentation.is_odd() {
            let shifted = self.presentation.suspend_object(&neg, 1);
            Ok(ElementObject::Single(&pos + &shifted))
        } else {
            Ok(ElementObject::Pair(pos, neg))
        }
    }

    /// Class realized by an [`ElementObject`].
    pub fn class_of_realization(&self, obj: &ElementObject) -> Result<GroupElement> {
        match obj {
            ElementObject::Single(a) => self.class_of(a),
            ElementObject::Pair(a, b) => Ok(self.group.sub(&self.class_of(a)?, &self.class_of(b)?)),
        }
    }
}
