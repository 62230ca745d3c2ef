//! Finitely presented n-angulated categories at the level of objects.
//!
//! Objects are multiplicity vectors over the indecomposables, the suspension
//! is a permutation of the indecomposables, and an n-angle is stored as its
//! tuple of vertices `(A_1, ..., A_n)`; the closing vertex `ΣA_1` is implicit.
//! Morphisms are not modelled.

use std::collections::HashSet;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::IntMatrix;
use crate::validation::{Parity, ValidationReport, Violation};

/// An object as a multiplicity vector over the indecomposables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ObjectVec(Vec<u64>);

impl ObjectVec {
    pub fn new(multiplicities: Vec<u64>) -> Self {
        ObjectVec(multiplicities)
    }

    pub fn zero(rank: usize) -> Self {
        ObjectVec(vec![0; rank])
    }

    pub fn basis(rank: usize, j: usize) -> Self {
        let mut v = vec![0; rank];
        v[j] = 1;
        ObjectVec(v)
    }

    /// Nonnegative integer vector to object; fails on negative or huge entries.
    pub fn from_big(v: &[BigInt]) -> Result<Self> {
        v.iter()
            .map(|x| {
                if x.is_negative() {
                    Err(Error::NegativeMultiplicity(x.clone()))
                } else {
                    x.to_u64().ok_or_else(|| Error::Overflow(x.clone()))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(ObjectVec)
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Total multiplicity.
    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn to_big(&self) -> Vec<BigInt> {
        self.0.iter().map(|&m| BigInt::from(m)).collect()
    }

    /// Componentwise `self ≥ other`, i.e. `other` is a summand of `self`.
    pub fn dominates(&self, other: &ObjectVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    /// `self - other` when `other` is a summand.
    pub fn checked_sub(&self, other: &ObjectVec) -> Option<ObjectVec> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(ObjectVec)
    }

    pub fn scaled(&self, k: u64) -> ObjectVec {
        ObjectVec(self.0.iter().map(|m| m * k).collect())
    }

    /// Componentwise minimum.
    pub fn meet(&self, other: &ObjectVec) -> ObjectVec {
        ObjectVec(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }
}

impl Add for &ObjectVec {
    type Output = ObjectVec;

    fn add(self, rhs: &ObjectVec) -> ObjectVec {
        assert_eq!(self.0.len(), rhs.0.len(), "objects of different rank");
        ObjectVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Debug for ObjectVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The suspension as a permutation `σ` of indecomposable indices.
///
/// On objects it acts by `S e_j = e_σ(j)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuspensionPerm {
    images: Vec<usize>,
    inverse: Vec<usize>,
}

impl SuspensionPerm {
    /// `None` unless `images` is a permutation of `0..images.len()`.
    pub fn new(images: Vec<usize>) -> Option<Self> {
        let r = images.len();
        let mut inverse = vec![usize::MAX; r];
        for (j, &s) in images.iter().enumerate() {
            if s >= r || inverse[s] != usize::MAX {
                return None;
            }
            inverse[s] = j;
        }
        Some(SuspensionPerm { images, inverse })
    }

    pub fn identity(r: usize) -> Self {
        SuspensionPerm {
            images: (0..r).collect(),
            inverse: (0..r).collect(),
        }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// `σ^k(j)`; negative `k` uses `σ⁻¹`.
    pub fn apply_index(&self, j: usize, k: i64) -> usize {
        let table = if k >= 0 { &self.images } else { &self.inverse };
        (0..k.unsigned_abs()).fold(j, |x, _| table[x])
    }

    /// `S^k v`.
    pub fn apply(&self, v: &ObjectVec, k: i64) -> ObjectVec {
        let mut out = vec![0; v.rank()];
        for (j, &m) in v.multiplicities().iter().enumerate() {
            out[self.apply_index(j, k)] += m;
        }
        ObjectVec(out)
    }

    /// `S^k` applied to an arbitrary integer vector.
    pub fn apply_big(&self, v: &[BigInt], k: i64) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); v.len()];
        for (j, m) in v.iter().enumerate() {
            out[self.apply_index(j, k)] += m;
        }
        out
    }

    /// Permutation matrix of `S^k` acting on column vectors.
    pub fn matrix(&self, k: i64) -> IntMatrix {
        let r = self.rank();
        let mut m = IntMatrix::zeros(r, r);
        for j in 0..r {
            m.set(self.apply_index(j, k), j, BigInt::from(1));
        }
        m
    }
}

/// An n-angle as its vertex tuple `(A_1, ..., A_n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AngleGen {
    vertices: Vec<ObjectVec>,
}

impl AngleGen {
    pub fn new(vertices: Vec<ObjectVec>) -> Self {
        AngleGen { vertices }
    }

    pub fn zero(n: usize, rank: usize) -> Self {
        AngleGen {
            vertices: vec![ObjectVec::zero(rank); n],
        }
    }

    pub fn vertices(&self) -> &[ObjectVec] {
        &self.vertices
    }

    pub fn arity(&self) -> usize {
        self.vertices.len()
    }

    pub fn into_vertices(self) -> Vec<ObjectVec> {
        self.vertices
    }
}

/// Componentwise direct sum of two angles of the same arity.
pub fn direct_sum_angle(a: &AngleGen, b: &AngleGen) -> Result<AngleGen> {
    if a.arity() != b.arity() {
        return Err(Error::ArityMismatch {
            expected: a.arity(),
            found: b.arity(),
        });
    }
    Ok(AngleGen {
        vertices: a.vertices.iter().zip(&b.vertices).map(|(x, y)| x + y).collect(),
    })
}

/// Unchecked presentation data, e.g. freshly parsed from a file.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresentationData {
    pub n: usize,
    pub names: Vec<String>,
    /// `suspension[j]` is the index of `Σ` of indecomposable `j`.
    pub suspension: Vec<usize>,
    pub angles: Vec<Vec<ObjectVec>>,
}

pub fn validate_presentation(p: &PresentationData) -> ValidationReport {
    let mut violations = Vec::new();
    let r = p.names.len();
    if p.n < 3 {
        violations.push(Violation::new("n-bound", format!("n must be ≥ 3, found {}", p.n)));
    }
    let mut seen = HashSet::new();
    for name in &p.names {
        if !seen.insert(name.as_str()) {
            violations.push(Violation::new("names-distinct", format!("duplicate indecomposable {name:?}")));
        }
    }
    if p.suspension.len() != r {
        violations.push(Violation::new(
            "suspension-bijective",
            format!("suspension has {} entries for {r} indecomposables", p.suspension.len()),
        ));
    } else if SuspensionPerm::new(p.suspension.clone()).is_none() {
        violations.push(Violation::new("suspension-bijective", "suspension not bijective"));
    }
    for (i, angle) in p.angles.iter().enumerate() {
        if angle.len() != p.n {
            violations.push(Violation::new(
                "angle-arity",
                format!("angle {i} has {} vertices, expected {}", angle.len(), p.n),
            ));
        }
        for (k, v) in angle.iter().enumerate() {
            if v.rank() != r {
                violations.push(Violation::new(
                    "object-rank",
                    format!("angle {i} vertex {} has length {}, expected {r}", k + 1, v.rank()),
                ));
            }
        }
    }
    let parity = Parity::of(p.n);
    ValidationReport {
        violations,
        parity,
        classification_applies: parity == Parity::Odd,
    }
}

/// A validated presentation of an n-angulated category.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    n: usize,
    names: Vec<String>,
    suspension: SuspensionPerm,
    angles: Vec<AngleGen>,
}

impl Presentation {
    pub fn new(data: PresentationData) -> Result<Self> {
        let report = validate_presentation(&data);
        if !report.is_valid() {
            return Err(Error::InvalidPresentation(report.violations));
        }
        Ok(Presentation {
            n: data.n,
            names: data.names,
            suspension: SuspensionPerm::new(data.suspension).expect("validated"),
            angles: data.angles.into_iter().map(AngleGen::new).collect(),
        })
    }

    /// Shorthand for tests and examples: indecomposables named `x0, x1, ...`.
    pub fn from_parts(n: usize, suspension: Vec<usize>, angles: Vec<Vec<Vec<u64>>>) -> Result<Self> {
        let names = (0..suspension.len()).map(|j| format!("x{j}")).collect();
        Self::new(PresentationData {
            n,
            names,
            suspension,
            angles: angles
                .into_iter()
                .map(|a| a.into_iter().map(ObjectVec::new).collect())
                .collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.n)
    }

    pub fn is_odd(&self) -> bool {
        self.parity() == Parity::Odd
    }

    /// Number of indecomposables.
    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn suspension(&self) -> &SuspensionPerm {
        &self.suspension
    }

    pub fn angles(&self) -> &[AngleGen] {
        &self.angles
    }

    pub fn to_data(&self) -> PresentationData {
        PresentationData {
            n: self.n,
            names: self.names.clone(),
            suspension: self.suspension.images().to_vec(),
            angles: self.angles.iter().map(|a| a.vertices().to_vec()).collect(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        validate_presentation(&self.to_data())
    }

    pub fn zero_object(&self) -> ObjectVec {
        ObjectVec::zero(self.rank())
    }

    pub fn zero_angle(&self) -> AngleGen {
        AngleGen::zero(self.n, self.rank())
    }

    pub(crate) fn check_object(&self, v: &ObjectVec) -> Result<()> {
        crate::lattice::span::check_len(self.rank(), v.rank())
    }

    pub(crate) fn check_angle(&self, a: &AngleGen) -> Result<()> {
        if a.arity() != self.n {
            return Err(Error::ArityMismatch {
                expected: self.n,
                found: a.arity(),
            });
        }
        a.vertices().iter().try_for_each(|v| self.check_object(v))
    }

    /// `Σ^k v`.
    pub fn suspend_object(&self, v: &ObjectVec, k: i64) -> ObjectVec {
        self.suspension.apply(v, k)
    }

    /// `(A_1, ..., A_n) ↦ (A_2, ..., A_n, ΣA_1)`.
    pub fn rotate_angle(&self, a: &AngleGen) -> AngleGen {
        let mut vertices = a.vertices[1..].to_vec();
        vertices.push(self.suspend_object(&a.vertices[0], 1));
        AngleGen { vertices }
    }

    /// `k` successive left rotations.
    pub fn rotate_angle_by(&self, a: &AngleGen, k: usize) -> AngleGen {
        (0..k).fold(a.clone(), |acc, _| self.rotate_angle(&acc))
    }

    /// The trivial angle `(v, v, 0, ..., 0)` rotated `slot - 1` times.
    pub fn trivial_angle(&self, v: &ObjectVec, slot: usize) -> Result<AngleGen> {
        if slot == 0 || slot > self.n {
            return Err(Error::SlotOutOfRange { slot, n: self.n });
        }
        self.check_object(v)?;
        let mut vertices = vec![self.zero_object(); self.n];
        vertices[0] = v.clone();
        vertices[1] = v.clone();
        Ok(self.rotate_angle_by(&AngleGen { vertices }, slot - 1))
    }
}
