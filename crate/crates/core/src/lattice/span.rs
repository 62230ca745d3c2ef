//! Integer row lattices stored in canonical Hermite form.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::normal_form::hnf_only;
use crate::error::{Error, Result};

/// A sublattice of `Z^r`, stored as the nonzero rows of its row HNF.
///
/// Two equal lattices always have identical bases, so derived equality is
/// lattice equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Lattice {
    ambient_rank: usize,
    basis: IntMatrix,
    pivots: Vec<usize>,
}

impl Lattice {
    pub fn zero(ambient_rank: usize) -> Self {
        Lattice {
            ambient_rank,
            basis: IntMatrix::zeros(0, ambient_rank),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Lattice {
            ambient_rank,
            basis: IntMatrix::identity(ambient_rank),
            pivots: (0..ambient_rank).collect(),
        }
    }

    /// The row span of `generators`.
    pub fn from_matrix(generators: &IntMatrix) -> Self {
        let (h, pivots) = hnf_only(generators);
        Lattice {
            ambient_rank: generators.cols(),
            basis: h.top_rows(pivots.len()),
            pivots,
        }
    }

    pub fn from_generators(ambient_rank: usize, generators: Vec<Vec<BigInt>>) -> Result<Self> {
        for g in &generators {
            check_len(ambient_rank, g.len())?;
        }
        Ok(Self::from_matrix(&IntMatrix::from_rows(ambient_rank, generators)))
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    /// Canonical basis, one row per generator.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<BigInt>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.ambient_rank
    }

    /// `[Z^r : L]` when finite.
    pub fn index(&self) -> Option<BigInt> {
        self.is_full_rank().then(|| {
            self.pivots
                .iter()
                .enumerate()
                .fold(BigInt::one(), |acc, (i, &c)| acc * self.basis.get(i, c))
        })
    }

    /// Lattice membership by back-substitution against the echelon basis.
    pub fn contains(&self, v: &[BigInt]) -> Result<bool> {
        check_len(self.ambient_rank, v.len())?;
        Ok(self.residual(v).iter().all(Zero::is_zero))
    }

    /// Integer coefficients expressing `v` in the canonical basis, if any.
    pub fn coefficients(&self, v: &[BigInt]) -> Result<Option<Vec<BigInt>>> {
        check_len(self.ambient_rank, v.len())?;
        let mut rest = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for (i, &c) in self.pivots.iter().enumerate() {
            if rest[..c].iter().any(|x| !x.is_zero()) {
                return Ok(None);
            }
            let (q, r) = rest[c].div_rem(self.basis.get(i, c));
            if !r.is_zero() {
                return Ok(None);
            }
            sub_scaled(&mut rest, self.basis.row(i), &q);
            coeffs.push(q);
        }
        Ok(rest.iter().all(Zero::is_zero).then_some(coeffs))
    }

    fn residual(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut rest = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            if rest[..c].iter().any(|x| !x.is_zero()) {
                return rest;
            }
            let (q, r) = rest[c].div_rem(self.basis.get(i, c));
            if !r.is_zero() {
                return rest;
            }
            sub_scaled(&mut rest, self.basis.row(i), &q);
        }
        rest
    }

    /// Reduces `v` so every pivot coordinate lies in `[0, pivot)`.
    ///
    /// This is a canonical coset representative of `v + L`: two vectors
    /// reduce to the same result exactly when their difference is in `L`.
    pub fn reduce(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        check_len(self.ambient_rank, v.len())?;
        let mut out = v.to_vec();
        for (i, &c) in self.pivots.iter().enumerate() {
            let q = out[c].div_floor(self.basis.get(i, c));
            sub_scaled(&mut out, self.basis.row(i), &q);
        }
        Ok(out)
    }

    pub fn contains_lattice(&self, other: &Lattice) -> Result<bool> {
        check_len(self.ambient_rank, other.ambient_rank)?;
        for r in 0..other.basis.rows() {
            if !self.contains(other.basis.row(r))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The first basis row of `other` outside `self`, if any.
    pub fn first_missing_row(&self, other: &Lattice) -> Result<Option<Vec<BigInt>>> {
        check_len(self.ambient_rank, other.ambient_rank)?;
        for r in 0..other.basis.rows() {
            if !self.contains(other.basis.row(r))? {
                return Ok(Some(other.basis.row(r).to_vec()));
            }
        }
        Ok(None)
    }

    pub fn sum(&self, other: &Lattice) -> Result<Lattice> {
        check_len(self.ambient_rank, other.ambient_rank)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Self::from_matrix(&IntMatrix::from_rows(self.ambient_rank, rows)))
    }

    /// `self + span(extra)`.
    pub fn extend(&self, extra: Vec<Vec<BigInt>>) -> Result<Lattice> {
        let mut rows = self.basis_rows();
        for v in &extra {
            check_len(self.ambient_rank, v.len())?;
        }
        rows.extend(extra);
        Ok(Self::from_matrix(&IntMatrix::from_rows(self.ambient_rank, rows)))
    }

    /// Lexicographic comparison of the canonical bases, row-major.
    pub fn canonical_cmp(&self, other: &Lattice) -> Ordering {
        let a = self.basis_rows();
        let b = other.basis_rows();
        a.iter()
            .flatten()
            .cmp(b.iter().flatten())
            .then(a.len().cmp(&b.len()))
    }
}

fn sub_scaled(v: &mut [BigInt], row: &[BigInt], q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for (x, r) in v.iter_mut().zip(row) {
        *x -= q * r;
    }
}

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
