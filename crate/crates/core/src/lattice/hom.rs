//! Homomorphisms between finitely generated abelian groups.

use num_bigint::BigInt;

use super::group::{FgAbelianGroup, GroupElement};
use super::matrix::IntMatrix;
use super::span::Lattice;
use crate::error::{Error, Result};

/// A homomorphism induced by an integer matrix on ambient lattices.
///
/// The matrix acts on column vectors: column `j` is the image of the
/// `j`-th source generator, so it has `r_tgt` rows and `r_src` columns.
#[derive(Clone, Debug)]
pub struct GroupHom {
    source: FgAbelianGroup,
    target: FgAbelianGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Checks that the matrix sends every source relation to a target
    /// relation; the first offending source relation row is the witness.
    pub fn from_generator_images(
        source: FgAbelianGroup,
        target: FgAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<Self> {
        if matrix.cols() != source.ambient_rank() {
            return Err(Error::DimensionMismatch {
                expected: source.ambient_rank(),
                found: matrix.cols(),
            });
        }
        if matrix.rows() != target.ambient_rank() {
            return Err(Error::DimensionMismatch {
                expected: target.ambient_rank(),
                found: matrix.rows(),
            });
        }
        for rel in source.relations().basis_rows() {
            if !target.relations().contains(&matrix.apply(&rel))? {
                return Err(Error::NotWellDefined { witness: rel });
            }
        }
        Ok(GroupHom {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &FgAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &GroupElement) -> Result<GroupElement> {
        self.source.check_element(x)?;
        self.target.class_of(&self.matrix.apply(x.representative()))
    }

    pub fn apply_lift(&self, v: &[BigInt]) -> Result<GroupElement> {
        super::span::check_len(self.source.ambient_rank(), v.len())?;
        self.target.class_of(&self.matrix.apply(v))
    }

    /// Preimage lattice of the image subgroup: column span plus target relations.
    pub fn image_lattice(&self) -> Lattice {
        let mut rows = self.target.relations().basis_rows();
        rows.extend((0..self.matrix.cols()).map(|j| self.matrix.column(j)));
        Lattice::from_matrix(&IntMatrix::from_rows(self.target.ambient_rank(), rows))
    }

    pub fn is_surjective(&self) -> bool {
        self.image_lattice() == Lattice::full(self.target.ambient_rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::group::quotient_by_rows;
    use crate::lattice::matrix::big_vec;

    #[test]
    fn identity_hom() {
        let g = quotient_by_rows(2, vec![big_vec(&[2, 0]), big_vec(&[0, 3])]).unwrap();
        let h = GroupHom::from_generator_images(g.clone(), g.clone(), IntMatrix::identity(2)).unwrap();
        assert!(h.is_surjective());
        let x = g.basis_class(1);
        assert_eq!(h.apply(&x).unwrap(), x);
    }

    #[test]
    fn free_source_is_always_well_defined() {
        let z = quotient_by_rows(1, vec![]).unwrap();
        let z2 = quotient_by_rows(1, vec![big_vec(&[2])]).unwrap();
        let h = GroupHom::from_generator_images(z, z2, IntMatrix::from_i64(&[&[1]])).unwrap();
        assert!(h.is_surjective());
    }

    #[test]
    fn torsion_into_free_is_not_well_defined() {
        let z2 = quotient_by_rows(1, vec![big_vec(&[2])]).unwrap();
        let z = quotient_by_rows(1, vec![]).unwrap();
        let err = GroupHom::from_generator_images(z2, z, IntMatrix::from_i64(&[&[1]])).unwrap_err();
        assert_eq!(err, Error::NotWellDefined { witness: big_vec(&[2]) });
    }

    #[test]
    fn surjectivity_examples() {
        let z2 = quotient_by_rows(1, vec![big_vec(&[2])]).unwrap();
        let zero = GroupHom::from_generator_images(z2.clone(), z2, IntMatrix::from_i64(&[&[0]])).unwrap();
        assert!(!zero.is_surjective());

        // Z -> Z^2/<(1,1)>, e -> e_1
        let z = quotient_by_rows(1, vec![]).unwrap();
        let t = quotient_by_rows(2, vec![big_vec(&[1, 1])]).unwrap();
        let h = GroupHom::from_generator_images(z, t, IntMatrix::from_i64(&[&[1], &[0]])).unwrap();
        assert!(h.is_surjective());
    }
}
