//! Finitely generated abelian groups `Z^r / L` and their subgroups.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::normal_form::smith_normal_form;
use super::span::{check_len, Lattice};
use crate::error::{Error, Result};

/// The quotient of `Z^r` by a relation lattice.
///
/// Elements are represented by canonical coset representatives: the
/// reduction of any lift against the Hermite basis of the relations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FgAbelianGroup {
    relations: Lattice,
    invariant_factors: Vec<BigInt>,
    free_rank: usize,
}

/// An element of a [`FgAbelianGroup`], held as its canonical representative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GroupElement {
    rep: Vec<BigInt>,
}

impl GroupElement {
    pub fn representative(&self) -> &[BigInt] {
        &self.rep
    }

    pub fn into_representative(self) -> Vec<BigInt> {
        self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.iter().all(Zero::is_zero)
    }
}

impl FgAbelianGroup {
    pub fn quotient(relations: Lattice) -> Self {
        let snf = smith_normal_form(relations.basis());
        let invariant_factors = snf
            .diagonal()
            .into_iter()
            .filter(|d| *d > BigInt::one())
            .collect();
        let free_rank = relations.ambient_rank() - relations.rank();
        FgAbelianGroup {
            relations,
            invariant_factors,
            free_rank,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.relations.ambient_rank()
    }

    pub fn relations(&self) -> &Lattice {
        &self.relations
    }

    /// Invariant factors `d_1 | d_2 | ...`, each greater than one.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.relations.index()
    }

    pub(crate) fn require_finite(&self) -> Result<BigInt> {
        self.order().ok_or(Error::InfiniteGroup {
            free_rank: self.free_rank,
        })
    }

    pub fn canonical(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        self.relations.reduce(v)
    }

    /// The class of an arbitrary lift `v`.
    pub fn class_of(&self, v: &[BigInt]) -> Result<GroupElement> {
        Ok(GroupElement {
            rep: self.canonical(v)?,
        })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            rep: vec![BigInt::zero(); self.ambient_rank()],
        }
    }

    /// Class of the `j`-th standard basis vector.
    pub fn basis_class(&self, j: usize) -> GroupElement {
        let mut v = vec![BigInt::zero(); self.ambient_rank()];
        v[j] = BigInt::one();
        self.class_of(&v).expect("basis vector has ambient length")
    }

    pub fn contains_element(&self, x: &GroupElement) -> bool {
        x.rep.len() == self.ambient_rank()
            && self.canonical(&x.rep).is_ok_and(|c| c == x.rep)
    }

    pub(crate) fn check_element(&self, x: &GroupElement) -> Result<()> {
        check_len(self.ambient_rank(), x.rep.len())?;
        if self.contains_element(x) {
            Ok(())
        } else {
            Err(Error::NotAnElement)
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let v: Vec<BigInt> = a.rep.iter().zip(&b.rep).map(|(x, y)| x + y).collect();
        self.class_of(&v).expect("operands share the ambient rank")
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let v: Vec<BigInt> = a.rep.iter().map(|x| -x).collect();
        self.class_of(&v).expect("operand has the ambient rank")
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        let v: Vec<BigInt> = a.rep.iter().map(|x| k * x).collect();
        self.class_of(&v).expect("operand has the ambient rank")
    }

    /// All elements of a finite group, in lexicographic order of their
    /// representatives.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        self.require_finite()?;
        let r = self.ambient_rank();
        let bounds: Vec<BigInt> = (0..r).map(|i| self.relations.basis().get(i, i).clone()).collect();
        let mut out = Vec::new();
        let mut cur = vec![BigInt::zero(); r];
        loop {
            out.push(GroupElement { rep: cur.clone() });
            // odometer, last coordinate fastest
            let mut i = r;
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = BigInt::zero();
            }
        }
    }
}

/// A subgroup `H ≤ Z^r / L`, stored as its preimage lattice `L ⊆ L_H ⊆ Z^r`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    preimage: Lattice,
}

impl Subgroup {
    pub fn trivial(g: &FgAbelianGroup) -> Self {
        Subgroup {
            preimage: g.relations.clone(),
        }
    }

    pub fn full(g: &FgAbelianGroup) -> Self {
        Subgroup {
            preimage: Lattice::full(g.ambient_rank()),
        }
    }

    /// The subgroup whose preimage is `lattice`; fails if `lattice` does not
    /// contain the relations.
    pub fn from_preimage(g: &FgAbelianGroup, lattice: Lattice) -> Result<Self> {
        check_len(g.ambient_rank(), lattice.ambient_rank())?;
        if lattice.contains_lattice(&g.relations)? {
            Ok(Subgroup { preimage: lattice })
        } else {
            Err(Error::NotASuperlattice)
        }
    }

    pub(crate) fn from_preimage_unchecked(lattice: Lattice) -> Self {
        Subgroup { preimage: lattice }
    }

    pub fn generated_by(g: &FgAbelianGroup, gens: &[GroupElement]) -> Result<Self> {
        for x in gens {
            g.check_element(x)?;
        }
        let preimage = g
            .relations
            .extend(gens.iter().map(|x| x.rep.clone()).collect())?;
        Ok(Subgroup { preimage })
    }

    pub fn preimage(&self) -> &Lattice {
        &self.preimage
    }

    pub fn contains(&self, x: &GroupElement) -> Result<bool> {
        self.preimage.contains(&x.rep)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> Result<bool> {
        other.preimage.contains_lattice(&self.preimage)
    }

    /// `|H| = [L_H : L]` when the ambient group is finite.
    pub fn order(&self, g: &FgAbelianGroup) -> Option<BigInt> {
        let whole = g.relations.index()?;
        let idx = self.preimage.index()?;
        Some(whole / idx)
    }

    /// Distinct nonzero classes of the preimage basis rows; they generate `H`.
    pub fn generators(&self, g: &FgAbelianGroup) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = Vec::new();
        for row in self.preimage.basis_rows() {
            let x = g.class_of(&row).expect("preimage shares the ambient rank");
            if !x.is_zero() && !out.contains(&x) {
                out.push(x);
            }
        }
        out
    }

    /// All elements of `H`, for finite ambient groups.
    pub fn elements(&self, g: &FgAbelianGroup) -> Result<Vec<GroupElement>> {
        let mut out = Vec::new();
        for x in g.elements()? {
            if self.contains(&x)? {
                out.push(x);
            }
        }
        Ok(out)
    }
}

/// Builds the quotient `Z^r / span(rows)`.
pub fn quotient_by_rows(ambient_rank: usize, rows: Vec<Vec<BigInt>>) -> Result<FgAbelianGroup> {
    Ok(FgAbelianGroup::quotient(Lattice::from_generators(ambient_rank, rows)?))
}
