//! Symmetric tensor structures at object level and the ring `K_0`.
//!
//! The tensor product is given by a table on indecomposables and extended
//! bilinearly. Coherence isomorphisms only show up through the object
//! equalities they force (symmetry, unit, associativity, suspension).

use num_bigint::BigInt;
use num_traits::Zero;

use crate::category::{ObjectVec, Presentation};
use crate::classification::{
    check_regime, subcategory_from_subgroup, subgroup_from_subcategory, Certificate, CheckRegistry,
    CorrespondenceOptions, EntryStatus, SubcategoryLattice,
};
use crate::error::{Error, Result};
use crate::grothendieck::{k0, relation_generators, ElementObject, K0Result};
use crate::lattice::{enumerate_subgroups, GroupElement, Subgroup};
use crate::parallel::ordered_map;
use crate::validation::{Parity, ValidationReport, Violation};
use crate::witness::small_objects;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorPresentation {
    base: Presentation,
    /// `table[i][j] = e_i ⊗ e_j`.
    table: Vec<Vec<ObjectVec>>,
    unit: ObjectVec,
}

impl TensorPresentation {
    /// Checks only shapes; the axioms are checked by [`validate_tensor`].
    pub fn new(base: Presentation, table: Vec<Vec<ObjectVec>>, unit: ObjectVec) -> Result<Self> {
        let r = base.rank();
        let mut bad = Vec::new();
        if table.len() != r || table.iter().any(|row| row.len() != r) {
            bad.push(Violation::new("shape", format!("table must be {r} × {r}")));
        }
        if table.iter().flatten().any(|v| v.rank() != r) || unit.rank() != r {
            bad.push(Violation::new("shape", format!("table entries and unit must have rank {r}")));
        }
        if !bad.is_empty() {
            return Err(Error::InvalidTensor(bad));
        }
        Ok(TensorPresentation { base, table, unit })
    }

    /// Table given as `u64` multiplicity lists.
    pub fn from_parts(base: Presentation, table: Vec<Vec<Vec<u64>>>, unit: Vec<u64>) -> Result<Self> {
        let table = table
            .into_iter()
            .map(|row| row.into_iter().map(ObjectVec::new).collect())
            .collect();
        Self::new(base, table, ObjectVec::new(unit))
    }

    pub fn base(&self) -> &Presentation {
        &self.base
    }

    pub fn table(&self) -> &[Vec<ObjectVec>] {
        &self.table
    }

    pub fn entry(&self, i: usize, j: usize) -> &ObjectVec {
        &self.table[i][j]
    }

    pub fn unit(&self) -> &ObjectVec {
        &self.unit
    }

    /// Bilinear extension to integer vectors.
    pub fn tensor_big(&self, v: &[BigInt], w: &[BigInt]) -> Result<Vec<BigInt>> {
        let r = self.base.rank();
        crate::lattice::span::check_len(r, v.len())?;
        crate::lattice::span::check_len(r, w.len())?;
        let mut out = vec![BigInt::zero(); r];
        for (i, vi) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, wj) in w.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                let c = vi * wj;
                for (acc, &m) in out.iter_mut().zip(self.table[i][j].multiplicities()) {
                    if m != 0 {
                        *acc += &c * m;
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Bilinear extension of the table to objects.
pub fn tensor_objects(t: &TensorPresentation, v: &ObjectVec, w: &ObjectVec) -> Result<ObjectVec> {
    ObjectVec::from_big(&t.tensor_big(&v.to_big(), &w.to_big())?)
}

fn basis_big(r: usize, j: usize) -> Vec<BigInt> {
    ObjectVec::basis(r, j).to_big()
}

pub fn validate_tensor(t: &TensorPresentation) -> ValidationReport {
    let p = &t.base;
    let r = p.rank();
    let mut violations = p.validate().violations;
    let name = |j: usize| &p.names()[j];
    let e = |j: usize| basis_big(r, j);
    let tb = |v: &[BigInt], w: &[BigInt]| t.tensor_big(v, w).expect("shapes checked");

    for i in 0..r {
        for j in i + 1..r {
            if t.table[i][j] != t.table[j][i] {
                let (a, b) = (name(i), name(j));
                violations.push(Violation::new("symmetry", format!("{a} ⊗ {b} ≠ {b} ⊗ {a} (indices {i}, {j})")));
            }
        }
    }
    let unit = t.unit.to_big();
    for j in 0..r {
        if tb(&unit, &e(j)) != e(j) {
            violations.push(Violation::new("unit", format!("unit ⊗ {} ≠ {}", name(j), name(j))));
        }
    }
    'assoc: for i in 0..r {
        for j in 0..r {
            let ij = tb(&e(i), &e(j));
            for k in 0..r {
                if tb(&ij, &e(k)) != tb(&e(i), &tb(&e(j), &e(k))) {
                    let (a, b, c) = (name(i), name(j), name(k));
                    violations.push(Violation::new(
                        "associativity",
                        format!("({a} ⊗ {b}) ⊗ {c} ≠ {a} ⊗ ({b} ⊗ {c})"),
                    ));
                    break 'assoc;
                }
            }
        }
    }
    let s = p.suspension();
    for i in 0..r {
        for j in 0..r {
            let lhs = tb(&e(s.apply_index(i, 1)), &e(j));
            let rhs = s.apply_big(&tb(&e(i), &e(j)), 1);
            if lhs != rhs {
                let (a, b) = (name(i), name(j));
                violations.push(Violation::new(
                    "suspension-compatibility",
                    format!("Σ{a} ⊗ {b} ≠ Σ({a} ⊗ {b})"),
                ));
            }
        }
    }
    if violations.is_empty() {
        let lattice = crate::grothendieck::relation_lattice(p);
        for (source, row) in relation_generators(p) {
            for i in 0..r {
                if !lattice.contains(&tb(&e(i), &row)).expect("same rank") {
                    violations.push(Violation::new(
                        "angle-compatibility",
                        format!("{} ⊗ ({source} = {row:?}) leaves the relation lattice", name(i)),
                    ));
                }
            }
        }
    }
    ValidationReport {
        violations,
        parity: p.parity(),
        classification_applies: p.parity() == Parity::Odd,
    }
}

/// `K_0` with the multiplication `[A][B] = [A ⊗ B]`.
#[derive(Clone, Debug)]
pub struct K0Ring {
    tensor: TensorPresentation,
    k: K0Result,
}

pub fn ring(t: &TensorPresentation) -> Result<K0Ring> {
    if !t.base.is_odd() {
        return Err(Error::EvenNUnsupported { n: t.base.n() });
    }
    let report = validate_tensor(t);
    if !report.is_valid() {
        return Err(Error::InvalidTensor(report.violations));
    }
    Ok(K0Ring {
        tensor: t.clone(),
        k: k0(&t.base),
    })
}

impl K0Ring {
    pub fn tensor(&self) -> &TensorPresentation {
        &self.tensor
    }

    pub fn k0(&self) -> &K0Result {
        &self.k
    }

    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> Result<GroupElement> {
        self.k.group().check_element(x)?;
        self.k.group().check_element(y)?;
        self.mul_lifts(x.representative(), y.representative())
    }

    /// Product of the classes of two arbitrary lifts.
    pub fn mul_lifts(&self, v: &[BigInt], w: &[BigInt]) -> Result<GroupElement> {
        self.k.group().class_of(&self.tensor.tensor_big(v, w)?)
    }

    pub fn unit_class(&self) -> GroupElement {
        self.k.class_of(&self.tensor.unit).expect("unit has the right rank")
    }

    /// Is the subgroup closed under multiplication by every basis class?
    pub fn is_ideal(&self, h: &Subgroup) -> Result<bool> {
        let r = self.k.presentation().rank();
        for row in h.preimage().basis_rows() {
            for i in 0..r {
                if !h.preimage().contains(&self.tensor.tensor_big(&basis_big(r, i), &row)?)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RingIdeal {
    pub subgroup: Subgroup,
    pub prime: bool,
}

/// All ideals in subgroup order, each with its prime flag.
pub fn enumerate_ideals(ring: &K0Ring) -> Result<Vec<RingIdeal>> {
    let subgroups = enumerate_subgroups(ring.k.group())?;
    let elements = ring.k.group().elements()?;
    ordered_map(&subgroups, |h| -> Result<Option<RingIdeal>> {
        if !ring.is_ideal(h)? {
            return Ok(None);
        }
        Ok(Some(RingIdeal {
            prime: prime_among(ring, h, &elements)?,
            subgroup: h.clone(),
        }))
    })
    .into_iter()
    .filter_map(Result::transpose)
    .collect()
}

/// `ab ∈ H ⇒ a ∈ H or b ∈ H` over all pairs. The full ring passes.
pub fn is_prime_ideal(ring: &K0Ring, h: &Subgroup) -> Result<bool> {
    let elements = ring.k.group().elements()?;
    prime_among(ring, h, &elements)
}

fn prime_among(ring: &K0Ring, h: &Subgroup, elements: &[GroupElement]) -> Result<bool> {
    let outside: Vec<&GroupElement> = elements
        .iter()
        .filter_map(|x| match h.contains(x) {
            Ok(true) => None,
            Ok(false) => Some(Ok(x)),
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    for (i, a) in outside.iter().enumerate() {
        for b in &outside[i..] {
            if h.contains(&ring.mul(a, b)?)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Debug)]
pub struct IdealEntry {
    pub ideal: RingIdeal,
    pub order: BigInt,
    pub subcategory: SubcategoryLattice,
    pub certificates: Vec<(&'static str, Certificate)>,
    pub round_trip: bool,
    /// `e_i ⊗ v` is a member for every basis `i` and member `v`.
    pub tensor_closed: bool,
    /// `C ⊗ C' ∈ A ⇒ C ∈ A or C' ∈ A` over realized representatives.
    pub object_prime: bool,
    pub status: EntryStatus,
}

#[derive(Clone, Debug)]
pub struct TensorCorrespondenceReport {
    pub ring_order: BigInt,
    pub entries: Vec<IdealEntry>,
    /// Subgroups that are not ideals.
    pub excluded: Vec<Subgroup>,
    /// The verbatim prime test accepts the full ring.
    pub full_ideal_prime: bool,
}

impl TensorCorrespondenceReport {
    pub fn all_verified(&self) -> bool {
        self.entries.iter().all(|e| e.status == EntryStatus::Verified)
    }
}

/// Verifies the ideal / tensor-ideal and prime correspondences.
pub fn verify_tensor_correspondence(
    ring: &K0Ring,
    registry: &CheckRegistry,
    opts: &CorrespondenceOptions,
) -> Result<TensorCorrespondenceReport> {
    let k = &ring.k;
    let opts = CorrespondenceOptions {
        allow_even: false,
        ..opts.clone()
    };
    let order = check_regime(k, &opts)?;
    let g = k.group();
    let elements = g.elements()?;
    let realized: Vec<ObjectVec> = elements
        .iter()
        .map(|x| match k.object_for_element(x)? {
            ElementObject::Single(a) => Ok(a),
            ElementObject::Pair(..) => unreachable!("odd n"),
        })
        .collect::<Result<_>>()?;
    let ideals = enumerate_ideals(ring)?;
    let excluded = enumerate_subgroups(g)?
        .into_iter()
        .filter(|h| !ideals.iter().any(|i| &i.subgroup == h))
        .collect();

    let entries = ordered_map(&ideals, |ideal| ideal_entry(ring, registry, ideal, &realized))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let full_ideal_prime = entries
        .iter()
        .find(|e| e.ideal.subgroup == Subgroup::full(g))
        .is_some_and(|e| e.ideal.prime);
    Ok(TensorCorrespondenceReport {
        ring_order: order,
        entries,
        excluded,
        full_ideal_prime,
    })
}

fn ideal_entry(
    ring: &K0Ring,
    registry: &CheckRegistry,
    ideal: &RingIdeal,
    realized: &[ObjectVec],
) -> Result<IdealEntry> {
    let k = &ring.k;
    let t = &ring.tensor;
    let r = k.presentation().rank();
    let h = &ideal.subgroup;
    let subcategory = subcategory_from_subgroup(k, h)?;
    let certificates = registry.run_all(k, &subcategory)?;
    let round_trip = subgroup_from_subcategory(k, &subcategory)? == *h;

    // Lattice generators settle closure for all members; small members are
    // checked directly as well.
    let mut tensor_closed = true;
    let mut members = subcategory.lattice().basis_rows();
    for v in small_objects(r, 3) {
        if subcategory.is_member(&v)? {
            members.push(v.to_big());
        }
    }
    'closure: for v in &members {
        for i in 0..r {
            if !subcategory.lattice().contains(&t.tensor_big(&basis_big(r, i), v)?)? {
                tensor_closed = false;
                break 'closure;
            }
        }
    }

    let mut object_prime = true;
    'prime: for (i, a) in realized.iter().enumerate() {
        for b in &realized[i..] {
            if subcategory.is_member(&tensor_objects(t, a, b)?)?
                && !subcategory.is_member(a)?
                && !subcategory.is_member(b)?
            {
                object_prime = false;
                break 'prime;
            }
        }
    }

    let ok = certificates.iter().all(|(_, c)| c.is_holds()) && round_trip && tensor_closed && object_prime == ideal.prime;
    Ok(IdealEntry {
        order: h.order(k.group()).expect("finite group"),
        ideal: ideal.clone(),
        subcategory,
        certificates,
        round_trip,
        tensor_closed,
        object_prime,
        status: if ok { EntryStatus::Verified } else { EntryStatus::Failed },
    })
}
