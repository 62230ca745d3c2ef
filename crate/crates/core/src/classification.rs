//! Dense complete subcategories and their correspondence with subgroups
//! of `K_0` (odd `n`).
//!
//! A dense complete subcategory is represented by a lattice `L_A` with
//! `R ⊆ L_A ⊆ Z^r`; its objects are the nonnegative vectors of `L_A`. The
//! structural properties are checked by certificate checks registered by
//! name in a [`CheckRegistry`].

use std::fmt;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::category::{direct_sum_angle, AngleGen, ObjectVec};
use crate::error::{Error, Result};
use crate::grothendieck::{ElementObject, K0Result};
use crate::lattice::{enumerate_subgroups, GroupElement, Lattice, Subgroup};
use crate::parallel::ordered_map;
use crate::witness::{small_objects, AngleAtom};

/// A candidate subcategory: objects are the nonnegative vectors of `lattice`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SubcategoryLattice {
    lattice: Lattice,
}

impl SubcategoryLattice {
    /// Requires `R ⊆ lattice`.
    pub fn new(k: &K0Result, lattice: Lattice) -> Result<Self> {
        if lattice.contains_lattice(k.relation_lattice())? {
            Ok(SubcategoryLattice { lattice })
        } else {
            Err(Error::NotASuperlattice)
        }
    }

    /// Any lattice, including ones missing relations. Certificate checks on
    /// such candidates may legitimately fail.
    pub fn candidate(lattice: Lattice) -> Self {
        SubcategoryLattice { lattice }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn is_member(&self, v: &ObjectVec) -> Result<bool> {
        self.lattice.contains(&v.to_big())
    }
}

pub fn subcategory_from_subgroup(k: &K0Result, h: &Subgroup) -> Result<SubcategoryLattice> {
    if !k.presentation().is_odd() {
        return Err(Error::EvenNUnsupported { n: k.presentation().n() });
    }
    subcategory_from_subgroup_experimental(k, h)
}

/// Same construction without the odd-`n` guard; nothing is claimed about
/// the result when `n` is even.
pub fn subcategory_from_subgroup_experimental(k: &K0Result, h: &Subgroup) -> Result<SubcategoryLattice> {
    SubcategoryLattice::new(k, h.preimage().clone())
}

/// The image of `K_0(A)`: every coset of `L_A` contains a nonnegative vector,
/// so the classes of member objects generate exactly `L_A / R`.
pub fn subgroup_from_subcategory(k: &K0Result, a: &SubcategoryLattice) -> Result<Subgroup> {
    Subgroup::from_preimage(k.group(), a.lattice.clone())
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Counterexample {
    /// An angle with all vertices but `outside` (0-based) in the subcategory.
    Angle {
        atoms: Vec<AngleAtom>,
        angle: AngleGen,
        outside: usize,
    },
    /// `member = summand ⊕ complement` with `member`, `summand` in the
    /// subcategory and `complement` outside.
    Split {
        member: ObjectVec,
        summand: ObjectVec,
        complement: ObjectVec,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Holds,
    Fails(Box<Counterexample>),
    Unknown { bound: usize },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails(_) => "fails",
            Verdict::Unknown { .. } => "unknown",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Certificate {
    pub verdict: Verdict,
    pub evidence: String,
}

impl Certificate {
    fn holds(evidence: impl Into<String>) -> Self {
        Certificate {
            verdict: Verdict::Holds,
            evidence: evidence.into(),
        }
    }

    fn unknown(bound: usize, evidence: impl Into<String>) -> Self {
        Certificate {
            verdict: Verdict::Unknown { bound },
            evidence: evidence.into(),
        }
    }

    pub fn is_holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.verdict.label(), self.evidence)
    }
}

/// Density: every object is a summand of a member.
///
/// If `e_j + S e_j ∈ L_A` for all `j` then `C ⊕ ΣC` is a member for every
/// `C`. Otherwise, for each `j`, look for a member `v ≥ e_j` of total
/// multiplicity at most `bound`. Never fails outright.
pub fn is_dense(k: &K0Result, a: &SubcategoryLattice, bound: usize) -> Result<Certificate> {
    let p = k.presentation();
    let r = p.rank();
    let mut suspension_ok = true;
    for j in 0..r {
        let mut v = ObjectVec::basis(r, j);
        v = &v + &p.suspend_object(&v, 1);
        if !a.is_member(&v)? {
            suspension_ok = false;
            break;
        }
    }
    if suspension_ok {
        return Ok(Certificate::holds("e_j + S e_j is a member for every j"));
    }
    let candidates = small_objects(r, bound as u64);
    for j in 0..r {
        let mut found = false;
        for v in candidates.iter().filter(|v| v.multiplicities()[j] > 0) {
            if a.is_member(v)? {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(Certificate::unknown(
                bound,
                format!("no member containing indecomposable {j} with total multiplicity ≤ {bound}"),
            ));
        }
    }
    Ok(Certificate::holds(format!(
        "every indecomposable is a summand of a member of total multiplicity ≤ {bound}"
    )))
}

/// Completeness: an angle with `n - 1` member vertices has its last vertex
/// in the subcategory.
///
/// Holds whenever `R ⊆ L_A`; otherwise [`completeness_scan`] looks for an
/// explicit failing angle.
pub fn is_complete(k: &K0Result, a: &SubcategoryLattice, bound: usize) -> Result<Certificate> {
    if a.lattice.contains_lattice(k.relation_lattice())? {
        return Ok(Certificate::holds("relation lattice is contained in the subcategory lattice"));
    }
    match completeness_scan(k, a, bound)? {
        Some(cx) => Ok(Certificate {
            verdict: Verdict::Fails(Box::new(cx)),
            evidence: "angle with exactly one vertex outside the subcategory".into(),
        }),
        None => Ok(Certificate::unknown(bound, "no failing angle among scanned candidates")),
    }
}

/// Scans each listed generator in every rotation, direct-summed with up to
/// `bound` trivial angles on single indecomposables, for an angle with
/// exactly one vertex outside `L_A`.
pub fn completeness_scan(k: &K0Result, a: &SubcategoryLattice, bound: usize) -> Result<Option<Counterexample>> {
    let p = k.presentation();
    let mut trivial = Vec::new();
    for j in 0..p.rank() {
        for slot in 1..=p.n() {
            let atom = AngleAtom::Trivial {
                object: ObjectVec::basis(p.rank(), j),
                slot,
            };
            let angle = atom.realize(p)?;
            trivial.push((atom, angle));
        }
    }
    for index in 0..p.angles().len() {
        for rotation in 0..p.n() {
            let base_atom = AngleAtom::Generator { index, rotation };
            let base = base_atom.realize(p)?;
            let mut stack: Vec<(Vec<usize>, AngleGen)> = vec![(Vec::new(), base)];
            while let Some((chosen, angle)) = stack.pop() {
                if let Some(outside) = single_outsider(a, &angle)? {
                    let mut atoms = vec![base_atom.clone()];
                    atoms.extend(chosen.iter().map(|&i| trivial[i].0.clone()));
                    return Ok(Some(Counterexample::Angle { atoms, angle, outside }));
                }
                if chosen.len() < bound {
                    let start = chosen.last().copied().unwrap_or(0);
                    // reversed so the stack pops in increasing order
                    for t in (start..trivial.len()).rev() {
                        let mut next = chosen.clone();
                        next.push(t);
                        stack.push((next, direct_sum_angle(&angle, &trivial[t].1)?));
                    }
                }
            }
        }
    }
    Ok(None)
}

fn single_outsider(a: &SubcategoryLattice, angle: &AngleGen) -> Result<Option<usize>> {
    let mut outside = None;
    for (i, v) in angle.vertices().iter().enumerate() {
        if !a.is_member(v)? {
            if outside.is_some() {
                return Ok(None);
            }
            outside = Some(i);
        }
    }
    Ok(outside)
}

/// Randomized check that `summand ⊕ complement ∈ A` with `summand ∈ A`
/// forces `complement ∈ A`. Deterministic for a given `seed`.
pub fn summand_closure_check(k: &K0Result, a: &SubcategoryLattice, trials: usize, seed: u64) -> Result<Certificate> {
    if trials == 0 {
        return Ok(Certificate::holds("0 trials"));
    }
    if !is_complete(k, a, 0)?.is_holds() {
        return Ok(Certificate::unknown(0, "completeness not established; check skipped"));
    }
    let p = k.presentation();
    let r = p.rank();
    let positives = positive_members(k, a)?;
    let basis = a.lattice.basis_rows();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checked = 0usize;
    for _ in 0..trials {
        // random lattice vector pushed into the nonnegative cone
        let mut v = vec![BigInt::from(0); r];
        for row in &basis {
            let c = BigInt::from(rng.gen_range(-3i64..=3));
            for (x, y) in v.iter_mut().zip(row) {
                *x += &c * y;
            }
        }
        let mut ok = true;
        for j in 0..r {
            if v[j] < BigInt::from(0) {
                match &positives[j] {
                    Some(pj) => {
                        let pjj = BigInt::from(pj.multiplicities()[j]);
                        let times = (-&v[j] + &pjj - 1) / &pjj;
                        for (x, y) in v.iter_mut().zip(pj.to_big()) {
                            *x += &times * y;
                        }
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        let summand = ObjectVec::from_big(&v)?;
        let complement = ObjectVec::new((0..r).map(|_| rng.gen_range(0..=3)).collect());
        let member = &summand + &complement;
        checked += 1;
        if a.is_member(&member)? && !a.is_member(&complement)? {
            return Ok(Certificate {
                verdict: Verdict::Fails(Box::new(Counterexample::Split {
                    member,
                    summand,
                    complement,
                })),
                evidence: "member with a member summand and a non-member complement".into(),
            });
        }
    }
    if checked == 0 {
        return Ok(Certificate::unknown(0, "no nonnegative members could be sampled"));
    }
    Ok(Certificate::holds(format!("{checked} of {trials} trials checked")))
}

/// For each `j`, a nonnegative member with positive `j`-th coordinate.
fn positive_members(k: &K0Result, a: &SubcategoryLattice) -> Result<Vec<Option<ObjectVec>>> {
    let p = k.presentation();
    let r = p.rank();
    let index = a.lattice.index();
    (0..r)
        .map(|j| {
            let e = ObjectVec::basis(r, j);
            let with_suspension = &e + &p.suspend_object(&e, 1);
            if a.is_member(&with_suspension)? {
                return Ok(Some(with_suspension));
            }
            Ok(index
                .as_ref()
                .and_then(|i| u64::try_from(i).ok())
                .map(|i| e.scaled(i)))
        })
        .collect()
}

/// A named structural check on candidate subcategories.
pub trait SubcategoryCheck: Send + Sync {
    fn name(&self) -> &'static str;
    fn check(&self, k: &K0Result, a: &SubcategoryLattice) -> Result<Certificate>;
}

pub struct DensityCheck {
    pub bound: usize,
}

impl SubcategoryCheck for DensityCheck {
    fn name(&self) -> &'static str {
        "dense"
    }

    fn check(&self, k: &K0Result, a: &SubcategoryLattice) -> Result<Certificate> {
        is_dense(k, a, self.bound)
    }
}

pub struct CompletenessCheck {
    pub bound: usize,
}

impl SubcategoryCheck for CompletenessCheck {
    fn name(&self) -> &'static str {
        "complete"
    }

    fn check(&self, k: &K0Result, a: &SubcategoryLattice) -> Result<Certificate> {
        is_complete(k, a, self.bound)
    }
}

pub struct SummandClosureCheck {
    pub trials: usize,
    pub seed: u64,
}

impl SubcategoryCheck for SummandClosureCheck {
    fn name(&self) -> &'static str {
        "summand-closure"
    }

    fn check(&self, k: &K0Result, a: &SubcategoryLattice) -> Result<Certificate> {
        summand_closure_check(k, a, self.trials, self.seed)
    }
}

/// Checks keyed by name, run in registration order.
pub struct CheckRegistry {
    checks: Vec<Box<dyn SubcategoryCheck>>,
}

impl CheckRegistry {
    pub fn empty() -> Self {
        CheckRegistry { checks: Vec::new() }
    }

    /// `dense`, `complete` and `summand-closure` with default parameters.
    pub fn standard() -> Self {
        let mut reg = Self::empty();
        reg.register(Box::new(DensityCheck { bound: 4 }));
        reg.register(Box::new(CompletenessCheck { bound: 2 }));
        reg.register(Box::new(SummandClosureCheck { trials: 16, seed: 0 }));
        reg
    }

    /// Adds a check, replacing any existing check of the same name in place.
    pub fn register(&mut self, check: Box<dyn SubcategoryCheck>) {
        match self.checks.iter().position(|c| c.name() == check.name()) {
            Some(i) => self.checks[i] = check,
            None => self.checks.push(check),
        }
    }

    pub fn get(&self, name: &str) -> Option<&dyn SubcategoryCheck> {
        self.checks.iter().find(|c| c.name() == name).map(|c| c.as_ref())
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.checks.iter().map(|c| c.name()).collect()
    }

    pub fn run_all(&self, k: &K0Result, a: &SubcategoryLattice) -> Result<Vec<(&'static str, Certificate)>> {
        self.checks.iter().map(|c| Ok((c.name(), c.check(k, a)?))).collect()
    }
}

impl Default for CheckRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum EntryStatus {
    Verified,
    Failed,
    /// Even `n`: the construction ran but nothing is claimed.
    Unknown,
}

impl EntryStatus {
    pub fn label(self) -> &'static str {
        match self {
            EntryStatus::Verified => "verified",
            EntryStatus::Failed => "failed",
            EntryStatus::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GeneratorRealization {
    pub element: GroupElement,
    pub object: ElementObject,
    /// The realized class equals `element`.
    pub realized: bool,
}

#[derive(Clone, Debug)]
pub struct SubgroupEntry {
    pub subgroup: Subgroup,
    pub order: BigInt,
    pub subcategory: SubcategoryLattice,
    /// Certificates from the registry, in registration order.
    pub certificates: Vec<(&'static str, Certificate)>,
    /// Ψ then Φ returns the subgroup exactly.
    pub round_trip: bool,
    /// Membership of each realized element agrees with `x ∈ H`.
    pub membership_matches: bool,
    pub generators: Vec<GeneratorRealization>,
    pub status: EntryStatus,
}

impl SubgroupEntry {
    pub fn certificate(&self, name: &str) -> Option<&Certificate> {
        self.certificates.iter().find(|(n, _)| *n == name).map(|(_, c)| c)
    }
}

#[derive(Clone, Debug)]
pub struct CorrespondenceReport {
    pub group_order: BigInt,
    pub entries: Vec<SubgroupEntry>,
    /// Distinct subgroups give distinct lattices.
    pub distinct_lattices: bool,
    /// `H₁ ⊆ H₂ ⟺ L_{A_{H₁}} ⊆ L_{A_{H₂}}` over all pairs.
    pub monotone: bool,
    pub experimental: bool,
}

impl CorrespondenceReport {
    pub fn all_verified(&self) -> bool {
        !self.experimental
            && self.distinct_lattices
            && self.monotone
            && self.entries.iter().all(|e| e.status == EntryStatus::Verified)
    }
}

#[derive(Clone, Debug, Default)]
pub struct CorrespondenceOptions {
    /// Refuse groups larger than this.
    pub max_order: Option<BigInt>,
    /// Run the construction for even `n`, with every entry marked unknown.
    pub allow_even: bool,
}

pub(crate) fn check_regime(k: &K0Result, opts: &CorrespondenceOptions) -> Result<BigInt> {
    if !k.presentation().is_odd() && !opts.allow_even {
        return Err(Error::EvenNUnsupported { n: k.presentation().n() });
    }
    let order = k.group().require_finite()?;
    if let Some(max) = &opts.max_order {
        if &order > max {
            return Err(Error::OrderBound {
                order,
                bound: max.clone(),
            });
        }
    }
    Ok(order)
}

/// Verifies the subgroup/subcategory correspondence exhaustively.
pub fn verify_correspondence(
    k: &K0Result,
    registry: &CheckRegistry,
    opts: &CorrespondenceOptions,
) -> Result<CorrespondenceReport> {
    let order = check_regime(k, opts)?;
    let subgroups = enumerate_subgroups(k.group())?;
    let elements = k.group().elements()?;
    let experimental = !k.presentation().is_odd();
    let realized: Vec<ElementObject> = elements
        .iter()
        .map(|x| k.object_for_element(x))
        .collect::<Result<_>>()?;

    let entries = ordered_map(&subgroups, |h| {
        correspondence_entry(k, registry, h, &elements, &realized, experimental)
    })
    .into_iter()
    .collect::<Result<Vec<_>>>()?;

    let distinct_lattices = entries.iter().enumerate().all(|(i, a)| {
        entries[i + 1..]
            .iter()
            .all(|b| a.subcategory != b.subcategory)
    });
    let mut monotone = true;
    for a in &entries {
        for b in &entries {
            let groups = a.subgroup.is_subgroup_of(&b.subgroup)?;
            let cats = b.subcategory.lattice.contains_lattice(&a.subcategory.lattice)?;
            monotone &= groups == cats;
        }
    }
    Ok(CorrespondenceReport {
        group_order: order,
        entries,
        distinct_lattices,
        monotone,
        experimental,
    })
}

fn correspondence_entry(
    k: &K0Result,
    registry: &CheckRegistry,
    h: &Subgroup,
    elements: &[GroupElement],
    realized: &[ElementObject],
    experimental: bool,
) -> Result<SubgroupEntry> {
    let g = k.group();
    let subcategory = if experimental {
        subcategory_from_subgroup_experimental(k, h)?
    } else {
        subcategory_from_subgroup(k, h)?
    };
    let certificates = registry.run_all(k, &subcategory)?;
    let round_trip = subgroup_from_subcategory(k, &subcategory)? == *h;

    let mut membership_matches = true;
    for (x, obj) in elements.iter().zip(realized) {
        let member = match obj {
            ElementObject::Single(a) => subcategory.is_member(a)?,
            ElementObject::Pair(a, b) => {
                let diff: Vec<BigInt> = a.to_big().iter().zip(b.to_big()).map(|(p, q)| p - q).collect();
                subcategory.lattice.contains(&diff)?
            }
        };
        membership_matches &= member == h.contains(x)?;
    }

    let generators = h
        .generators(g)
        .into_iter()
        .map(|x| {
            let object = k.object_for_element(&x)?;
            let realized = k.class_of_realization(&object)? == x;
            Ok(GeneratorRealization {
                element: x,
                object,
                realized,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let ok = certificates.iter().all(|(_, c)| c.is_holds())
        && round_trip
        && membership_matches
        && generators.iter().all(|r| r.realized);
    let status = if experimental {
        EntryStatus::Unknown
    } else if ok {
        EntryStatus::Verified
    } else {
        EntryStatus::Failed
    };
    Ok(SubgroupEntry {
        order: h.order(g).expect("finite group"),
        subgroup: h.clone(),
        subcategory,
        certificates,
        round_trip,
        membership_matches,
        generators,
        status,
    })
}
