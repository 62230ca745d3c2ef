//! Bounded search for equality witnesses.
//!
//! `[A] = [B]` holds (for odd `n`) exactly when there are objects
//! `C_1, ..., C_n` and two n-angles with vertex tuples
//! `(A ⊕ C_1, C_2, ..., C_n)` and `(B ⊕ C_1, C_2, ..., C_n)`. The search
//! below looks for such a pair among direct sums of a bounded number of
//! known angles: the listed generators in all rotations and the rotated
//! trivial angles on small objects. Failing to find one proves nothing.

use std::collections::HashMap;

use crate::category::{direct_sum_angle, AngleGen, ObjectVec, Presentation};
use crate::error::Result;

/// A building block of a witness angle.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum AngleAtom {
    /// Listed generator `index`, rotated left `rotation` times.
    Generator { index: usize, rotation: usize },
    /// Trivial angle on `object` placed at `slot` (1-based).
    Trivial { object: ObjectVec, slot: usize },
}

impl AngleAtom {
    pub fn realize(&self, p: &Presentation) -> Result<AngleGen> {
        match self {
            AngleAtom::Generator { index, rotation } => Ok(p.rotate_angle_by(&p.angles()[*index], *rotation)),
            AngleAtom::Trivial { object, slot } => p.trivial_angle(object, *slot),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    /// `C_1, ..., C_n`.
    pub objects: Vec<ObjectVec>,
    /// Summands of the angle `(A ⊕ C_1, C_2, ..., C_n)`.
    pub left: Vec<AngleAtom>,
    /// Summands of the angle `(B ⊕ C_1, C_2, ..., C_n)`.
    pub right: Vec<AngleAtom>,
    pub left_angle: AngleGen,
    pub right_angle: AngleGen,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WitnessOutcome {
    Found(Witness),
    NotFound { bound: usize },
}

impl WitnessOutcome {
    pub fn witness(&self) -> Option<&Witness> {
        match self {
            WitnessOutcome::Found(w) => Some(w),
            WitnessOutcome::NotFound { .. } => None,
        }
    }
}

/// All atoms available at `bound`, in search order: generators in list
/// order with rotations `0..n`, then trivial angles on nonzero objects of
/// total multiplicity at most `bound` in lexicographic order, slots `1..=n`.
pub fn atoms(p: &Presentation, bound: usize) -> Vec<AngleAtom> {
    let mut out = Vec::new();
    for index in 0..p.angles().len() {
        for rotation in 0..p.n() {
            out.push(AngleAtom::Generator { index, rotation });
        }
    }
    for object in small_objects(p.rank(), bound as u64) {
        for slot in 1..=p.n() {
            out.push(AngleAtom::Trivial {
                object: object.clone(),
                slot,
            });
        }
    }
    out
}

/// Nonzero objects with total multiplicity ≤ `bound`, lexicographically.
pub fn small_objects(rank: usize, bound: u64) -> Vec<ObjectVec> {
    fn rec(rank: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<ObjectVec>) {
        if cur.len() == rank {
            if cur.iter().any(|&m| m > 0) {
                out.push(ObjectVec::new(cur.clone()));
            }
            return;
        }
        for m in 0..=left {
            cur.push(m);
            rec(rank, left - m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(rank, bound, &mut Vec::with_capacity(rank), &mut out);
    out
}

/// The identity witness for `A = A`: both sides are the trivial angle on `A`.
pub fn self_witness(p: &Presentation, a: &ObjectVec) -> Result<Witness> {
    let atoms = if a.is_zero() {
        Vec::new()
    } else {
        vec![AngleAtom::Trivial {
            object: a.clone(),
            slot: 1,
        }]
    };
    let angle = p.trivial_angle(a, 1)?;
    let mut objects = vec![p.zero_object(); p.n()];
    objects[1] = a.clone();
    Ok(Witness {
        objects,
        left: atoms.clone(),
        right: atoms,
        left_angle: angle.clone(),
        right_angle: angle,
    })
}

struct Sum {
    atoms: Vec<usize>,
    angle: AngleGen,
}

/// Multisets of at most `bound` atoms, by size then lexicographically.
fn sums(p: &Presentation, realized: &[AngleGen], bound: usize) -> Vec<Sum> {
    let mut out = vec![Sum {
        atoms: Vec::new(),
        angle: p.zero_angle(),
    }];
    let mut frontier = vec![0usize];
    for _ in 0..bound {
        let mut next = Vec::new();
        for &idx in &frontier {
            let start = out[idx].atoms.last().copied().unwrap_or(0);
            for (a, atom) in realized.iter().enumerate().skip(start) {
                let mut atoms = out[idx].atoms.clone();
                atoms.push(a);
                let angle = direct_sum_angle(&out[idx].angle, atom).expect("same arity");
                out.push(Sum { atoms, angle });
                next.push(out.len() - 1);
            }
        }
        frontier = next;
    }
    out
}

fn key(angle: &AngleGen) -> Vec<u64> {
    angle
        .vertices()
        .iter()
        .flat_map(|v| v.multiplicities().iter().copied())
        .collect()
}

/// Searches for a witness of `[A] = [B]` among sums of at most `bound` atoms.
///
/// The first witness is taken in a fixed order (right-hand sums in search
/// order, then the first matching left-hand sum), so results are
/// reproducible.
pub fn witness_search(p: &Presentation, a: &ObjectVec, b: &ObjectVec, bound: usize) -> Result<WitnessOutcome> {
    p.check_object(a)?;
    p.check_object(b)?;
    if a == b {
        return Ok(WitnessOutcome::Found(self_witness(p, a)?));
    }
    let pool = atoms(p, bound);
    let realized: Vec<AngleGen> = pool.iter().map(|x| x.realize(p)).collect::<Result<_>>()?;
    let all = sums(p, &realized, bound);

    let mut by_tuple: HashMap<Vec<u64>, usize> = HashMap::new();
    for (i, s) in all.iter().enumerate() {
        by_tuple.entry(key(&s.angle)).or_insert(i);
    }

    for right in &all {
        let head = &right.angle.vertices()[0];
        // B ⊕ C_1 = head requires B ≤ head; then the left head is A ⊕ C_1.
        let Some(c1) = head.checked_sub(b) else { continue };
        let mut vertices = right.angle.vertices().to_vec();
        vertices[0] = a + &c1;
        let Some(&li) = by_tuple.get(&key(&AngleGen::new(vertices))) else { continue };
        let left = &all[li];
        let mut objects = vec![c1];
        objects.extend(right.angle.vertices()[1..].iter().cloned());
        return Ok(WitnessOutcome::Found(Witness {
            objects,
            left: left.atoms.iter().map(|&i| pool[i].clone()).collect(),
            right: right.atoms.iter().map(|&i| pool[i].clone()).collect(),
            left_angle: left.angle.clone(),
            right_angle: right.angle.clone(),
        }));
    }
    Ok(WitnessOutcome::NotFound { bound })
}

/// Checks that a witness has the required shape for `(A, B)` and that its
/// recorded angles are the sums of its atoms.
pub fn check_witness(p: &Presentation, a: &ObjectVec, b: &ObjectVec, w: &Witness) -> Result<bool> {
    let sum = |atoms: &[AngleAtom]| -> Result<AngleGen> {
        atoms.iter().try_fold(p.zero_angle(), |acc, x| direct_sum_angle(&acc, &x.realize(p)?))
    };
    if sum(&w.left)? != w.left_angle || sum(&w.right)? != w.right_angle || w.objects.len() != p.n() {
        return Ok(false);
    }
    let shape = |first: &ObjectVec| {
        let mut v = w.objects.clone();
        v[0] = first + &w.objects[0];
        v
    };
    Ok(w.left_angle.vertices() == shape(a).as_slice() && w.right_angle.vertices() == shape(b).as_slice())
}
