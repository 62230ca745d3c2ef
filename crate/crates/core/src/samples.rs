//! Small named presentations and seeded random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::category::{AngleGen, ObjectVec, Presentation, PresentationData};
use crate::cluster::EmbeddingData;
use crate::tensor::{tensor_objects, TensorPresentation};

fn named(n: usize, names: &[&str], suspension: Vec<usize>, angles: Vec<Vec<Vec<u64>>>) -> Presentation {
    Presentation::new(PresentationData {
        n,
        names: names.iter().map(|s| s.to_string()).collect(),
        suspension,
        angles: angles
            .into_iter()
            .map(|a| a.into_iter().map(ObjectVec::new).collect())
            .collect(),
    })
    .expect("sample presentations are valid")
}

/// `{a, b, c}`, `n = 3`, `Σ = id`, one triangle `(a, b, c)`. `K_0 ≅ (Z/2)²`.
pub fn g1() -> Presentation {
    named(3, &["a", "b", "c"], vec![0, 1, 2], vec![vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]])
}

/// One indecomposable, `n = 3`, `Σ = id`, no angles. `K_0 ≅ Z/2`.
pub fn g2() -> Presentation {
    named(3, &["x"], vec![0], vec![])
}

/// One indecomposable, `n = 4`, `Σ = id`, no angles. `K_0 ≅ Z`.
pub fn single_even() -> Presentation {
    named(4, &["x"], vec![0], vec![])
}

/// `G2` with `x ⊗ x = x`; the ring is the field with two elements.
pub fn f2_tensor() -> TensorPresentation {
    TensorPresentation::from_parts(g2(), vec![vec![vec![1]]], vec![1]).expect("square table")
}

/// Two orthogonal idempotents over `n = 3`, `Σ = id`; the ring is `F_2 × F_2`.
pub fn componentwise_tensor() -> TensorPresentation {
    let p = named(3, &["e", "f"], vec![0, 1], vec![]);
    TensorPresentation::from_parts(p, vec![vec![vec![1, 0], vec![0, 0]], vec![vec![0, 0], vec![0, 1]]], vec![1, 1])
        .expect("square table")
}

/// `T = {p, q}` with `Σ` swapping them, `C = {c}` with `n = 4`, `c ↦ p`.
pub fn synthetic_embedding() -> EmbeddingData {
    EmbeddingData {
        t: named(3, &["p", "q"], vec![1, 0], vec![]),
        c: named(4, &["c"], vec![0], vec![]),
        iota: vec![0],
    }
}

/// As [`synthetic_embedding`] with a third `T`-indecomposable `u`, fixed by
/// `Σ` and missed by the map.
pub fn unreachable_embedding() -> EmbeddingData {
    EmbeddingData {
        t: named(3, &["p", "q", "u"], vec![1, 0, 2], vec![]),
        c: named(4, &["c"], vec![0], vec![]),
        iota: vec![0],
    }
}

pub fn identity_embedding(p: &Presentation) -> EmbeddingData {
    EmbeddingData {
        t: p.clone(),
        c: p.clone(),
        iota: (0..p.rank()).collect(),
    }
}

/// Shape limits for [`random_presentation`].
#[derive(Clone, Debug)]
pub struct RandomShape {
    pub max_rank: usize,
    pub max_angles: usize,
    pub max_multiplicity: u64,
    pub arities: Vec<usize>,
}

impl Default for RandomShape {
    fn default() -> Self {
        RandomShape {
            max_rank: 5,
            max_angles: 4,
            max_multiplicity: 3,
            arities: vec![3, 4, 5, 7],
        }
    }
}

pub fn random_object<R: Rng>(rng: &mut R, rank: usize, max_multiplicity: u64) -> ObjectVec {
    ObjectVec::new((0..rank).map(|_| rng.gen_range(0..=max_multiplicity)).collect())
}

pub fn random_presentation<R: Rng>(rng: &mut R, shape: &RandomShape) -> Presentation {
    let n = *shape.arities.choose(rng).expect("nonempty arities");
    let r = rng.gen_range(1..=shape.max_rank);
    let mut sigma: Vec<usize> = (0..r).collect();
    sigma.shuffle(rng);
    let count = rng.gen_range(0..=shape.max_angles);
    let angles = (0..count)
        .map(|_| {
            (0..n)
                .map(|_| random_object(rng, r, shape.max_multiplicity).multiplicities().to_vec())
                .collect()
        })
        .collect();
    Presentation::from_parts(n, sigma, angles).expect("random presentations are valid")
}

/// Tensor structure from the multiplicative monoid of `Z/m`: indecomposable
/// `i` is the residue `i`, `e_i ⊗ e_j = e_{ij}`, unit `e_1`, and `Σ` is
/// multiplication by the unit `s`. Random angles are closed under tensoring
/// with every indecomposable, which makes the table angle-compatible.
pub fn random_monoid_tensor<R: Rng>(rng: &mut R, n: usize, max_modulus: usize, max_seed_angles: usize) -> TensorPresentation {
    let m = rng.gen_range(1..=max_modulus);
    let units: Vec<usize> = (0..m).filter(|&s| gcd(s, m) == 1).collect();
    let s = if m == 1 { 0 } else { *units.choose(rng).expect("1 is a unit") };
    let sigma: Vec<usize> = (0..m).map(|i| (s * i) % m).collect();
    let table: Vec<Vec<Vec<u64>>> = (0..m)
        .map(|i| (0..m).map(|j| ObjectVec::basis(m, (i * j) % m).multiplicities().to_vec()).collect())
        .collect();
    let unit = ObjectVec::basis(m, 1 % m).multiplicities().to_vec();
    let bare = Presentation::from_parts(n, sigma.clone(), vec![]).expect("valid");
    let scaffold = TensorPresentation::from_parts(bare, table.clone(), unit.clone()).expect("square");

    let mut angles: Vec<AngleGen> = Vec::new();
    for _ in 0..rng.gen_range(0..=max_seed_angles) {
        let seed = AngleGen::new((0..n).map(|_| random_object(rng, m, 2)).collect());
        for k in 0..m {
            let e = ObjectVec::basis(m, k);
            let v = seed
                .vertices()
                .iter()
                .map(|x| tensor_objects(&scaffold, &e, x).expect("same rank"))
                .collect();
            angles.push(AngleGen::new(v));
        }
    }
    let angles = angles
        .into_iter()
        .map(|a| a.into_vertices().into_iter().map(|v| v.multiplicities().to_vec()).collect())
        .collect();
    let base = Presentation::from_parts(n, sigma, angles).expect("valid");
    TensorPresentation::from_parts(base, table, unit).expect("square")
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
