use std::collections::BTreeSet;

use angk0::grothendieck::k0;
use angk0::lattice::{enumerate_subgroups, quotient_by_rows, FgAbelianGroup, GroupElement, Subgroup};
use angk0::samples;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type ElementSet = BTreeSet<usize>;

/// Subgroups as element-index sets, found by closing `{0}` under joins with
/// cyclic subgroups. Uses only the group operations.
fn oracle(g: &FgAbelianGroup) -> BTreeSet<ElementSet> {
    let elements = g.elements().unwrap();
    let index = |x: &GroupElement| elements.iter().position(|y| y == x).unwrap();
    let close = |seed: &ElementSet| -> ElementSet {
        let mut set = seed.clone();
        loop {
            let mut grown = set.clone();
            for &a in &set {
                for &b in &set {
                    grown.insert(index(&g.add(&elements[a], &elements[b])));
                }
            }
            if grown == set {
                return set;
            }
            set = grown;
        }
    };
    let zero: ElementSet = [index(&g.zero())].into_iter().collect();
    let mut found: BTreeSet<ElementSet> = [zero.clone()].into_iter().collect();
    let mut frontier = vec![zero];
    while let Some(h) = frontier.pop() {
        for x in 0..elements.len() {
            if h.contains(&x) {
                continue;
            }
            let mut seed = h.clone();
            seed.insert(x);
            let joined = close(&seed);
            if found.insert(joined.clone()) {
                frontier.push(joined);
            }
        }
    }
    found
}

fn as_sets(g: &FgAbelianGroup, subs: &[Subgroup]) -> BTreeSet<ElementSet> {
    let elements = g.elements().unwrap();
    subs.iter()
        .map(|h| {
            (0..elements.len())
                .filter(|&i| h.contains(&elements[i]).unwrap())
                .collect()
        })
        .collect()
}

/// Invariant factor lists `d_1 | d_2 | ...` with product at most `max`.
fn factor_lists(max: u64) -> Vec<Vec<u64>> {
    fn rec(prev: u64, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        out.push(cur.clone());
        let mut d = if prev == 1 { 2 } else { prev };
        while d <= left {
            if d % prev == 0 {
                cur.push(d);
                rec(d, left / d, cur, out);
                cur.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    rec(1, max, &mut Vec::new(), &mut out);
    out
}

fn diagonal_group(factors: &[u64]) -> FgAbelianGroup {
    let r = factors.len();
    let rows = (0..r)
        .map(|i| (0..r).map(|j| BigInt::from(if i == j { factors[i] } else { 0 })).collect())
        .collect();
    quotient_by_rows(r, rows).unwrap()
}

#[test]
fn all_abelian_groups_up_to_order_16() {
    let lists = factor_lists(16);
    // isomorphism types of orders 1..=16
    assert_eq!(lists.len(), 25);
    for factors in lists {
        let g = diagonal_group(&factors);
        let subs = enumerate_subgroups(&g).unwrap();
        let expected = oracle(&g);
        assert_eq!(subs.len(), expected.len(), "count for {factors:?}");
        assert_eq!(as_sets(&g, &subs), expected, "subgroups of {factors:?}");
    }
}

#[test]
fn known_subgroup_counts() {
    let count = |f: &[u64]| enumerate_subgroups(&diagonal_group(f)).unwrap().len();
    assert_eq!(count(&[16]), 5);
    assert_eq!(count(&[2, 8]), 11);
    assert_eq!(count(&[4, 4]), 15);
    assert_eq!(count(&[2, 2, 4]), 27);
    assert_eq!(count(&[2, 2, 2, 2]), 67);
    assert_eq!(count(&[2, 2, 2]), 16);
}

#[test]
fn non_diagonal_relation_lattices() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut checked = 0;
    while checked < 60 {
        let r = rng.gen_range(1..=3);
        let rows: Vec<Vec<BigInt>> = (0..r + 1)
            .map(|_| (0..r).map(|_| BigInt::from(rng.gen_range(-4..=4))).collect())
            .collect();
        let g = quotient_by_rows(r, rows).unwrap();
        match g.order() {
            Some(n) if n <= BigInt::from(16) => {
                let subs = enumerate_subgroups(&g).unwrap();
                assert_eq!(as_sets(&g, &subs), oracle(&g));
                checked += 1;
            }
            _ => continue,
        }
    }
}

#[test]
fn groups_from_sample_presentations() {
    for p in [samples::g1(), samples::g2()] {
        let k = k0(&p);
        let subs = enumerate_subgroups(k.group()).unwrap();
        assert_eq!(as_sets(k.group(), &subs), oracle(k.group()));
    }
}
