use angk0::category::{ObjectVec, Presentation};
use angk0::grothendieck::{euler_vector, k0, ElementObject};
use angk0::samples::{random_object, random_presentation, RandomShape};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn presentation(seed: u64) -> Presentation {
    random_presentation(&mut ChaCha8Rng::seed_from_u64(seed), &RandomShape::default())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn zero_and_additivity(seed in any::<u64>(), a in any::<u64>(), b in any::<u64>()) {
        let p = presentation(seed);
        let k = k0(&p);
        prop_assert!(k.class_of(&p.zero_object()).unwrap().is_zero());
        let x = random_object(&mut ChaCha8Rng::seed_from_u64(a), p.rank(), 4);
        let y = random_object(&mut ChaCha8Rng::seed_from_u64(b), p.rank(), 4);
        let sum = k.class_of(&(&x + &y)).unwrap();
        prop_assert_eq!(sum, k.group().add(&k.class_of(&x).unwrap(), &k.class_of(&y).unwrap()));
    }

    #[test]
    fn suspension_acts_by_sign(seed in any::<u64>(), a in any::<u64>()) {
        let p = presentation(seed);
        let k = k0(&p);
        let x = random_object(&mut ChaCha8Rng::seed_from_u64(a), p.rank(), 4);
        let cx = k.class_of(&x).unwrap();
        let expected = if p.is_odd() { k.group().neg(&cx) } else { cx };
        prop_assert_eq!(k.class_of(&p.suspend_object(&x, 1)).unwrap(), expected);
    }

    #[test]
    fn rotations_stay_relations(seed in any::<u64>()) {
        let p = presentation(seed);
        let k = k0(&p);
        for a in p.angles() {
            for offset in 0..p.n() {
                let e = euler_vector(&p, &p.rotate_angle_by(a, offset)).unwrap();
                prop_assert!(k.relation_lattice().contains(e.as_slice()).unwrap());
            }
        }
    }

    #[test]
    fn trivial_angles_have_zero_euler(seed in any::<u64>(), a in any::<u64>()) {
        let p = presentation(seed);
        let x = random_object(&mut ChaCha8Rng::seed_from_u64(a), p.rank(), 3);
        let k = k0(&p);
        for slot in 1..=p.n() {
            let e = euler_vector(&p, &p.trivial_angle(&x, slot).unwrap()).unwrap();
            prop_assert!(k.relation_lattice().contains(e.as_slice()).unwrap());
        }
    }

    #[test]
    fn realized_elements_round_trip(seed in any::<u64>(), picks in any::<u64>()) {
        let p = presentation(seed);
        let k = k0(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(picks);
        for _ in 0..20 {
            let lift: Vec<BigInt> = (0..p.rank()).map(|_| BigInt::from(rng.gen_range(-5..=5))).collect();
            let x = k.group().class_of(&lift).unwrap();
            let obj = k.object_for_element(&x).unwrap();
            prop_assert_eq!(matches!(obj, ElementObject::Single(_)), p.is_odd());
            prop_assert_eq!(k.class_of_realization(&obj).unwrap(), x);
        }
    }

    #[test]
    fn equal_classes_matches_class_map(seed in any::<u64>(), a in any::<u64>()) {
        let p = presentation(seed);
        let k = k0(&p);
        let mut rng = ChaCha8Rng::seed_from_u64(a);
        let x = random_object(&mut rng, p.rank(), 3);
        let y = random_object(&mut rng, p.rank(), 3);
        let same = k.class_of(&x).unwrap() == k.class_of(&y).unwrap();
        prop_assert_eq!(k.equal_classes(&x, &y).unwrap(), same);
    }
}

#[test]
fn even_n_has_no_suspension_torsion() {
    // n even with no angles: K_0 is free on the Σ-orbits
    let p = Presentation::from_parts(4, vec![1, 2, 0, 3], vec![]).unwrap();
    let k = k0(&p);
    assert_eq!(k.group().free_rank(), 2);
    assert!(k.group().invariant_factors().is_empty());
    let a = ObjectVec::basis(4, 0);
    assert!(k.equal_classes(&a, &p.suspend_object(&a, 1)).unwrap());
}
