use exunit_core::{Element, LocalRingSpec, RingSpec, DEFAULT_CAP};
use proptest::prelude::*;

fn rings() -> Vec<RingSpec> {
    let l = |r: Result<LocalRingSpec, _>| r.unwrap();
    vec![
        RingSpec::new(vec![l(LocalRingSpec::zpe(2, 3))]).unwrap(),
        RingSpec::new(vec![l(LocalRingSpec::zpe(3, 2))]).unwrap(),
        RingSpec::new(vec![l(LocalRingSpec::gf(2, 2))]).unwrap(),
        RingSpec::new(vec![l(LocalRingSpec::gf(2, 3))]).unwrap(),
        RingSpec::new(vec![l(LocalRingSpec::gf(3, 2))]).unwrap(),
        RingSpec::new(vec![l(LocalRingSpec::nilext(2, 2, 2))]).unwrap(),
        RingSpec::new(vec![l(LocalRingSpec::nilext(3, 1, 3))]).unwrap(),
        RingSpec::new(vec![l(LocalRingSpec::nilext(5, 1, 2))]).unwrap(),
        RingSpec::new(vec![l(LocalRingSpec::zpe(2, 2)), l(LocalRingSpec::gf(3, 1)), l(LocalRingSpec::gf(2, 2))]).unwrap(),
        RingSpec::new(vec![l(LocalRingSpec::gf(2, 4))]).unwrap(),
    ]
}

#[test]
fn exhaustive_commutative_ring_axioms() {
    for ring in rings() {
        let all: Vec<Element> = ring.elements(100).unwrap().collect();
        let zero = ring.zero();
        let one = ring.one();
        for a in &all {
            assert_eq!(ring.add(a, &zero).unwrap(), *a);
            assert_eq!(ring.mul(a, &one).unwrap(), *a);
            assert_eq!(ring.add(a, &ring.neg(a).unwrap()).unwrap(), zero);
            for b in &all {
                let ab = ring.add(a, b).unwrap();
                assert_eq!(ab, ring.add(b, a).unwrap());
                let m = ring.mul(a, b).unwrap();
                assert_eq!(m, ring.mul(b, a).unwrap());
                assert_eq!(ring.sub(&ab, b).unwrap(), *a);
                for c in &all {
                    assert_eq!(ring.add(&ab, c).unwrap(), ring.add(a, &ring.add(b, c).unwrap()).unwrap());
                    assert_eq!(ring.mul(&m, c).unwrap(), ring.mul(a, &ring.mul(b, c).unwrap()).unwrap());
                    let lhs = ring.mul(a, &ring.add(b, c).unwrap()).unwrap();
                    let rhs = ring.add(&m, &ring.mul(a, c).unwrap()).unwrap();
                    assert_eq!(lhs, rhs, "distributivity in {ring}");
                }
            }
        }
    }
}

#[test]
fn unit_counts_and_residue_criterion() {
    for ring in rings() {
        let all: Vec<Element> = ring.elements(DEFAULT_CAP).unwrap().collect();
        let units = all.iter().filter(|a| ring.is_unit(a).unwrap()).count();
        let expected: u64 = ring.components().iter().map(|c| c.size() - c.max_ideal_size()).product();
        assert_eq!(units as u64, expected, "{ring}");
        for a in &all {
            let by_residue = a.coords().iter().enumerate().all(|(i, &x)| ring.residue_index(i, x).unwrap() != 0);
            assert_eq!(ring.is_unit(a).unwrap(), by_residue);
        }
        for c in ring.components() {
            assert_eq!(c.size(), c.max_ideal_size() * c.residue_size());
        }
    }
}

#[test]
fn units_have_inverses() {
    for ring in rings() {
        let all: Vec<Element> = ring.elements(DEFAULT_CAP).unwrap().collect();
        for u in ring.units(DEFAULT_CAP).unwrap() {
            assert!(all.iter().any(|v| ring.mul(&u, v).unwrap() == ring.one()), "{u:?} in {ring}");
        }
    }
}

fn big_field() -> impl Strategy<Value = LocalRingSpec> {
    prop_oneof![
        (Just(1_000_003u64), 1u32..=2).prop_map(|(p, d)| LocalRingSpec::gf(p, d).unwrap()),
        (Just(7u64), 1u32..=6).prop_map(|(p, d)| LocalRingSpec::gf(p, d).unwrap()),
        (Just(2u64), 1u32..=20).prop_map(|(p, d)| LocalRingSpec::gf(p, d).unwrap()),
        (Just(3u64), 1u32..=4, 1u32..=4).prop_map(|(p, d, e)| LocalRingSpec::nilext(p, d, e).unwrap()),
        (Just(999_983u64), 1u32..=3).prop_map(|(p, e)| LocalRingSpec::zpe(p, e).unwrap()),
    ]
}

proptest! {
    #[test]
    fn large_local_rings_satisfy_axioms(spec in big_field(), a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (a, b, c) = (a % spec.size(), b % spec.size(), c % spec.size());
        prop_assert_eq!(spec.mul(a, spec.mul(b, c)), spec.mul(spec.mul(a, b), c));
        prop_assert_eq!(spec.mul(a, spec.add(b, c)), spec.add(spec.mul(a, b), spec.mul(a, c)));
        prop_assert_eq!(spec.add(a, spec.neg(a)), 0);
        prop_assert_eq!(spec.mul(a, b), spec.mul(b, a));
        // residue map is a ring morphism
        prop_assert_eq!(spec.residue(spec.mul(a, b)), {
            let f = LocalRingSpec::gf(spec.characteristic_prime(), spec.degree()).unwrap();
            f.mul(spec.residue(a), spec.residue(b))
        });
    }

    #[test]
    fn index_round_trip(i in 0usize..720) {
        let ring = RingSpec::new(vec![
            LocalRingSpec::zpe(2, 3).unwrap(),
            LocalRingSpec::gf(3, 2).unwrap(),
            LocalRingSpec::gf(5, 1).unwrap(),
            LocalRingSpec::gf(2, 1).unwrap(),
        ]).unwrap();
        let e = ring.element_at(i);
        prop_assert!(ring.check(&e).is_ok());
        prop_assert_eq!(ring.index_of(&e), i);
    }
}
