use distab_core::algebra::{group_algebra, quotient_algebra, truncated_polynomial, Algebra};
use distab_core::gflinalg::Field;
use distab_core::group::Group;
use distab_core::ideal::{
    ideal_generated, jacobson_radical, radical_by_exhaustion, socle_series, Ideal, Side,
};
use proptest::prelude::*;
use proptest::test_runner::RngSeed;

fn symmetric_algebras() -> Vec<Algebra> {
    let f2 = Field::new(2).unwrap();
    let f3 = Field::new(3).unwrap();
    let c2 = Group::cyclic(2).unwrap();
    vec![
        group_algebra(&Group::direct_product(&c2, &c2).unwrap(), f2).unwrap(),
        group_algebra(&Group::cyclic(4).unwrap(), f2).unwrap(),
        truncated_polynomial(f2, 4).unwrap(),
        group_algebra(&Group::symmetric3(), f3).unwrap(),
        group_algebra(&Group::quaternion8(), f2).unwrap(),
    ]
}

fn random_ideal(a: &Algebra, gens: &[Vec<u32>]) -> Ideal {
    let p = a.field().modulus();
    let gens: Vec<Vec<u32>> = gens
        .iter()
        .map(|g| {
            (0..a.dim())
                .map(|i| g.get(i).copied().unwrap_or(0) % p)
                .collect()
        })
        .collect();
    ideal_generated(a, &gens, Side::TwoSided).unwrap()
}

fn pinned(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(pinned(64))]

    #[test]
    fn annihilators_are_inverse_bijections(
        ai in 0..5usize,
        gens in proptest::collection::vec(proptest::collection::vec(0..3u32, 8), 0..3),
    ) {
        let a = &symmetric_algebras()[ai];
        let i = random_ideal(a, &gens);
        let r = i.right_annihilator();
        let l = i.left_annihilator();
        prop_assert!(r.left_annihilator().space() == i.space());
        prop_assert!(l.right_annihilator().space() == i.space());
        prop_assert_eq!(i.dim() + r.dim(), a.dim());
        prop_assert!(r.space() == l.space());
    }

    #[test]
    fn annihilators_reverse_inclusion(
        ai in 0..5usize,
        g in proptest::collection::vec(0..3u32, 8),
        h in proptest::collection::vec(0..3u32, 8),
    ) {
        let a = &symmetric_algebras()[ai];
        let small = random_ideal(a, std::slice::from_ref(&g));
        let big = random_ideal(a, &[g, h]);
        prop_assert!(small.is_contained_in(&big).unwrap());
        prop_assert!(big.right_annihilator().is_contained_in(&small.right_annihilator()).unwrap());
    }

    #[test]
    fn radical_contract_on_quotients(
        ai in 0..5usize,
        g in proptest::collection::vec(0..3u32, 8),
    ) {
        let a = &symmetric_algebras()[ai];
        let i = random_ideal(a, &[g]);
        prop_assume!(i.is_proper());
        let (q, _) = quotient_algebra(&i).unwrap();
        let j = jacobson_radical(&q).unwrap();
        prop_assert!(j.is_nilpotent());
        if !j.is_zero() {
            let (top, _) = quotient_algebra(&j).unwrap();
            prop_assert!(jacobson_radical(&top).unwrap().is_zero());
        }
        if let Some(e) = radical_by_exhaustion(&q) {
            prop_assert!(e.space() == j.space());
        }
    }
}

#[test]
fn socle_series_is_increasing() {
    for a in symmetric_algebras() {
        let s = socle_series(&a).unwrap();
        for w in s.windows(2) {
            assert!(w[0].is_contained_in(&w[1]).unwrap());
        }
        assert!(!s.last().unwrap().is_proper());
    }
}
