use dqchar::qchar::{self, q_character};
use dqchar::screening::verify_qcharacter;
use dqchar::{DynkinD, Family, Monomial};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

#[test]
fn three_way_dimension_agreement() {
    for n in 4..=7 {
        let d = DynkinD::new(n).unwrap();
        for i in 1..=n {
            let q = q_character(n, i, qchar::default_shift(n, i)).unwrap();
            let cp = BigInt::from(d.cp_dimension(i).unwrap());
            let formula = BigInt::from(qchar::monomial_count_formula(n, i).unwrap());
            assert_eq!(q.dimension(), cp, "n={n} i={i}");
            assert_eq!(formula, cp, "n={n} i={i}");
            let paths = BigUint::from(q.path_count());
            assert_eq!(paths, qchar::path_count_formula(n, i).unwrap());
        }
    }
}

#[test]
fn coefficients_are_positive_and_small() {
    for n in 4..=7 {
        for i in 1..=n {
            let q = q_character(n, i, qchar::default_shift(n, i)).unwrap();
            assert!(q.terms().all_coefficients_positive());
            assert!(q.terms().terms().all(|(_, c)| *c <= BigInt::from(n as i64)));
        }
    }
}

#[test]
fn path_count_does_not_depend_on_shift() {
    for n in 4..=6 {
        for i in 1..n {
            let k = qchar::default_shift(n, i);
            let a = Family::new(n, i, k).unwrap().count();
            let b = Family::new(n, i, k - 4).unwrap().count();
            assert_eq!(a, b);
        }
    }
}

#[test]
fn odd_rank_exchanges_spin_nodes_at_the_bottom() {
    let q = q_character(7, 6, 1).unwrap();
    let (_, anti) = q.dominance_report();
    assert_eq!(anti.len(), 1);
    assert_eq!(anti[0].0, "Y[7,13]^-1".parse::<Monomial>().unwrap());
    let q = q_character(6, 5, 0).unwrap();
    assert_eq!(
        q.dominance_report().1[0].0,
        "Y[5,10]^-1".parse::<Monomial>().unwrap()
    );
}

#[test]
fn larger_characters_verify() {
    for (n, i, k) in [(7, 4, 1), (8, 3, 0), (10, 2, 1), (10, 9, 0)] {
        let q = q_character(n, i, k).unwrap();
        let r = verify_qcharacter(&q);
        assert!(r.passed(), "({n},{i},{k}):\n{r}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn translation_for_arbitrary_shifts(n in 4usize..=6, i_off in 0usize..6, m in -4i64..=4) {
        let i = 1 + i_off % n;
        let k = qchar::default_shift(n, i) + 2 * m;
        let base = q_character(n, i, k).unwrap();
        let moved = q_character(n, i, k + 6).unwrap();
        prop_assert_eq!(base.terms().map_monomials(|x| x.shifted(6)), moved.terms().clone());
    }

    #[test]
    fn wrong_parity_is_rejected(n in 4usize..=9, i_off in 0usize..9, k in -10i64..=10) {
        let i = 1 + i_off % n;
        let valid = k.rem_euclid(2) == qchar::default_shift(n, i);
        prop_assert_eq!(q_character(n, i, k).is_ok(), valid);
    }
}
