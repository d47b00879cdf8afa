//! Model census against the unpruned brute force in `oracle`.

mod oracle;

use almonoid::search::{canonical_key, enumerate_models, enumerate_models_bounded};
use almonoid::{fixtures, Elem, FiniteAlgebra};
use oracle::{census, iso, raw};

fn cross_validate(n: usize) -> usize {
    let oracle = census(n);
    let found = enumerate_models(n).unwrap();
    assert_eq!(found.len(), oracle.len(), "order {n}");
    for o in &oracle {
        assert!(found.iter().any(|m| iso(&raw(m), o)), "order {n}: oracle model {o:?} missing");
    }
    found.len()
}

#[test]
fn order_one_matches_brute_force() {
    assert_eq!(cross_validate(1), 1);
}

#[test]
fn order_two_matches_brute_force() {
    assert_eq!(cross_validate(2), 1);
    let two = &enumerate_models(2).unwrap()[0];
    // 0 < a, + is the join, 0*a = a
    assert_eq!(two.plus(1, 1), 1);
    assert_eq!(two.star(0, 1), 1);
    assert!(two.leq(0, 1));
}

#[test]
fn order_three_matches_brute_force() {
    // frozen from the brute-force run
    assert_eq!(cross_validate(3), 2);
}

#[test]
fn census_regression() {
    let counts: Vec<usize> = (1..=5).map(|n| enumerate_models_bounded(n, 5).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 1, 2, 5, 9]);
}

#[test]
fn representatives_are_pairwise_non_isomorphic() {
    for n in 1..=4 {
        let models = enumerate_models(n).unwrap();
        for (i, x) in models.iter().enumerate() {
            for y in &models[i + 1..] {
                assert!(!iso(&raw(x), &raw(y)), "{} and {}", x.name(), y.name());
                assert!(!almonoid::morphism::isomorphic(x, y));
            }
        }
    }
}

#[test]
fn enumeration_is_deterministic() {
    let render = |n| -> String { enumerate_models(n).unwrap().iter().map(almonoid::to_alm).collect() };
    for n in 1..=4 {
        assert_eq!(render(n), render(n));
    }
}

#[test]
fn four_element_fixture_is_a_representative() {
    let a = fixtures::four_chain();
    let key = canonical_key(&a);
    let models = enumerate_models(4).unwrap();
    let hit: Vec<&FiniteAlgebra> = models.iter().filter(|m| m.table_key() == key).collect();
    assert_eq!(hit.len(), 1);
    assert!(iso(&raw(hit[0]), &raw(&a)));
}

#[test]
fn zero_is_the_bottom_of_every_model() {
    for n in 1..=5 {
        for m in enumerate_models_bounded(n, 5).unwrap() {
            let z: Elem = m.zero();
            assert!(m.elements().all(|x| m.leq(z, x)), "{}", m.name());
        }
    }
}
