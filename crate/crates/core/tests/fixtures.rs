//! Worked examples: the bundled four- and six-element chains and the
//! two-by-two product.

use almonoid::axioms::check_al_monoid;
use almonoid::ideals::{
    classified_ideals, distant_pairs, enumerate_ideals, is_ideal, is_strong, is_strong_image, maximal_ideals,
    prime_ideals, radical, star_sets,
};
use almonoid::morphism::is_homomorphism;
use almonoid::product::{decompose_distant, direct_product, representability_check, subdirect_representation};
use almonoid::spectrum::{separation_check, spectrum, values_and_mu};
use almonoid::{fixtures, FiniteAlgebra, Subset};

fn set(alg: &FiniteAlgebra, labels: &[&str]) -> Subset {
    labels.iter().map(|l| alg.index_of(l).expect("known label")).collect()
}

fn sorted(mut v: Vec<Subset>) -> Vec<Subset> {
    v.sort();
    v
}

#[test]
fn four_element_chain_is_a_model() {
    let a = fixtures::four_chain();
    let report = check_al_monoid(&a);
    assert!(report.verdicts.is_al_monoid, "{:?}", report.failures().map(|r| r.axiom_id).collect::<Vec<_>>());
    assert!(a.is_chain());
}

#[test]
fn four_element_chain_ideals() {
    let a = fixtures::four_chain();
    let ideals: Vec<Subset> = enumerate_ideals(&a).unwrap().into_iter().map(|i| i.members).collect();
    let expected = vec![
        set(&a, &["0"]),
        set(&a, &["0", "a"]),
        set(&a, &["0", "a", "b"]),
        set(&a, &["0", "a", "b", "c"]),
    ];
    assert_eq!(sorted(ideals), sorted(expected));

    let classified = classified_ideals(&a).unwrap();
    assert_eq!(maximal_ideals(&classified), vec![set(&a, &["0", "a", "b"])]);
    let primes = prime_ideals(&classified);
    assert!(primes.contains(&set(&a, &["0", "a"])));
    assert!(!maximal_ideals(&classified).contains(&set(&a, &["0", "a"])));
    assert_eq!(
        sorted(primes),
        sorted(vec![set(&a, &["0"]), set(&a, &["0", "a"]), set(&a, &["0", "a", "b"])])
    );
    assert_eq!(radical(&a).unwrap().members, set(&a, &["0", "a", "b"]));
}

#[test]
fn four_element_chain_is_directly_indecomposable() {
    let a = fixtures::four_chain();
    let dp = distant_pairs(&a).unwrap();
    assert!(dp.is_directly_indecomposable);
    assert!(decompose_distant(&a).unwrap().iter().all(|d| !d.proper));
}

#[test]
fn four_element_chain_spectrum() {
    let a = fixtures::four_chain();
    let spec = spectrum(&a).unwrap();
    assert_eq!(spec.primes.len(), 3);
    let pos = |labels: &[&str]| spec.primes.iter().position(|&p| p == set(&a, labels)).unwrap();
    let (p0, pa, pb) = (pos(&["0"]), pos(&["0", "a"]), pos(&["0", "a", "b"]));
    let b = a.index_of("b").unwrap();
    assert_eq!(spec.basic_opens[b], [p0, pa].into_iter().collect());
    assert!(!spec.basic_opens[b].contains(pb));
    assert_eq!(spec.basic_opens[a.index_of("a").unwrap()], Subset::singleton(p0));
    assert_eq!(spec.basic_opens[a.index_of("c").unwrap()], spec.all());
    // a chain has no incomparable primes
    assert!(separation_check(&a).unwrap().witnesses.is_empty());

    let vb = values_and_mu(&a, b).unwrap();
    assert_eq!(vb.values, vec![set(&a, &["0", "a"])]);
    assert!(vb.holds());
    assert_eq!(vb.domain, [p0, pa].into_iter().collect());
}

#[test]
fn four_element_chain_is_representable() {
    let a = fixtures::four_chain();
    let r = representability_check(&a).unwrap();
    assert!(r.r1 && r.r2 && r.r3 && r.agree);
    assert!(!r.m2);
    let sub = subdirect_representation(&a).unwrap();
    assert!(sub.holds());
    assert_eq!(sub.family, Some(vec![set(&a, &["0"])]));
}

#[test]
fn six_element_plus_is_not_commutative() {
    let a = fixtures::six_chain();
    let report = check_al_monoid(&a);
    assert!(!report.verdicts.is_al_monoid);
    let comm = report.result("plus.commutative").unwrap();
    assert!(!comm.holds);
    assert_eq!(comm.witness, Some(vec!["a".to_string(), "d".to_string()]));
    assert_eq!(a.plus(1, 4), 4);
    assert_eq!(a.plus(4, 1), 5);
}

#[test]
fn six_element_star_sets() {
    let a = fixtures::six_chain();
    let i = set(&a, &["0", "a", "b"]);
    assert!(is_ideal(&a, i).is_ok());
    let image = |x: &str| star_sets(&a, a.index_of(x).unwrap(), i, i).0;
    assert_eq!(image("0"), i);
    assert_eq!(image("a"), set(&a, &["0", "a"]));
    assert_eq!(image("b"), i);
    assert!(!is_strong_image(&a, i));
    assert!(is_strong(&a, i));
}

#[test]
fn diamond_splits_along_its_distant_pair() {
    let two = FiniteAlgebra::two_chain();
    let p = direct_product(&[two.clone(), two]).unwrap();
    let d = &p.algebra;
    let (left, right) = (set(d, &["(0,0)", "(1,0)"]), set(d, &["(0,0)", "(0,1)"]));
    let dp = distant_pairs(d).unwrap();
    assert!(dp.pairs.contains(&(left, right)));
    assert!(!dp.is_directly_indecomposable);

    let decomps = decompose_distant(d).unwrap();
    let split = decomps.iter().find(|x| x.i == left && x.j == right).unwrap();
    assert!(split.proper && split.holds);
    let iso = split.isomorphism.clone().unwrap();
    let target = direct_product(&[
        almonoid::congruence::quotient(d, left).unwrap().algebra,
        almonoid::congruence::quotient(d, right).unwrap().algebra,
    ])
    .unwrap();
    assert!(is_homomorphism(d, &target.algebra, &iso).is_isomorphism);

    let sep = separation_check(d).unwrap();
    assert!(!sep.witnesses.is_empty() && sep.holds);
    let sub = subdirect_representation(d).unwrap();
    assert!(sub.holds());
    assert_eq!(sub.family.map(|f| f.len()), Some(2));
}
