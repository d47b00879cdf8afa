//! Congruences, the ideal/congruence correspondence and quotient algebras.

use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra, Op, Table};
use crate::error::{Error, Result};
use crate::ideals::{enumerate_ideals, is_ideal, require_ideal};
use crate::subset::Subset;

/// Partitions are enumerated directly up to this carrier size.
pub const PARTITION_BOUND: usize = 8;

/// A partition of the carrier. Class ids are numbered by first occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<Subset>,
}

impl Congruence {
    /// From a class id per element; ids are renumbered.
    pub fn from_class_ids(ids: &[usize]) -> Self {
        let mut remap: Vec<Option<usize>> = Vec::new();
        let mut class_of = Vec::with_capacity(ids.len());
        let mut classes: Vec<Subset> = Vec::new();
        for (x, &id) in ids.iter().enumerate() {
            if remap.len() <= id {
                remap.resize(id + 1, None);
            }
            let c = *remap[id].get_or_insert_with(|| {
                classes.push(Subset::EMPTY);
                classes.len() - 1
            });
            classes[c].insert(x);
            class_of.push(c);
        }
        Congruence { class_of, classes }
    }

    pub fn from_classes(n: usize, classes: &[Subset]) -> Result<Self> {
        let mut ids = vec![usize::MAX; n];
        for (c, s) in classes.iter().enumerate() {
            for x in *s {
                if x >= n || ids[x] != usize::MAX {
                    return Err(Error::Precondition("classes do not partition the carrier".into()));
                }
                ids[x] = c;
            }
        }
        if ids.contains(&usize::MAX) {
            return Err(Error::Precondition("classes do not cover the carrier".into()));
        }
        Ok(Self::from_class_ids(&ids))
    }

    pub fn identity(n: usize) -> Self {
        Self::from_class_ids(&(0..n).collect::<Vec<_>>())
    }

    pub fn total(n: usize) -> Self {
        Self::from_class_ids(&vec![0; n])
    }

    pub fn classes(&self) -> &[Subset] {
        &self.classes
    }

    pub fn class_of(&self, x: Elem) -> usize {
        self.class_of[x]
    }

    pub fn class_containing(&self, x: Elem) -> Subset {
        self.classes[self.class_of[x]]
    }

    #[inline]
    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.class_of[a] == self.class_of[b]
    }
}

/// Outcome of checking c1–c5; each field holds the first violating
/// `(a, b, c, d)` (or `(a, b, x, y)` for c3), `None` when the axiom holds.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CongruenceCheck {
    pub c1_plus: Option<[Elem; 4]>,
    pub c2_star: Option<[Elem; 4]>,
    pub c3_metric_downward: Option<[Elem; 4]>,
    pub c4_join: Option<[Elem; 4]>,
    pub c5_meet: Option<[Elem; 4]>,
}

impl CongruenceCheck {
    pub fn holds(&self) -> bool {
        self.c1_plus.is_none()
            && self.c2_star.is_none()
            && self.c3_metric_downward.is_none()
            && self.c4_join.is_none()
            && self.c5_meet.is_none()
    }

    /// c1 and c3 hold but one of c2, c4, c5 does not.
    pub fn plus_metric_only(&self) -> bool {
        self.c1_plus.is_none()
            && self.c3_metric_downward.is_none()
            && (self.c2_star.is_some() || self.c4_join.is_some() || self.c5_meet.is_some())
    }

    pub fn first_failure(&self) -> Option<(&'static str, [Elem; 4])> {
        [
            ("c1", self.c1_plus),
            ("c2", self.c2_star),
            ("c3", self.c3_metric_downward),
            ("c4", self.c4_join),
            ("c5", self.c5_meet),
        ]
        .into_iter()
        .find_map(|(k, w)| w.map(|w| (k, w)))
    }
}

fn compatibility(alg: &FiniteAlgebra, theta: &Congruence, op: Op) -> Option<[Elem; 4]> {
    for a in alg.elements() {
        for b in theta.class_containing(a) {
            for c in alg.elements() {
                for d in theta.class_containing(c) {
                    if !theta.related(alg.op(op, a, c), alg.op(op, b, d)) {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

fn metric_downward(alg: &FiniteAlgebra, theta: &Congruence) -> Option<[Elem; 4]> {
    for a in alg.elements() {
        for b in theta.class_containing(a) {
            let d = alg.star(a, b);
            for x in alg.elements() {
                for y in alg.elements() {
                    if alg.leq(alg.star(x, y), d) && !theta.related(x, y) {
                        return Some([a, b, x, y]);
                    }
                }
            }
        }
    }
    None
}

pub fn is_congruence(alg: &FiniteAlgebra, theta: &Congruence) -> CongruenceCheck {
    CongruenceCheck {
        c1_plus: compatibility(alg, theta, Op::Plus),
        c2_star: compatibility(alg, theta, Op::Star),
        c3_metric_downward: metric_downward(alg, theta),
        c4_join: compatibility(alg, theta, Op::Join),
        c5_meet: compatibility(alg, theta, Op::Meet),
    }
}

/// `a ≡ b` iff `a∗b ∈ I`.
pub fn congruence_from_ideal(alg: &FiniteAlgebra, ideal: Subset) -> Result<Congruence> {
    require_ideal(alg, ideal)?;
    let rel = |a: Elem, b: Elem| ideal.contains(alg.star(a, b));
    let mut ids = vec![usize::MAX; alg.n()];
    for a in alg.elements() {
        if ids[a] != usize::MAX {
            continue;
        }
        for b in alg.elements() {
            if rel(a, b) {
                if ids[b] != usize::MAX {
                    return Err(Error::NotACongruence(format!(
                        "`a∗b ∈ I` is not transitive at {}, {}",
                        alg.label(a),
                        alg.label(b)
                    )));
                }
                ids[b] = a;
            }
        }
    }
    let theta = Congruence::from_class_ids(&ids);
    // the grouping above assumed an equivalence; confirm it
    for a in alg.elements() {
        for b in alg.elements() {
            if rel(a, b) != theta.related(a, b) {
                return Err(Error::NotACongruence(format!(
                    "`a∗b ∈ I` is not an equivalence at ({}, {})",
                    alg.label(a),
                    alg.label(b)
                )));
            }
        }
    }
    Ok(theta)
}

/// The class of `0`, which must be an ideal.
pub fn ideal_from_congruence(alg: &FiniteAlgebra, theta: &Congruence) -> Result<Subset> {
    let class = theta.class_containing(alg.zero());
    is_ideal(alg, class).map_err(|v| {
        Error::NotAnIdeal(format!(
            "class of {} is {:?}; {}",
            alg.label(alg.zero()),
            alg.labels(class),
            v.describe(alg)
        ))
    })?;
    Ok(class)
}

/// Restricted growth strings of length `n`, i.e. all set partitions.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let limit = if cur.is_empty() { 0 } else { max + 1 };
        for c in 0..=limit {
            cur.push(c);
            go(n, cur, max.max(c), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::with_capacity(n), 0, &mut out);
    out
}

/// Every partition passing c1–c5. Above [`PARTITION_BOUND`] the congruences
/// are produced from ideals instead, each one checked.
pub fn enumerate_congruences(alg: &FiniteAlgebra) -> Result<Vec<Congruence>> {
    if alg.n() <= PARTITION_BOUND {
        return Ok(partitions(alg.n())
            .into_iter()
            .map(|ids| Congruence::from_class_ids(&ids))
            .filter(|t| is_congruence(alg, t).holds())
            .collect());
    }
    let mut out = Vec::new();
    for i in enumerate_ideals(alg)? {
        let theta = congruence_from_ideal(alg, i.members)?;
        let check = is_congruence(alg, &theta);
        if let Some((axiom, w)) = check.first_failure() {
            return Err(Error::NotACongruence(format!(
                "relation of ideal {:?} fails {axiom} at {:?}",
                alg.labels(i.members),
                alg.labels(w)
            )));
        }
        out.push(theta);
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: FiniteAlgebra,
    /// Canonical projection, source element -> class index.
    pub projection: Vec<Elem>,
    pub congruence: Congruence,
}

/// `A/M` with operations induced on the classes of `a ≡ b iff a∗b ∈ M`.
/// Classes are labelled by their least-index member.
pub fn quotient(alg: &FiniteAlgebra, ideal: Subset) -> Result<Quotient> {
    let theta = congruence_from_ideal(alg, ideal)?;
    let name = format!("{}/{{{}}}", alg.name(), alg.labels(ideal).join(","));
    quotient_by(alg, &theta, name)
}

pub fn quotient_by(alg: &FiniteAlgebra, theta: &Congruence, name: String) -> Result<Quotient> {
    let classes = theta.classes();
    let k = classes.len();
    let reps: Vec<Elem> = classes.iter().map(|c| c.first().expect("classes are nonempty")).collect();
    let mut tables = Vec::with_capacity(4);
    for op in Op::ALL {
        for p in 0..k {
            for q in 0..k {
                let target = theta.class_of(alg.op(op, reps[p], reps[q]));
                for a in classes[p] {
                    for b in classes[q] {
                        if theta.class_of(alg.op(op, a, b)) != target {
                            return Err(Error::NotWellDefined {
                                op: op.symbol(),
                                witness: format!(
                                    "{} {op} {} and {} {op} {} land in different classes",
                                    alg.label(reps[p]),
                                    alg.label(reps[q]),
                                    alg.label(a),
                                    alg.label(b)
                                ),
                            });
                        }
                    }
                }
            }
        }
        tables.push(Table::from_fn(k, |p, q| theta.class_of(alg.op(op, reps[p], reps[q]))));
    }
    let [plus, star, join, meet]: [Table; 4] = tables.try_into().expect("four tables");
    let algebra = FiniteAlgebra::new(
        name,
        alg.labels(reps.iter().copied()),
        theta.class_of(alg.zero()),
        plus,
        star,
        join,
        meet,
    )?;
    Ok(Quotient {
        algebra,
        projection: alg.elements().map(|x| theta.class_of(x)).collect(),
        congruence: theta.clone(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BijectionReport {
    pub ideals: usize,
    pub congruences: usize,
    pub ideal_round_trip: bool,
    pub congruence_round_trip: bool,
    pub holds: bool,
    pub failures: Vec<String>,
}

/// Checks that `I ↦ ≡_I` and `θ ↦ [0]_θ` are mutually inverse.
pub fn bijection_check(alg: &FiniteAlgebra) -> Result<BijectionReport> {
    let ideals = enumerate_ideals(alg)?;
    let congruences = enumerate_congruences(alg)?;
    let mut failures = Vec::new();

    let mut ideal_round_trip = true;
    for i in &ideals {
        let back = congruence_from_ideal(alg, i.members).and_then(|t| {
            if let Some((axiom, w)) = is_congruence(alg, &t).first_failure() {
                return Err(Error::NotACongruence(format!("fails {axiom} at {:?}", alg.labels(w))));
            }
            ideal_from_congruence(alg, &t)
        });
        if back.as_ref().ok() != Some(&i.members) {
            ideal_round_trip = false;
            failures.push(format!("ideal {:?}: {:?}", alg.labels(i.members), back));
        }
    }

    let mut congruence_round_trip = true;
    for t in &congruences {
        let back = ideal_from_congruence(alg, t).and_then(|i| congruence_from_ideal(alg, i));
        if back.as_ref().ok() != Some(t) {
            congruence_round_trip = false;
            let classes: Vec<Vec<String>> = t.classes().iter().map(|c| alg.labels(*c)).collect();
            failures.push(format!("congruence {classes:?}: {back:?}"));
        }
    }

    let holds = ideal_round_trip && congruence_round_trip && ideals.len() == congruences.len();
    Ok(BijectionReport {
        ideals: ideals.len(),
        congruences: congruences.len(),
        ideal_round_trip,
        congruence_round_trip,
        holds,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::is_al_monoid;
    use crate::fixtures;

    fn set(alg: &FiniteAlgebra, labels: &[&str]) -> Subset {
        labels.iter().map(|l| alg.index_of(l).unwrap()).collect()
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (1..=6).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn congruence_of_an_ideal() {
        let a = fixtures::four_chain();
        let t = congruence_from_ideal(&a, set(&a, &["0", "a"])).unwrap();
        assert_eq!(
            t.classes(),
            &[set(&a, &["0", "a"]), set(&a, &["b"]), set(&a, &["c"])]
        );
        assert_eq!(congruence_from_ideal(&a, a.zero_set()).unwrap(), Congruence::identity(4));
        assert_eq!(congruence_from_ideal(&a, a.carrier()).unwrap(), Congruence::total(4));
        assert!(congruence_from_ideal(&a, set(&a, &["0", "b"])).is_err());
    }

    #[test]
    fn ideal_of_a_congruence() {
        let a = fixtures::four_chain();
        let i = set(&a, &["0", "a"]);
        let t = congruence_from_ideal(&a, i).unwrap();
        assert_eq!(ideal_from_congruence(&a, &t).unwrap(), i);
        assert_eq!(ideal_from_congruence(&a, &Congruence::identity(4)).unwrap(), a.zero_set());
        assert_eq!(ideal_from_congruence(&a, &Congruence::total(4)).unwrap(), a.carrier());
    }

    #[test]
    fn congruence_checks() {
        let a = fixtures::four_chain();
        let good = Congruence::from_classes(4, &[set(&a, &["0", "a"]), set(&a, &["b"]), set(&a, &["c"])]).unwrap();
        assert!(is_congruence(&a, &good).holds());
        assert!(is_congruence(&a, &Congruence::identity(4)).holds());

        let bad = Congruence::from_classes(4, &[set(&a, &["0", "b"]), set(&a, &["a"]), set(&a, &["c"])]).unwrap();
        let check = is_congruence(&a, &bad);
        assert!(!check.holds());
        // 0 ≡ b and a∗0 = a <= 0∗b = b, yet a and 0 are apart
        assert_eq!(check.c3_metric_downward, Some([0, 2, 0, 1]));
    }

    #[test]
    fn congruence_counts() {
        let a = fixtures::four_chain();
        assert_eq!(enumerate_congruences(&a).unwrap().len(), 4);
        assert_eq!(enumerate_congruences(&FiniteAlgebra::trivial()).unwrap().len(), 1);
        assert_eq!(enumerate_congruences(&FiniteAlgebra::two_chain()).unwrap().len(), 2);
    }

    #[test]
    fn quotients_of_four_element_fixture() {
        let a = fixtures::four_chain();
        let q = quotient(&a, set(&a, &["0", "a"])).unwrap();
        assert_eq!(q.algebra.n(), 3);
        assert!(q.algebra.is_chain());
        assert!(is_al_monoid(&q.algebra));
        assert_eq!(q.algebra.names(), &["0", "b", "c"]);
        assert_eq!(q.projection, vec![0, 0, 1, 2]);

        let same = quotient(&a, a.zero_set()).unwrap();
        assert_eq!(same.algebra.table_key(), a.table_key());

        let two = quotient(&a, set(&a, &["0", "a", "b"])).unwrap();
        assert_eq!(two.algebra.n(), 2);
        assert!(two.algebra.is_chain() && is_al_monoid(&two.algebra));
    }

    #[test]
    fn quotient_keeps_definiteness() {
        let a = fixtures::four_chain();
        for i in enumerate_ideals(&a).unwrap() {
            let q = quotient(&a, i.members).unwrap().algebra;
            for x in q.elements() {
                for y in q.elements() {
                    assert_eq!(q.star(x, y) == q.zero(), x == y);
                }
            }
        }
    }

    #[test]
    fn bijection_on_fixtures() {
        let r = bijection_check(&fixtures::four_chain()).unwrap();
        assert!(r.holds);
        assert_eq!((r.ideals, r.congruences), (4, 4));
        let t = bijection_check(&FiniteAlgebra::trivial()).unwrap();
        assert!(t.holds);
        assert_eq!((t.ideals, t.congruences), (1, 1));
    }
}
