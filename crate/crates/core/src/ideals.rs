//! Ideals: recognition, enumeration, generation, the ideal lattice and the
//! classification into prime, maximal, regular and strong ideals.
//!
//! An ideal is a subset containing `0`, closed under `+` and downward closed
//! in the lattice order. Prime, maximal and regular ideals are proper.

use std::sync::atomic::{AtomicUsize, Ordering};

use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra, Op};
use crate::error::{Error, Result};
use crate::subset::Subset;

/// Default cap on the carrier size for ideal enumeration.
pub const DEFAULT_BOUND: usize = 16;

static BOUND: AtomicUsize = AtomicUsize::new(DEFAULT_BOUND);

/// Largest order for which ideals are enumerated by [`enumerate_ideals`] and
/// everything built on it.
pub fn ideal_bound() -> usize {
    BOUND.load(Ordering::Relaxed)
}

pub fn set_ideal_bound(bound: usize) {
    BOUND.store(bound, Ordering::Relaxed);
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdealFlags {
    pub is_prime: bool,
    pub is_maximal: bool,
    pub is_regular: bool,
    /// Strongness with `a∗I` read as the residue class `{x : a∗x ∈ I}`.
    pub is_strong: bool,
    /// Strongness with `a∗I` read as the image set `{a∗x : x ∈ I}`.
    pub is_strong_image: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealSet {
    pub members: Subset,
    pub flags: Option<IdealFlags>,
}

impl IdealSet {
    pub fn new(members: Subset) -> Self {
        IdealSet { members, flags: None }
    }

    pub fn flags(&self) -> IdealFlags {
        self.flags.unwrap_or_default()
    }
}

/// The clause of the ideal definition that a subset breaks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdealViolation {
    MissingZero,
    NotClosedUnderPlus { a: Elem, b: Elem },
    NotDownwardClosed { above: Elem, below: Elem },
}

impl IdealViolation {
    pub fn describe(&self, alg: &FiniteAlgebra) -> String {
        match *self {
            IdealViolation::MissingZero => format!("{} is missing", alg.label(alg.zero())),
            IdealViolation::NotClosedUnderPlus { a, b } => format!(
                "{} + {} = {} is missing",
                alg.label(a),
                alg.label(b),
                alg.label(alg.plus(a, b))
            ),
            IdealViolation::NotDownwardClosed { above, below } => format!(
                "{} <= {} but {} is missing",
                alg.label(below),
                alg.label(above),
                alg.label(below)
            ),
        }
    }
}

pub fn is_ideal(alg: &FiniteAlgebra, s: Subset) -> Result<(), IdealViolation> {
    if !s.contains(alg.zero()) {
        return Err(IdealViolation::MissingZero);
    }
    for a in s {
        for b in s {
            if !s.contains(alg.plus(a, b)) {
                return Err(IdealViolation::NotClosedUnderPlus { a, b });
            }
        }
    }
    for above in s {
        for below in alg.elements() {
            if alg.leq(below, above) && !s.contains(below) {
                return Err(IdealViolation::NotDownwardClosed { above, below });
            }
        }
    }
    Ok(())
}

pub(crate) fn require_ideal(alg: &FiniteAlgebra, s: Subset) -> Result<()> {
    is_ideal(alg, s).map_err(|v| Error::NotAnIdeal(format!("{:?}: {}", alg.labels(s), v.describe(alg))))
}

/// All downsets of the order, by extending along a linear extension.
pub fn downsets(alg: &FiniteAlgebra) -> Vec<Subset> {
    let mut order: Vec<Elem> = alg.elements().collect();
    order.sort_by_key(|&x| alg.elements().filter(|&y| alg.leq(y, x)).count());
    let below: Vec<Subset> = alg
        .elements()
        .map(|x| alg.elements().filter(|&y| y != x && alg.leq(y, x)).collect())
        .collect();

    let mut out = Vec::new();
    let mut stack = vec![(0usize, Subset::EMPTY)];
    while let Some((i, s)) = stack.pop() {
        if i == order.len() {
            out.push(s);
            continue;
        }
        let x = order[i];
        stack.push((i + 1, s));
        if below[x].is_subset(s) {
            stack.push((i + 1, s.with(x)));
        }
    }
    out
}

/// All ideals, sorted by size and then by member list.
pub fn enumerate_ideals(alg: &FiniteAlgebra) -> Result<Vec<IdealSet>> {
    enumerate_ideals_bounded(alg, ideal_bound())
}

pub fn enumerate_ideals_bounded(alg: &FiniteAlgebra, bound: usize) -> Result<Vec<IdealSet>> {
    if alg.n() > bound {
        return Err(Error::BoundExceeded { n: alg.n(), bound });
    }
    let mut ideals: Vec<Subset> = downsets(alg)
        .into_iter()
        .filter(|&s| s.contains(alg.zero()) && alg.image(Op::Plus, s, s).is_subset(s))
        .collect();
    ideals.sort_by_key(|s| s.listing_key());
    Ok(ideals.into_iter().map(IdealSet::new).collect())
}

/// Downset of the additive closure of `s ∪ {0}`.
pub fn generated_ideal(alg: &FiniteAlgebra, s: Subset) -> Subset {
    let mut sums = s.with(alg.zero());
    loop {
        let next = sums.union(alg.image(Op::Plus, sums, sums));
        if next == sums {
            break;
        }
        sums = next;
    }
    alg.downset(sums)
}

/// `⟨a⟩ = {x : x <= m·a for some m >= 1}`, together with `0`.
pub fn principal_ideal(alg: &FiniteAlgebra, a: Elem) -> Subset {
    let mut multiples = Subset::singleton(a);
    let mut m = a;
    loop {
        m = alg.plus(m, a);
        if !multiples.insert(m) {
            break;
        }
    }
    alg.downset(multiples.with(alg.zero()))
}

/// `{a : a <= x + y, x ∈ I, y ∈ J}`.
pub fn ideal_join(alg: &FiniteAlgebra, i: Subset, j: Subset) -> Subset {
    alg.downset(alg.image(Op::Plus, i, j))
}

pub fn ideal_join_meet(alg: &FiniteAlgebra, i: Subset, j: Subset) -> Result<(Subset, Subset)> {
    require_ideal(alg, i)?;
    require_ideal(alg, j)?;
    Ok((ideal_join(alg, i, j), i.intersection(j)))
}

#[derive(Clone, Debug)]
pub struct IdealLattice {
    pub ideals: Vec<IdealSet>,
    /// `leq[i][j]` iff ideal `i` ⊆ ideal `j`.
    pub leq: Vec<Vec<bool>>,
    pub joins: Vec<Vec<usize>>,
    pub meets: Vec<Vec<usize>>,
    pub principal: Vec<bool>,
    /// Every element of a finite lattice is compact.
    pub compact: Vec<bool>,
    /// Whether the sum formula for joins agreed with the least upper bound
    /// for every pair.
    pub join_formula_agrees: bool,
    /// Whether every ideal is the join of the principal ideals below it.
    pub algebraic: bool,
}

impl IdealLattice {
    pub fn position(&self, s: Subset) -> Option<usize> {
        self.ideals.iter().position(|i| i.members == s)
    }
}

pub fn ideal_lattice(alg: &FiniteAlgebra) -> Result<IdealLattice> {
    let ideals = enumerate_ideals(alg)?;
    let k = ideals.len();
    let pos = |s: Subset| ideals.iter().position(|i| i.members == s);
    let leq: Vec<Vec<bool>> = ideals
        .iter()
        .map(|a| ideals.iter().map(|b| a.members.is_subset(b.members)).collect())
        .collect();

    // least ideal containing both, from the enumeration
    let lub = |a: usize, b: usize| -> usize {
        let u = ideals[a].members.union(ideals[b].members);
        (0..k)
            .filter(|&c| u.is_subset(ideals[c].members))
            .min_by_key(|&c| ideals[c].members.len())
            .expect("the whole carrier is an ideal")
    };

    let mut join_formula_agrees = true;
    let mut joins = vec![vec![0; k]; k];
    let mut meets = vec![vec![0; k]; k];
    for a in 0..k {
        for b in 0..k {
            let least = lub(a, b);
            if ideal_join(alg, ideals[a].members, ideals[b].members) != ideals[least].members {
                join_formula_agrees = false;
            }
            joins[a][b] = least;
            meets[a][b] = pos(ideals[a].members.intersection(ideals[b].members))
                .ok_or_else(|| Error::NotAnIdeal("intersection of two ideals".into()))?;
        }
    }

    let principal_sets: Vec<Subset> = alg.elements().map(|a| principal_ideal(alg, a)).collect();
    let principal: Vec<bool> = ideals.iter().map(|i| principal_sets.contains(&i.members)).collect();

    let bottom = pos(alg.zero_set());
    let algebraic = (0..k).all(|i| {
        let below = (0..k).filter(|&p| principal[p] && leq[p][i]);
        let joined = below.fold(bottom, |acc, p| acc.map(|a| joins[a][p]));
        joined == Some(i)
    });

    Ok(IdealLattice {
        compact: vec![true; k],
        ideals,
        leq,
        joins,
        meets,
        principal,
        join_formula_agrees,
        algebraic,
    })
}

/// `{x : a∗x ∈ I}`, the residue class of `a`.
pub fn residue_class(alg: &FiniteAlgebra, a: Elem, i: Subset) -> Subset {
    alg.elements().filter(|&x| i.contains(alg.star(a, x))).collect()
}

/// `a∗I = {a∗x : x ∈ I}` and `I∗J = {x∗y : x ∈ I, y ∈ J}`.
pub fn star_sets(alg: &FiniteAlgebra, a: Elem, i: Subset, j: Subset) -> (Subset, Subset) {
    (
        alg.image(Op::Star, Subset::singleton(a), i),
        alg.image(Op::Star, i, j),
    )
}

fn strong_with(alg: &FiniteAlgebra, i: Subset, coset: impl Fn(Elem) -> Subset) -> bool {
    let cosets: Vec<Subset> = alg.elements().map(coset).collect();
    alg.elements().all(|a| i.contains(a) == (cosets[a] == i))
        && alg.elements().all(|a| {
            alg.elements()
                .all(|b| (cosets[a] == cosets[b]) == i.contains(alg.star(a, b)))
        })
}

pub fn is_strong(alg: &FiniteAlgebra, i: Subset) -> bool {
    strong_with(alg, i, |a| residue_class(alg, a, i))
}

pub fn is_strong_image(alg: &FiniteAlgebra, i: Subset) -> bool {
    strong_with(alg, i, |a| star_sets(alg, a, i, i).0)
}

pub fn is_prime(alg: &FiniteAlgebra, i: Subset) -> bool {
    i != alg.carrier()
        && alg.elements().all(|a| {
            alg.elements()
                .all(|b| !i.contains(alg.meet(a, b)) || i.contains(a) || i.contains(b))
        })
}

/// Classifies `i` relative to the full ideal list `ideals`.
pub fn classify_ideal(alg: &FiniteAlgebra, ideals: &[IdealSet], i: Subset) -> Result<IdealFlags> {
    require_ideal(alg, i)?;
    let top = alg.carrier();
    let proper = i != top;
    let strictly_above: Vec<Subset> = ideals
        .iter()
        .map(|j| j.members)
        .filter(|&j| i.is_proper_subset(j))
        .collect();
    let is_maximal = proper && strictly_above.iter().all(|&j| j == top);
    let is_regular = proper && strictly_above.iter().fold(top, |acc, &j| acc.intersection(j)) != i;
    Ok(IdealFlags {
        is_prime: is_prime(alg, i),
        is_maximal,
        is_regular,
        is_strong: is_strong(alg, i),
        is_strong_image: is_strong_image(alg, i),
    })
}

/// Enumerates and classifies every ideal.
pub fn classified_ideals(alg: &FiniteAlgebra) -> Result<Vec<IdealSet>> {
    let mut ideals = enumerate_ideals(alg)?;
    let flags = ideals
        .iter()
        .map(|i| classify_ideal(alg, &ideals, i.members))
        .collect::<Result<Vec<_>>>()?;
    for (i, f) in ideals.iter_mut().zip(flags) {
        i.flags = Some(f);
    }
    Ok(ideals)
}

pub fn maximal_ideals(ideals: &[IdealSet]) -> Vec<Subset> {
    ideals.iter().filter(|i| i.flags().is_maximal).map(|i| i.members).collect()
}

pub fn prime_ideals(ideals: &[IdealSet]) -> Vec<Subset> {
    ideals.iter().filter(|i| i.flags().is_prime).map(|i| i.members).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Radical {
    pub members: Subset,
    /// Set when there is no maximal ideal to intersect.
    pub note: Option<&'static str>,
}

/// Intersection of all maximal ideals.
pub fn radical(alg: &FiniteAlgebra) -> Result<Radical> {
    let ideals = classified_ideals(alg)?;
    Ok(radical_of(alg, &ideals))
}

pub fn radical_of(alg: &FiniteAlgebra, ideals: &[IdealSet]) -> Radical {
    let max = maximal_ideals(ideals);
    if max.is_empty() {
        return Radical {
            members: alg.zero_set(),
            note: Some("no proper ideals; radical taken as {0}"),
        };
    }
    Radical {
        members: max.into_iter().fold(alg.carrier(), Subset::intersection),
        note: None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistantPairs {
    pub pairs: Vec<(Subset, Subset)>,
    pub is_directly_indecomposable: bool,
}

/// Ordered pairs of strong ideals with `I∗J = A` and `I ∩ J = {0}`.
pub fn distant_pairs(alg: &FiniteAlgebra) -> Result<DistantPairs> {
    let ideals = classified_ideals(alg)?;
    Ok(distant_pairs_of(alg, &ideals))
}

pub fn distant_pairs_of(alg: &FiniteAlgebra, ideals: &[IdealSet]) -> DistantPairs {
    let strong: Vec<Subset> = ideals.iter().filter(|i| i.flags().is_strong).map(|i| i.members).collect();
    let mut pairs = Vec::new();
    for &i in &strong {
        for &j in &strong {
            if i.intersection(j) == alg.zero_set() && alg.image(Op::Star, i, j) == alg.carrier() {
                pairs.push((i, j));
            }
        }
    }
    let mut occurring: Vec<Subset> = pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
    occurring.sort();
    occurring.dedup();
    let mut expected = vec![alg.zero_set(), alg.carrier()];
    expected.sort();
    expected.dedup();
    DistantPairs {
        is_directly_indecomposable: occurring == expected,
        pairs,
    }
}

/// Ideal closed under all operations and convex between `a ∧ b` and `a ∨ b`.
pub fn convexity_violation(alg: &FiniteAlgebra, i: Subset) -> Option<String> {
    for op in Op::ALL {
        if !alg.image(op, i, i).is_subset(i) {
            return Some(format!("{:?} not closed under {}", alg.labels(i), op));
        }
    }
    for a in i {
        for b in i {
            let (lo, hi) = (alg.meet(a, b), alg.join(a, b));
            if let Some(x) = alg.elements().find(|&x| alg.leq(lo, x) && alg.leq(x, hi) && !i.contains(x)) {
                return Some(format!(
                    "{} lies between {} and {} but not in {:?}",
                    alg.label(x),
                    alg.label(lo),
                    alg.label(hi),
                    alg.labels(i)
                ));
            }
        }
    }
    None
}
