//! Axiom checking with witnesses.
//!
//! Every axiom is a predicate over a tuple of elements. Checking scans all
//! tuples in lexicographic index order and keeps the first failing tuple as
//! the witness, so a witness can always be replayed through [`Axiom::holds_at`].
//!
//! Verdicts are conjunctions of axiom ids:
//!
//! | verdict | axioms |
//! |---|---|
//! | `is_autometrized` | `plus.commutative`, `plus.identity`, `star.*` |
//! | `is_lattice_ordered_autometrized` | the above, `plus.associative`, `join.*`, `meet.*`, `lattice.absorption`, `plus.monotone` |
//! | `is_al_monoid` | the above, `al.join_decomposition`, `al.contraction.*`, `al.orthogonality` |
//! | `is_representable` | lattice-ordered autometrized, `repr.semiregular`, `repr.contraction.*` |
//!
//! `plus.distributes_over_join` is reported but enters no verdict.

use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra, Op};

pub type Predicate = fn(&FiniteAlgebra, &[Elem]) -> bool;

#[derive(Clone, Copy)]
pub struct Axiom {
    pub id: &'static str,
    pub arity: usize,
    pub holds_at: Predicate,
}

impl Axiom {
    const fn new(id: &'static str, arity: usize, holds_at: Predicate) -> Self {
        Axiom { id, arity, holds_at }
    }

    pub fn holds_at(&self, alg: &FiniteAlgebra, args: &[Elem]) -> bool {
        (self.holds_at)(alg, args)
    }

    /// First violating tuple in lexicographic order.
    pub fn first_violation(&self, alg: &FiniteAlgebra) -> Option<Vec<Elem>> {
        let n = alg.n();
        let mut args = vec![0; self.arity];
        loop {
            if !(self.holds_at)(alg, &args) {
                return Some(args);
            }
            // odometer, last position fastest
            let mut i = self.arity;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                args[i] += 1;
                if args[i] < n {
                    break;
                }
                args[i] = 0;
            }
        }
    }

    pub fn check(&self, alg: &FiniteAlgebra) -> AxiomResult {
        let violation = self.first_violation(alg);
        AxiomResult {
            axiom_id: self.id,
            holds: violation.is_none(),
            witness: violation.as_ref().map(|w| alg.labels(w.iter().copied())),
            witness_indices: violation,
        }
    }
}

impl std::fmt::Debug for Axiom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Axiom").field("id", &self.id).field("arity", &self.arity).finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomResult {
    pub axiom_id: &'static str,
    pub holds: bool,
    pub witness: Option<Vec<String>>,
    #[serde(skip)]
    pub witness_indices: Option<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdicts {
    pub is_autometrized: bool,
    pub is_lattice_ordered_autometrized: bool,
    pub is_al_monoid: bool,
    pub is_representable: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub algebra: String,
    pub results: Vec<AxiomResult>,
    pub verdicts: Verdicts,
}

impl AxiomReport {
    pub fn result(&self, id: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom_id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.holds)
    }
}

fn comm(alg: &FiniteAlgebra, op: Op, a: Elem, b: Elem) -> bool {
    alg.op(op, a, b) == alg.op(op, b, a)
}

fn assoc(alg: &FiniteAlgebra, op: Op, a: Elem, b: Elem, c: Elem) -> bool {
    alg.op(op, alg.op(op, a, b), c) == alg.op(op, a, alg.op(op, b, c))
}

fn contraction(alg: &FiniteAlgebra, op: Op, a: Elem, x: Elem, y: Elem) -> bool {
    alg.leq(alg.star(alg.op(op, a, x), alg.op(op, a, y)), alg.star(x, y))
}

pub const MONOID_LATTICE: &[Axiom] = &[
    Axiom::new("plus.commutative", 2, |g, v| comm(g, Op::Plus, v[0], v[1])),
    Axiom::new("plus.associative", 3, |g, v| assoc(g, Op::Plus, v[0], v[1], v[2])),
    Axiom::new("plus.identity", 1, |g, v| {
        g.plus(g.zero(), v[0]) == v[0] && g.plus(v[0], g.zero()) == v[0]
    }),
    Axiom::new("join.commutative", 2, |g, v| comm(g, Op::Join, v[0], v[1])),
    Axiom::new("join.associative", 3, |g, v| assoc(g, Op::Join, v[0], v[1], v[2])),
    Axiom::new("join.idempotent", 1, |g, v| g.join(v[0], v[0]) == v[0]),
    Axiom::new("meet.commutative", 2, |g, v| comm(g, Op::Meet, v[0], v[1])),
    Axiom::new("meet.associative", 3, |g, v| assoc(g, Op::Meet, v[0], v[1], v[2])),
    Axiom::new("meet.idempotent", 1, |g, v| g.meet(v[0], v[0]) == v[0]),
    Axiom::new("lattice.absorption", 2, |g, v| {
        g.join(v[0], g.meet(v[0], v[1])) == v[0] && g.meet(v[0], g.join(v[0], v[1])) == v[0]
    }),
    Axiom::new("plus.monotone", 3, |g, v| {
        let (a, x, y) = (v[0], v[1], v[2]);
        !g.leq(x, y) || (g.leq(g.plus(a, x), g.plus(a, y)) && g.leq(g.plus(x, a), g.plus(y, a)))
    }),
];

pub const INFORMATIONAL: &[Axiom] = &[Axiom::new("plus.distributes_over_join", 3, |g, v| {
    g.plus(v[0], g.join(v[1], v[2])) == g.join(g.plus(v[0], v[1]), g.plus(v[0], v[2]))
})];

pub const METRIC: &[Axiom] = &[
    Axiom::new("star.positive", 2, |g, v| g.leq(g.zero(), g.star(v[0], v[1]))),
    Axiom::new("star.definite", 2, |g, v| (g.star(v[0], v[1]) == g.zero()) == (v[0] == v[1])),
    Axiom::new("star.symmetric", 2, |g, v| comm(g, Op::Star, v[0], v[1])),
    Axiom::new("star.triangle", 3, |g, v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        g.leq(g.star(a, b), g.plus(g.star(a, c), g.star(c, b)))
    }),
];

pub const AL_SPECIFIC: &[Axiom] = &[
    Axiom::new("al.join_decomposition", 2, |g, v| {
        let (a, b) = (v[0], v[1]);
        g.plus(g.star(a, g.meet(a, b)), b) == g.join(a, b)
    }),
    Axiom::new("al.contraction.plus", 3, |g, v| contraction(g, Op::Plus, v[0], v[1], v[2])),
    Axiom::new("al.contraction.join", 3, |g, v| contraction(g, Op::Join, v[0], v[1], v[2])),
    Axiom::new("al.contraction.meet", 3, |g, v| contraction(g, Op::Meet, v[0], v[1], v[2])),
    Axiom::new("al.contraction.star", 3, |g, v| contraction(g, Op::Star, v[0], v[1], v[2])),
    Axiom::new("al.orthogonality", 2, |g, v| {
        let j = g.join(v[0], v[1]);
        g.meet(g.star(v[0], j), g.star(v[1], j)) == g.zero()
    }),
];

pub const REPRESENTABLE: &[Axiom] = &[
    Axiom::new("repr.semiregular", 1, |g, v| {
        !g.leq(g.zero(), v[0]) || g.star(v[0], g.zero()) == v[0]
    }),
    Axiom::new("repr.contraction.plus", 3, |g, v| contraction(g, Op::Plus, v[0], v[1], v[2])),
    Axiom::new("repr.contraction.join", 3, |g, v| contraction(g, Op::Join, v[0], v[1], v[2])),
    Axiom::new("repr.contraction.meet", 3, |g, v| contraction(g, Op::Meet, v[0], v[1], v[2])),
    Axiom::new("repr.contraction.star", 3, |g, v| contraction(g, Op::Star, v[0], v[1], v[2])),
];

/// Looks an axiom up by id in every group.
pub fn axiom(id: &str) -> Option<&'static Axiom> {
    [MONOID_LATTICE, INFORMATIONAL, METRIC, AL_SPECIFIC, REPRESENTABLE]
        .into_iter()
        .flatten()
        .find(|a| a.id == id)
}

fn run(alg: &FiniteAlgebra, group: &[Axiom]) -> Vec<AxiomResult> {
    group.iter().map(|a| a.check(alg)).collect()
}

/// Monoid, lattice and monotonicity axioms, plus the informational
/// distributivity result.
pub fn check_monoid_lattice(alg: &FiniteAlgebra) -> Vec<AxiomResult> {
    let mut out = run(alg, MONOID_LATTICE);
    out.extend(run(alg, INFORMATIONAL));
    out
}

pub fn check_metric(alg: &FiniteAlgebra) -> Vec<AxiomResult> {
    run(alg, METRIC)
}

pub fn check_representable(alg: &FiniteAlgebra) -> Vec<AxiomResult> {
    run(alg, REPRESENTABLE)
}

pub fn check_al_monoid(alg: &FiniteAlgebra) -> AxiomReport {
    let mut results = check_monoid_lattice(alg);
    results.extend(check_metric(alg));
    results.extend(run(alg, AL_SPECIFIC));
    results.extend(check_representable(alg));

    let all = |ids: Vec<&str>| ids.iter().all(|&id| results.iter().any(|r| r.axiom_id == id && r.holds));
    let ids = |g: &'static [Axiom]| g.iter().map(|a| a.id).collect::<Vec<_>>();

    let mut base = vec!["plus.commutative", "plus.identity"];
    base.extend(ids(METRIC));
    let is_autometrized = all(base);
    let is_lattice_ordered_autometrized = is_autometrized && all(ids(MONOID_LATTICE));
    let is_al_monoid = is_lattice_ordered_autometrized && all(ids(AL_SPECIFIC));
    let is_representable = is_lattice_ordered_autometrized && all(ids(REPRESENTABLE));

    AxiomReport {
        algebra: alg.name().to_string(),
        results,
        verdicts: Verdicts {
            is_autometrized,
            is_lattice_ordered_autometrized,
            is_al_monoid,
            is_representable,
        },
    }
}

/// Short-circuiting AL-monoid test.
pub fn is_al_monoid(alg: &FiniteAlgebra) -> bool {
    [MONOID_LATTICE, METRIC, AL_SPECIFIC]
        .into_iter()
        .flatten()
        .all(|a| a.first_violation(alg).is_none())
}

/// Semiregularity plus the four contractions.
pub fn is_representable(alg: &FiniteAlgebra) -> bool {
    [MONOID_LATTICE, METRIC, REPRESENTABLE]
        .into_iter()
        .flatten()
        .all(|a| a.first_violation(alg).is_none())
}
