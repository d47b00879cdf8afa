//! Unpruned brute-force census of AL-monoids over raw tables. Shares no code
//! with the library search: its own axiom predicates and its own isomorphism
//! test by trying every permutation.

#![allow(dead_code)]

use almonoid::{FiniteAlgebra, Op};
use itertools::Itertools;

pub type Cells = Vec<usize>;

#[derive(Clone, Debug)]
pub struct Raw {
    pub n: usize,
    pub zero: usize,
    pub plus: Cells,
    pub star: Cells,
    pub join: Cells,
    pub meet: Cells,
}

/// Every `n x n` table with entries in `0..n`.
pub fn tables(n: usize) -> Vec<Cells> {
    (0..n * n).map(|_| 0..n).multi_cartesian_product().collect()
}

pub fn at(t: &Cells, n: usize, a: usize, b: usize) -> usize {
    t[a * n + b]
}

pub fn semilattice(t: &Cells, n: usize) -> bool {
    (0..n).all(|a| at(t, n, a, a) == a)
        && (0..n).all(|a| (0..n).all(|b| at(t, n, a, b) == at(t, n, b, a)))
        && (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| at(t, n, at(t, n, a, b), c) == at(t, n, a, at(t, n, b, c))))
        })
}

pub fn lattices(n: usize) -> Vec<(Cells, Cells)> {
    let all = tables(n);
    let semis: Vec<&Cells> = all.iter().filter(|t| semilattice(t, n)).collect();
    let mut out = Vec::new();
    for m in &semis {
        for j in &semis {
            let absorb = (0..n).all(|a| {
                (0..n).all(|b| at(m, n, a, at(j, n, a, b)) == a && at(j, n, a, at(m, n, a, b)) == a)
            });
            if absorb {
                out.push(((*m).clone(), (*j).clone()));
            }
        }
    }
    out
}

pub fn leq(meet: &Cells, n: usize, a: usize, b: usize) -> bool {
    at(meet, n, a, b) == a
}

pub fn monoid_ok(p: &Cells, meet: &Cells, n: usize, z: usize) -> bool {
    (0..n).all(|a| at(p, n, a, z) == a && at(p, n, z, a) == a)
        && (0..n).all(|a| (0..n).all(|b| at(p, n, a, b) == at(p, n, b, a)))
        && (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| at(p, n, at(p, n, a, b), c) == at(p, n, a, at(p, n, b, c))))
        })
        && (0..n).all(|a| {
            (0..n).all(|b| {
                !leq(meet, n, a, b) || (0..n).all(|c| leq(meet, n, at(p, n, a, c), at(p, n, b, c)))
            })
        })
}

pub fn al_ok(r: &Raw) -> bool {
    let n = r.n;
    let (p, s, j, m) = (&r.plus, &r.star, &r.join, &r.meet);
    let le = |a, b| leq(m, n, a, b);
    for a in 0..n {
        for b in 0..n {
            let ab = at(s, n, a, b);
            if !le(r.zero, ab) || (ab == r.zero) != (a == b) || ab != at(s, n, b, a) {
                return false;
            }
            if at(p, n, at(s, n, a, at(m, n, a, b)), b) != at(j, n, a, b) {
                return false;
            }
            let top = at(j, n, a, b);
            if at(m, n, at(s, n, a, top), at(s, n, b, top)) != r.zero {
                return false;
            }
            for c in 0..n {
                if !le(ab, at(p, n, at(s, n, a, c), at(s, n, c, b))) {
                    return false;
                }
                for t in [p, j, m, s] {
                    if !le(at(s, n, at(t, n, c, a), at(t, n, c, b)), ab) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn brute_force(n: usize) -> Vec<Raw> {
    let all = tables(n);
    let mut out = Vec::new();
    for (meet, join) in lattices(n) {
        for z in 0..n {
            for plus in all.iter().filter(|p| monoid_ok(p, &meet, n, z)) {
                for star in &all {
                    let r = Raw { n, zero: z, plus: plus.clone(), star: star.clone(), join: join.clone(), meet: meet.clone() };
                    if al_ok(&r) {
                        out.push(r);
                    }
                }
            }
        }
    }
    out
}

pub fn iso(x: &Raw, y: &Raw) -> bool {
    let n = x.n;
    (0..n).permutations(n).any(|s| {
        s[x.zero] == y.zero
            && [(&x.plus, &y.plus), (&x.star, &y.star), (&x.join, &y.join), (&x.meet, &y.meet)]
                .iter()
                .all(|(tx, ty)| (0..n).all(|a| (0..n).all(|b| s[at(tx, n, a, b)] == at(ty, n, s[a], s[b]))))
    })
}

pub fn classes(models: Vec<Raw>) -> Vec<Raw> {
    let mut reps: Vec<Raw> = Vec::new();
    for m in models {
        if !reps.iter().any(|r| iso(r, &m)) {
            reps.push(m);
        }
    }
    reps
}

pub fn raw(alg: &FiniteAlgebra) -> Raw {
    let cells = |op: Op| alg.table(op).cells().to_vec();
    Raw {
        n: alg.n(),
        zero: alg.zero(),
        plus: cells(Op::Plus),
        star: cells(Op::Star),
        join: cells(Op::Join),
        meet: cells(Op::Meet),
    }
}

/// Isomorphism classes of AL-monoids of order `n`, one representative each.
pub fn census(n: usize) -> Vec<Raw> {
    classes(brute_force(n))
}
