//! The finite algebra data model.
//!
//! An algebra is a carrier `0..n` with four binary operation tables
//! (`+`, `∗`, `∨`, `∧`) and a designated zero. The partial order is never
//! supplied directly; it is derived from the meet table and cross-checked
//! against the join table on construction.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Index of a carrier element.
pub type Elem = usize;

/// Largest carrier the workbench accepts.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Op {
    Plus,
    Star,
    Join,
    Meet,
}

impl Op {
    pub const ALL: [Op; 4] = [Op::Plus, Op::Star, Op::Join, Op::Meet];

    pub fn symbol(self) -> &'static str {
        match self {
            Op::Plus => "+",
            Op::Star => "*",
            Op::Join => "v",
            Op::Meet => "^",
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Op::Plus => "plus",
            Op::Star => "star",
            Op::Join => "join",
            Op::Meet => "meet",
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

/// A square operation table stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    n: usize,
    cells: Vec<Elem>,
}

impl Table {
    pub fn from_fn(n: usize, f: impl Fn(Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(f(a, b));
            }
        }
        Table { n, cells }
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidAlgebra("table is not square".into()));
        }
        Ok(Table {
            n,
            cells: rows.into_iter().flatten().collect(),
        })
    }

    #[inline]
    pub fn get(&self, a: Elem, b: Elem) -> Elem {
        self.cells[a * self.n + b]
    }

    pub fn cells(&self) -> &[Elem] {
        &self.cells
    }

    pub fn rows(&self) -> impl Iterator<Item = &[Elem]> {
        self.cells.chunks(self.n.max(1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    names: Vec<String>,
    zero: Elem,
    plus: Table,
    star: Table,
    join: Table,
    meet: Table,
    leq: Vec<bool>,
}

impl FiniteAlgebra {
    /// Builds an algebra from its four tables, deriving and validating the
    /// order.
    pub fn new(
        name: impl Into<String>,
        names: Vec<String>,
        zero: Elem,
        plus: Table,
        star: Table,
        join: Table,
        meet: Table,
    ) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidAlgebra("empty carrier".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::BoundExceeded { n, bound: MAX_ORDER });
        }
        let mut seen = HashSet::new();
        for l in &names {
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidAlgebra(format!("duplicate element label `{l}`")));
            }
        }
        if zero >= n {
            return Err(Error::ElementOutOfRange(zero));
        }
        for (op, t) in [(Op::Plus, &plus), (Op::Star, &star), (Op::Join, &join), (Op::Meet, &meet)] {
            if t.n != n || t.cells.len() != n * n {
                return Err(Error::InvalidAlgebra(format!(
                    "{} table has the wrong shape",
                    op.keyword()
                )));
            }
            if let Some(&bad) = t.cells.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidAlgebra(format!(
                    "{} table entry {bad} out of range",
                    op.keyword()
                )));
            }
        }
        let leq = derived_order(&names, &meet)?;
        for x in 0..n {
            for y in 0..n {
                if (meet.get(x, y) == x) != (join.get(x, y) == y) {
                    return Err(Error::InconsistentJoinMeet {
                        x: names[x].clone(),
                        y: names[y].clone(),
                    });
                }
            }
        }
        Ok(FiniteAlgebra {
            name: name.into(),
            names,
            zero,
            plus,
            star,
            join,
            meet,
            leq,
        })
    }

    /// Builds an algebra whose lattice operations come from a partial order
    /// (given as an n×n relation, closed reflexively and transitively here).
    pub fn from_order(
        name: impl Into<String>,
        names: Vec<String>,
        zero: Elem,
        plus: Table,
        star: Table,
        order: &[bool],
    ) -> Result<Self> {
        let (join, meet) = lattice_from_order(&names, order)?;
        Self::new(name, names, zero, plus, star, join, meet)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.names[x]
    }

    pub fn labels(&self, xs: impl IntoIterator<Item = Elem>) -> Vec<String> {
        xs.into_iter().map(|x| self.names[x].clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.names.iter().position(|l| l == label)
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.n()
    }

    pub fn carrier(&self) -> Subset {
        Subset::full(self.n())
    }

    pub fn zero_set(&self) -> Subset {
        Subset::singleton(self.zero)
    }

    pub fn table(&self, op: Op) -> &Table {
        match op {
            Op::Plus => &self.plus,
            Op::Star => &self.star,
            Op::Join => &self.join,
            Op::Meet => &self.meet,
        }
    }

    #[inline]
    pub fn op(&self, op: Op, a: Elem, b: Elem) -> Elem {
        self.table(op).get(a, b)
    }

    #[inline]
    pub fn plus(&self, a: Elem, b: Elem) -> Elem {
        self.plus.get(a, b)
    }

    #[inline]
    pub fn star(&self, a: Elem, b: Elem) -> Elem {
        self.star.get(a, b)
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join.get(a, b)
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet.get(a, b)
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.n() + b]
    }

    pub fn order_relation(&self) -> &[bool] {
        &self.leq
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.leq(a, b) || self.leq(b, a)))
    }

    /// `{x : x <= a}` for some `a` in `s`.
    pub fn downset(&self, s: Subset) -> Subset {
        self.elements()
            .filter(|&x| s.iter().any(|a| self.leq(x, a)))
            .collect()
    }

    pub fn image(&self, op: Op, xs: Subset, ys: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for x in xs {
            for y in ys {
                out.insert(self.op(op, x, y));
            }
        }
        out
    }

    /// Relabels the carrier: element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[Elem]) -> FiniteAlgebra {
        let n = self.n();
        let mut inv = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let relabel = |t: &Table| Table::from_fn(n, |a, b| perm[t.get(inv[a], inv[b])]);
        let names = (0..n).map(|x| self.names[inv[x]].clone()).collect();
        let leq = (0..n * n).map(|i| self.leq(inv[i / n], inv[i % n])).collect();
        FiniteAlgebra {
            name: self.name.clone(),
            names,
            zero: perm[self.zero],
            plus: relabel(&self.plus),
            star: relabel(&self.star),
            join: relabel(&self.join),
            meet: relabel(&self.meet),
            leq,
        }
    }

    /// The algebra carried by a subalgebra `s`, labels kept. Returns the new
    /// algebra and the embedding (new index -> old index).
    pub fn restrict(&self, s: Subset, name: impl Into<String>) -> Result<(FiniteAlgebra, Vec<Elem>)> {
        if !is_subalgebra(self, s) {
            return Err(Error::Precondition(format!(
                "{:?} is not a subalgebra of {}",
                self.labels(s),
                self.name
            )));
        }
        let members = s.to_vec();
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &x) in members.iter().enumerate() {
            pos[x] = i;
        }
        let m = members.len();
        let sub = |op: Op| Table::from_fn(m, |a, b| pos[self.op(op, members[a], members[b])]);
        let alg = FiniteAlgebra::new(
            name,
            self.labels(members.iter().copied()),
            pos[self.zero],
            sub(Op::Plus),
            sub(Op::Star),
            sub(Op::Join),
            sub(Op::Meet),
        )?;
        Ok((alg, members))
    }

    /// Tables as a tuple of flat vectors (meet, join, plus, star), the key
    /// used for canonical forms.
    pub fn table_key(&self) -> Vec<Elem> {
        let mut k = Vec::with_capacity(4 * self.n() * self.n());
        k.extend_from_slice(self.meet.cells());
        k.extend_from_slice(self.join.cells());
        k.extend_from_slice(self.plus.cells());
        k.extend_from_slice(self.star.cells());
        k
    }

    /// The one-element algebra.
    pub fn trivial() -> FiniteAlgebra {
        let t = || Table::from_fn(1, |_, _| 0);
        FiniteAlgebra::new("trivial", vec!["0".into()], 0, t(), t(), t(), t())
            .expect("trivial algebra is well formed")
    }

    /// The two-element chain `0 < 1` with `+ = ∨` and `x ∗ y = [x ≠ y]`.
    pub fn two_chain() -> FiniteAlgebra {
        FiniteAlgebra::new(
            "2-chain",
            vec!["0".into(), "1".into()],
            0,
            Table::from_fn(2, |a, b| a.max(b)),
            Table::from_fn(2, |a, b| usize::from(a != b)),
            Table::from_fn(2, |a, b| a.max(b)),
            Table::from_fn(2, |a, b| a.min(b)),
        )
        .expect("2-chain is well formed")
    }
}

/// Derives `x <= y iff x ∧ y = x` and checks that it is a partial order.
pub fn derived_order(names: &[String], meet: &Table) -> Result<Vec<bool>> {
    let n = names.len();
    let leq: Vec<bool> = (0..n * n).map(|i| meet.get(i / n, i % n) == i / n).collect();
    let le = |a: usize, b: usize| leq[a * n + b];
    for (a, name) in names.iter().enumerate() {
        if !le(a, a) {
            return Err(Error::NotPartialOrder {
                property: "reflexivity",
                witness: vec![name.clone()],
            });
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && le(a, b) && le(b, a) {
                return Err(Error::NotPartialOrder {
                    property: "antisymmetry",
                    witness: vec![names[a].clone(), names[b].clone()],
                });
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if !le(a, b) {
                continue;
            }
            for c in 0..n {
                if le(b, c) && !le(a, c) {
                    return Err(Error::NotPartialOrder {
                        property: "transitivity",
                        witness: vec![names[a].clone(), names[b].clone(), names[c].clone()],
                    });
                }
            }
        }
    }
    Ok(leq)
}

/// Reflexive-transitive closure of `order`, then the join and meet tables.
/// Fails on antisymmetry violations or on pairs without a unique bound.
pub fn lattice_from_order(names: &[String], order: &[bool]) -> Result<(Table, Table)> {
    let n = names.len();
    let mut le = order.to_vec();
    for a in 0..n {
        le[a * n + a] = true;
    }
    for k in 0..n {
        for a in 0..n {
            if le[a * n + k] {
                for b in 0..n {
                    if le[k * n + b] {
                        le[a * n + b] = true;
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            if le[a * n + b] && le[b * n + a] {
                return Err(Error::NotPartialOrder {
                    property: "antisymmetry",
                    witness: vec![names[a].clone(), names[b].clone()],
                });
            }
        }
    }
    let leq = |a: usize, b: usize| le[a * n + b];
    let bound = |a: usize, b: usize, upper: bool| -> Option<Elem> {
        let cands: Vec<Elem> = (0..n)
            .filter(|&c| if upper { leq(a, c) && leq(b, c) } else { leq(c, a) && leq(c, b) })
            .collect();
        cands
            .iter()
            .copied()
            .find(|&c| cands.iter().all(|&d| if upper { leq(c, d) } else { leq(d, c) }))
    };
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            join[a * n + b] = bound(a, b, true).ok_or_else(|| Error::NotALattice {
                x: names[a].clone(),
                y: names[b].clone(),
                bound: "supremum",
            })?;
            meet[a * n + b] = bound(a, b, false).ok_or_else(|| Error::NotALattice {
                x: names[a].clone(),
                y: names[b].clone(),
                bound: "infimum",
            })?;
        }
    }
    Ok((Table { n, cells: join }, Table { n, cells: meet }))
}

/// Least superset of `seed ∪ {0}` closed under all four operations.
pub fn subalgebra_closure(alg: &FiniteAlgebra, seed: Subset) -> Subset {
    let mut s = seed.with(alg.zero());
    loop {
        let mut next = s;
        for op in Op::ALL {
            next = next.union(alg.image(op, s, s));
        }
        if next == s {
            return s;
        }
        s = next;
    }
}

/// Contains zero and is closed under all four operations.
pub fn is_subalgebra(alg: &FiniteAlgebra, s: Subset) -> bool {
    s.contains(alg.zero()) && Op::ALL.iter().all(|&op| alg.image(op, s, s).is_subset(s))
}
