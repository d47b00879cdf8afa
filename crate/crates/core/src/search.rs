//! Exhaustive enumeration of small AL-monoids up to isomorphism, and
//! counterexample mining over the enumerated models.
//!
//! In a finite AL-monoid the additive zero is the least element, so every
//! model is searched with zero at index 0 and at the bottom of the lattice.
//! Search order: lattice, then `+`, then `∗`. Partial tables are rejected as
//! soon as an axiom instance with all cells assigned fails.

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{lattice_from_order, Elem, FiniteAlgebra, Table};
use crate::axioms::{self, check_al_monoid};
use crate::error::{Error, Result};
use crate::registry;

pub const DEFAULT_SEARCH_BOUND: usize = 5;

/// Labels used for enumerated models: `0, a, b, ...`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i == 0 {
                "0".to_string()
            } else if i <= 26 {
                ((b'a' + (i - 1) as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

/// `T'(σa, σb) = σ(T(a, b))` on a flat `n x n` table.
fn permute_cells(cells: &[Elem], n: usize, perm: &[Elem]) -> Vec<Elem> {
    let mut out = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            out[perm[a] * n + perm[b]] = perm[cells[a * n + b]];
        }
    }
    out
}

/// Permutations of `0..n` fixing 0.
fn zero_fixing_perms(n: usize) -> impl Iterator<Item = Vec<Elem>> {
    (1..n).permutations(n.saturating_sub(1)).map(|rest| {
        let mut p = Vec::with_capacity(rest.len() + 1);
        p.push(0);
        p.extend(rest);
        p
    })
}

/// Least table key (`∧, ∨, +, ∗` cells) over all zero-fixing relabellings.
/// Brute force; intended for small orders.
pub fn canonical_key(alg: &FiniteAlgebra) -> Vec<Elem> {
    let n = alg.n();
    let z = alg.zero();
    // move zero to index 0 first
    let mut to_front: Vec<Elem> = (0..n).collect();
    to_front.swap(0, z);
    let base = alg.permuted(&to_front);
    zero_fixing_perms(n)
        .map(|p| base.permuted(&p).table_key())
        .min()
        .unwrap_or_default()
}

/// A lattice on `0..n` with 0 at the bottom, as flat meet and join tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmallLattice {
    pub n: usize,
    pub meet: Vec<Elem>,
    pub join: Vec<Elem>,
    pub leq: Vec<bool>,
    /// Zero-fixing permutations preserving the meet table.
    pub automorphisms: Vec<Vec<Elem>>,
}

/// All lattices of order `n` up to isomorphism, each in the relabelling with
/// the least meet table.
pub fn enumerate_lattices(n: usize) -> Vec<SmallLattice> {
    if n == 0 {
        return Vec::new();
    }
    let names = default_names(n);
    // Naturally labelled orders: 0 bottom, n-1 top, x < y only if x < y as
    // integers. Free pairs are those strictly inside.
    let inner: Vec<(usize, usize)> = (1..n.saturating_sub(1))
        .flat_map(|i| (i + 1..n - 1).map(move |j| (i, j)))
        .collect();
    let mut seen: Vec<Vec<Elem>> = Vec::new();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << inner.len()) {
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true; // 0 <= x
            leq[x * n + n - 1] = true; // x <= top
        }
        for (k, &(i, j)) in inner.iter().enumerate() {
            if mask >> k & 1 == 1 {
                leq[i * n + j] = true;
            }
        }
        let transitive = (0..n).all(|a| {
            (0..n).all(|b| !leq[a * n + b] || (0..n).all(|c| !leq[b * n + c] || leq[a * n + c]))
        });
        if !transitive {
            continue;
        }
        let Ok((_, meet)) = lattice_from_order(&names, &leq) else {
            continue;
        };
        let meet = meet.cells().to_vec();
        let (best, _) = zero_fixing_perms(n)
            .map(|p| (permute_cells(&meet, n, &p), p))
            .min()
            .expect("at least the identity");
        if seen.contains(&best) {
            continue;
        }
        seen.push(best.clone());
        let order_best = derived_leq(&best, n);
        let join_best = join_from_leq(&order_best, n);
        let automorphisms = zero_fixing_perms(n)
            .filter(|p| permute_cells(&best, n, p) == best)
            .collect();
        out.push(SmallLattice {
            n,
            meet: best,
            join: join_best,
            leq: order_best,
            automorphisms,
        });
    }
    out.sort_by(|a, b| a.meet.cmp(&b.meet));
    out
}

fn derived_leq(meet: &[Elem], n: usize) -> Vec<bool> {
    (0..n * n).map(|k| meet[k] == k / n).collect()
}

fn join_from_leq(leq: &[bool], n: usize) -> Vec<Elem> {
    let mut join = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            let ups: Vec<Elem> = (0..n).filter(|&u| leq[a * n + u] && leq[b * n + u]).collect();
            join[a * n + b] = *ups
                .iter()
                .find(|&&u| ups.iter().all(|&v| leq[u * n + v]))
                .expect("lattice has joins");
        }
    }
    join
}

struct Search<'l> {
    lat: &'l SmallLattice,
    n: usize,
    plus: Vec<Option<Elem>>,
    star: Vec<Option<Elem>>,
    found: Vec<(Vec<Elem>, Vec<Elem>)>,
}

impl Search<'_> {
    fn leq(&self, a: Elem, b: Elem) -> bool {
        self.lat.leq[a * self.n + b]
    }
    fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.lat.meet[a * self.n + b]
    }
    fn join(&self, a: Elem, b: Elem) -> Elem {
        self.lat.join[a * self.n + b]
    }
    fn p(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.plus[a * self.n + b]
    }
    fn s(&self, a: Elem, b: Elem) -> Option<Elem> {
        self.star[a * self.n + b]
    }

    fn plus_ok(&self, i: Elem, j: Elem) -> bool {
        let n = self.n;
        let v = self.p(i, j).expect("assigned");
        // monotone in both arguments, against every assigned cell
        for (ci, cj, cv) in [(i, j, v), (j, i, v)] {
            for x in 0..n {
                for y in 0..n {
                    let Some(w) = self.p(x, y) else { continue };
                    if self.leq(x, ci) && self.leq(y, cj) && !self.leq(w, cv) {
                        return false;
                    }
                    if self.leq(ci, x) && self.leq(cj, y) && !self.leq(cv, w) {
                        return false;
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let Some(ab) = self.p(a, b) else { continue };
                for c in 0..n {
                    let (Some(bc), Some(l)) = (self.p(b, c), self.p(ab, c)) else { continue };
                    if let Some(r) = self.p(a, bc) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn plus_cells(&self) -> Vec<(Elem, Elem)> {
        (1..self.n).flat_map(|i| (i..self.n).map(move |j| (i, j))).collect()
    }

    fn star_cells(&self) -> Vec<(Elem, Elem)> {
        (1..self.n).flat_map(|i| (i + 1..self.n).map(move |j| (i, j))).collect()
    }

    fn fill_plus(&mut self, cells: &[(Elem, Elem)], k: usize) {
        if k == cells.len() {
            self.start_star();
            return;
        }
        let (i, j) = cells[k];
        for v in 0..self.n {
            self.plus[i * self.n + j] = Some(v);
            self.plus[j * self.n + i] = Some(v);
            if self.plus_ok(i, j) {
                self.fill_plus(cells, k + 1);
            }
        }
        self.plus[i * self.n + j] = None;
        self.plus[j * self.n + i] = None;
    }

    fn start_star(&mut self) {
        let n = self.n;
        self.star = vec![None; n * n];
        for x in 0..n {
            self.star[x * n + x] = Some(0);
            self.star[x] = Some(x);
            self.star[x * n] = Some(x);
        }
        if !self.star_ok() {
            return;
        }
        let cells = self.star_cells();
        self.fill_star(&cells, 0);
    }

    fn fill_star(&mut self, cells: &[(Elem, Elem)], k: usize) {
        if k == cells.len() {
            let plus = self.plus.iter().map(|v| v.expect("complete")).collect();
            let star = self.star.iter().map(|v| v.expect("complete")).collect();
            self.found.push((plus, star));
            return;
        }
        let (i, j) = cells[k];
        for v in 1..self.n {
            self.star[i * self.n + j] = Some(v);
            self.star[j * self.n + i] = Some(v);
            if self.star_ok() {
                self.fill_star(cells, k + 1);
            }
        }
        self.star[i * self.n + j] = None;
        self.star[j * self.n + i] = None;
    }

    /// Every axiom instance whose cells are all assigned holds.
    fn star_ok(&self) -> bool {
        let n = self.n;
        let plus = |a: Elem, b: Elem| self.p(a, b).expect("plus complete");
        for a in 0..n {
            for b in 0..n {
                if let Some(d) = self.s(a, self.meet(a, b)) {
                    if plus(d, b) != self.join(a, b) {
                        return false;
                    }
                }
                let j = self.join(a, b);
                if let (Some(x), Some(y)) = (self.s(a, j), self.s(b, j)) {
                    if self.meet(x, y) != 0 {
                        return false;
                    }
                }
                let Some(ab) = self.s(a, b) else { continue };
                for c in 0..n {
                    if let (Some(ac), Some(cb)) = (self.s(a, c), self.s(c, b)) {
                        if !self.leq(ab, plus(ac, cb)) {
                            return false;
                        }
                    }
                    // contraction with x = a, y = b, translated by c
                    let images = [
                        (plus(c, a), plus(c, b)),
                        (self.join(c, a), self.join(c, b)),
                        (self.meet(c, a), self.meet(c, b)),
                    ];
                    for (l, r) in images {
                        if let Some(lr) = self.s(l, r) {
                            if !self.leq(lr, ab) {
                                return false;
                            }
                        }
                    }
                    if let (Some(l), Some(r)) = (self.s(c, a), self.s(c, b)) {
                        if let Some(lr) = self.s(l, r) {
                            if !self.leq(lr, ab) {
                                return false;
                            }
                        }
                    }
                }
            }
        }
        true
    }
}

/// Models on one lattice, canonicalised over its automorphisms, as
/// `(plus, star)` cell vectors.
fn models_on(lat: &SmallLattice) -> Vec<(Vec<Elem>, Vec<Elem>)> {
    let n = lat.n;
    let mut plus = vec![None; n * n];
    for x in 0..n {
        plus[x] = Some(x);
        plus[x * n] = Some(x);
    }
    let mut search = Search {
        lat,
        n,
        plus,
        star: Vec::new(),
        found: Vec::new(),
    };
    let cells = search.plus_cells();
    // the zero row alone must already be consistent
    search.fill_plus(&cells, 0);
    let mut canon: Vec<(Vec<Elem>, Vec<Elem>)> = search
        .found
        .into_iter()
        .map(|(p, s)| {
            lat.automorphisms
                .iter()
                .map(|g| (permute_cells(&p, n, g), permute_cells(&s, n, g)))
                .min()
                .expect("identity is an automorphism")
        })
        .collect();
    canon.sort();
    canon.dedup();
    canon
}

fn build(lat: &SmallLattice, plus: Vec<Elem>, star: Vec<Elem>, name: String) -> Result<FiniteAlgebra> {
    let n = lat.n;
    let rows = |cells: &[Elem]| Table::from_rows(cells.chunks(n).map(<[Elem]>::to_vec).collect());
    FiniteAlgebra::new(
        name,
        default_names(n),
        0,
        rows(&plus)?,
        rows(&star)?,
        rows(&lat.join)?,
        rows(&lat.meet)?,
    )
}

/// One canonical representative per isomorphism class of AL-monoids of
/// order `n`, sorted by table key.
pub fn enumerate_models(n: usize) -> Result<Vec<FiniteAlgebra>> {
    enumerate_models_bounded(n, DEFAULT_SEARCH_BOUND)
}

pub fn enumerate_models_bounded(n: usize, bound: usize) -> Result<Vec<FiniteAlgebra>> {
    if n == 0 {
        return Err(Error::Precondition("order must be at least 1".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let mut keyed: Vec<(Vec<Elem>, FiniteAlgebra)> = Vec::new();
    for lat in enumerate_lattices(n) {
        for (plus, star) in models_on(&lat) {
            let alg = build(&lat, plus, star, String::new())?;
            let report = check_al_monoid(&alg);
            if !report.verdicts.is_al_monoid {
                return Err(Error::InvalidAlgebra(format!(
                    "search produced a non-model failing {:?}",
                    report.failures().map(|r| r.axiom_id).collect::<Vec<_>>()
                )));
            }
            keyed.push((alg.table_key(), alg));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed
        .into_iter()
        .enumerate()
        .map(|(k, (_, alg))| alg.with_name(format!("m{n}_{}", k + 1)))
        .collect())
}

#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub max_order: usize,
    pub properties: Vec<String>,
    pub bound: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Counterexample {
    #[serde(skip)]
    pub model: FiniteAlgebra,
    pub model_name: String,
    pub order: usize,
    pub property: String,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FalsifyVerdict {
    pub found: Option<Counterexample>,
    /// `(order, models checked)` for every order searched.
    pub searched: Vec<(usize, usize)>,
}

/// Evaluates a registry check or an axiom on one model; `Ok(None)` when it
/// holds, else the witness text.
pub fn evaluate_property(alg: &FiniteAlgebra, id: &str) -> Result<Option<Option<String>>> {
    if let Some(check) = registry::find(id) {
        let outcome = (check.run)(alg)?;
        return Ok((!outcome.holds).then_some(outcome.detail));
    }
    if let Some(ax) = axioms::axiom(id) {
        let r = ax.check(alg);
        return Ok((!r.holds).then(|| r.witness.map(|w| format!("({})", w.join(",")))));
    }
    Err(Error::UnknownProperty(id.to_string()))
}

/// First model of order `1..=max_order` violating any requested property.
pub fn counterexample_search(spec: &SearchSpec) -> Result<FalsifyVerdict> {
    for id in &spec.properties {
        if registry::find(id).is_none() && axioms::axiom(id).is_none() {
            return Err(Error::UnknownProperty(id.clone()));
        }
    }
    let mut searched = Vec::new();
    for n in 1..=spec.max_order {
        let models = enumerate_models_bounded(n, spec.bound)?;
        searched.push((n, models.len()));
        for m in models {
            for id in &spec.properties {
                if let Some(witness) = evaluate_property(&m, id)? {
                    return Ok(FalsifyVerdict {
                        found: Some(Counterexample {
                            model_name: m.name().to_string(),
                            order: n,
                            property: id.clone(),
                            witness,
                            model: m,
                        }),
                        searched,
                    });
                }
            }
        }
    }
    Ok(FalsifyVerdict { found: None, searched })
}
