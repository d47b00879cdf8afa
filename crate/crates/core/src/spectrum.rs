//! Prime spectrum with the hull-kernel topology, separation, the minimal and
//! maximal subspaces, and value assignments.
//!
//! Sets of primes are bitsets over positions in `Spectrum::primes`.

use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra, MAX_ORDER};
use crate::error::{Error, Result};
use crate::ideals::{classified_ideals, enumerate_ideals, prime_ideals, principal_ideal};
use crate::subset::Subset;

#[derive(Clone, Debug, Serialize)]
pub struct Spectrum {
    pub primes: Vec<Subset>,
    /// `S(a) = {P : a ∉ P}` for each element `a`.
    pub basic_opens: Vec<Subset>,
    /// Every open set, sorted.
    pub opens: Vec<Subset>,
}

impl Spectrum {
    pub fn all(&self) -> Subset {
        Subset::full(self.primes.len())
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.binary_search(&s).is_ok()
    }

    /// `S(I) = {P : I ⊄ P}`.
    pub fn open_of_ideal(&self, i: Subset) -> Subset {
        (0..self.primes.len()).filter(|&p| !i.is_subset(self.primes[p])).collect()
    }

    /// Whether the subspace on `points` is Hausdorff; returns a failing pair.
    /// Basic opens suffice since every open is a union of them.
    pub fn t2_failure(&self, points: Subset) -> Option<(usize, usize)> {
        for p in points {
            for q in points {
                if q <= p {
                    continue;
                }
                let separated = self.basic_opens.iter().filter(|u| u.contains(p)).any(|&u| {
                    self.basic_opens
                        .iter()
                        .any(|&v| v.contains(q) && u.intersection(v).intersection(points).is_empty())
                });
                if !separated {
                    return Some((p, q));
                }
            }
        }
        None
    }

    /// Whether `s ∩ points` is closed in the subspace on `points`.
    pub fn relatively_closed(&self, s: Subset, points: Subset) -> bool {
        let complement = points.difference(s);
        let covered = self
            .basic_opens
            .iter()
            .map(|u| u.intersection(points))
            .filter(|u| u.is_subset(complement))
            .fold(Subset::EMPTY, Subset::union);
        covered == complement
    }
}

pub fn spectrum(alg: &FiniteAlgebra) -> Result<Spectrum> {
    let ideals = classified_ideals(alg)?;
    let primes = prime_ideals(&ideals);
    if primes.len() > MAX_ORDER {
        return Err(Error::BoundExceeded { n: primes.len(), bound: MAX_ORDER });
    }
    let basic_opens: Vec<Subset> = alg
        .elements()
        .map(|a| (0..primes.len()).filter(|&p| !primes[p].contains(a)).collect())
        .collect();
    // S(a) ∩ S(b) = S(a ∧ b), so basic opens are already closed under finite
    // intersection; the opens are their unions.
    let mut opens = vec![Subset::EMPTY];
    for &b in &basic_opens {
        let existing = opens.clone();
        for u in existing {
            let w = u.union(b);
            if !opens.contains(&w) {
                opens.push(w);
            }
        }
    }
    opens.sort();
    opens.dedup();
    Ok(Spectrum { primes, basic_opens, opens })
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparationWitness {
    pub p: usize,
    pub q: usize,
    pub a: Elem,
    pub b: Elem,
    pub u: Elem,
    pub v: Elem,
    pub p_in_su: bool,
    pub q_in_sv: bool,
    pub meet_zero: bool,
    pub disjoint: bool,
}

impl SeparationWitness {
    pub fn ok(&self) -> bool {
        self.p_in_su && self.q_in_sv && self.meet_zero && self.disjoint
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SeparationReport {
    /// One witness per incomparable pair: the first failing choice of
    /// `(a, b)` if any, else the first choice.
    pub witnesses: Vec<SeparationWitness>,
    pub holds: bool,
}

/// For incomparable primes `P, Q`, every `a ∈ Q\P`, `b ∈ P\Q` gives
/// `u = a∗(a∧b)`, `v = b∗(a∧b)` with `P ∈ S(u)`, `Q ∈ S(v)`, `u ∧ v = 0`
/// and `S(u) ∩ S(v) = ∅`.
pub fn separation_check(alg: &FiniteAlgebra) -> Result<SeparationReport> {
    let spec = spectrum(alg)?;
    Ok(separation_on(alg, &spec))
}

pub fn separation_on(alg: &FiniteAlgebra, spec: &Spectrum) -> SeparationReport {
    let primes = &spec.primes;
    let mut witnesses = Vec::new();
    for p in 0..primes.len() {
        for q in 0..primes.len() {
            let (pp, qq) = (primes[p], primes[q]);
            if p >= q || pp.is_subset(qq) || qq.is_subset(pp) {
                continue;
            }
            let mut chosen: Option<SeparationWitness> = None;
            'pairs: for a in qq.difference(pp) {
                for b in pp.difference(qq) {
                    let m = alg.meet(a, b);
                    let u = alg.star(a, m);
                    let v = alg.star(b, m);
                    let w = SeparationWitness {
                        p,
                        q,
                        a,
                        b,
                        u,
                        v,
                        p_in_su: spec.basic_opens[u].contains(p),
                        q_in_sv: spec.basic_opens[v].contains(q),
                        meet_zero: alg.meet(u, v) == alg.zero(),
                        disjoint: spec.basic_opens[u].intersection(spec.basic_opens[v]).is_empty(),
                    };
                    let bad = !w.ok();
                    if chosen.is_none() || bad {
                        chosen = Some(w);
                    }
                    if bad {
                        break 'pairs;
                    }
                }
            }
            witnesses.extend(chosen);
        }
    }
    SeparationReport {
        holds: witnesses.iter().all(SeparationWitness::ok),
        witnesses,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PolarCheck {
    pub a: Elem,
    /// `a^⊥ = {x : x ∧ a = 0}`.
    pub polar: Subset,
    pub polar_is_ideal: bool,
    /// `S(a) ∩ S(a^⊥) ∩ m(A) = ∅`.
    pub disjoint: bool,
    /// `S(a) ∪ S(a^⊥) ⊇ m(A)`.
    pub covers: bool,
    /// `S(a) ∩ m(A)` is closed in `m(A)`.
    pub closed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct MinMaxReport {
    pub minimal: Subset,
    pub maximal: Subset,
    pub minimal_t2_failure: Option<(usize, usize)>,
    pub maximal_t2_failure: Option<(usize, usize)>,
    pub polars: Vec<PolarCheck>,
    /// Some `b` with `⟨b⟩ = A`.
    pub unit: Option<Elem>,
    /// Every ideal of a finite algebra is compact; this records whether every
    /// ideal is principal.
    pub every_ideal_principal: bool,
}

impl MinMaxReport {
    pub fn holds(&self) -> bool {
        self.minimal_t2_failure.is_none()
            && self.maximal_t2_failure.is_none()
            && self.polars.iter().all(|c| c.polar_is_ideal && c.disjoint && c.covers && c.closed)
    }
}

pub fn polar(alg: &FiniteAlgebra, a: Elem) -> Subset {
    alg.elements().filter(|&x| alg.meet(x, a) == alg.zero()).collect()
}

pub fn minimal_maximal_primes(alg: &FiniteAlgebra) -> Result<MinMaxReport> {
    let spec = spectrum(alg)?;
    let k = spec.primes.len();
    let minimal: Subset = (0..k)
        .filter(|&p| (0..k).all(|q| !spec.primes[q].is_proper_subset(spec.primes[p])))
        .collect();
    let maximal: Subset = (0..k)
        .filter(|&p| (0..k).all(|q| !spec.primes[p].is_proper_subset(spec.primes[q])))
        .collect();
    let polars = alg
        .elements()
        .map(|a| {
            let pol = polar(alg, a);
            let sa = spec.basic_opens[a].intersection(minimal);
            let sp = spec.open_of_ideal(pol).intersection(minimal);
            PolarCheck {
                a,
                polar: pol,
                polar_is_ideal: crate::ideals::is_ideal(alg, pol).is_ok(),
                disjoint: sa.intersection(sp).is_empty(),
                covers: sa.union(sp) == minimal,
                closed: spec.relatively_closed(sa, minimal),
            }
        })
        .collect();
    let unit = alg.elements().find(|&b| principal_ideal(alg, b) == alg.carrier());
    let every_ideal_principal = enumerate_ideals(alg)?
        .iter()
        .all(|i| alg.elements().any(|b| principal_ideal(alg, b) == i.members));
    Ok(MinMaxReport {
        minimal_t2_failure: spec.t2_failure(minimal),
        maximal_t2_failure: spec.t2_failure(maximal),
        minimal,
        maximal,
        polars,
        unit,
        every_ideal_principal,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ValueAssignment {
    pub element: Elem,
    /// Ideals maximal among those not containing the element.
    pub values: Vec<Subset>,
    /// Prime positions in `S(a)`.
    pub domain: Subset,
    /// `μ(P)` as a position in `values`, when exactly one value contains `P`.
    pub mu: Vec<(usize, Option<usize>)>,
    /// Primes with a number of candidate values other than one.
    pub uniqueness_failures: Vec<(usize, usize)>,
    /// Preimages of subbasic opens are open, on the part where `μ` is defined.
    pub continuous: bool,
    /// `μ(P) ⊇ P` wherever defined (true by construction).
    pub contains_prime: bool,
}

impl ValueAssignment {
    pub fn holds(&self) -> bool {
        self.uniqueness_failures.is_empty() && self.continuous
    }
}

pub fn values(ideals: &[Subset], a: Elem) -> Vec<Subset> {
    let avoid: Vec<Subset> = ideals.iter().copied().filter(|i| !i.contains(a)).collect();
    avoid
        .iter()
        .copied()
        .filter(|&i| avoid.iter().all(|&j| !i.is_proper_subset(j)))
        .collect()
}

pub fn values_and_mu(alg: &FiniteAlgebra, a: Elem) -> Result<ValueAssignment> {
    if a >= alg.n() {
        return Err(Error::ElementOutOfRange(a));
    }
    let spec = spectrum(alg)?;
    let ideals: Vec<Subset> = enumerate_ideals(alg)?.into_iter().map(|i| i.members).collect();
    Ok(values_on(alg, &spec, &ideals, a))
}

pub fn values_on(alg: &FiniteAlgebra, spec: &Spectrum, ideals: &[Subset], a: Elem) -> ValueAssignment {
    let vals = values(ideals, a);
    let domain = spec.basic_opens[a];
    let mut mu = Vec::new();
    let mut uniqueness_failures = Vec::new();
    for p in domain {
        let above: Vec<usize> = (0..vals.len())
            .filter(|&v| spec.primes[p].is_subset(vals[v]))
            .collect();
        if above.len() == 1 {
            mu.push((p, Some(above[0])));
        } else {
            uniqueness_failures.push((p, above.len()));
            mu.push((p, None));
        }
    }
    let contains_prime = mu
        .iter()
        .all(|&(p, v)| v.is_none_or(|v| spec.primes[p].is_subset(vals[v])));
    let defined: Subset = mu.iter().filter(|(_, v)| v.is_some()).map(|&(p, _)| p).collect();
    // Subbasic opens of Val(a) are {V : b ∉ V}. A subset of S(a) is open in
    // the subspace iff it is open in the spectrum, because S(a) is open.
    let continuous = alg.elements().all(|b| {
        let preimage: Subset = mu
            .iter()
            .filter(|&&(_, v)| v.is_some_and(|v| !vals[v].contains(b)))
            .map(|&(p, _)| p)
            .collect();
        spec.opens
            .iter()
            .any(|&o| o.intersection(defined) == preimage)
    });
    ValueAssignment {
        element: a,
        values: vals,
        domain,
        mu,
        uniqueness_failures,
        continuous,
        contains_prime,
    }
}
