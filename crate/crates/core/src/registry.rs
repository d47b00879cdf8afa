//! Theorem checks with stable ids, shared by `verify`, `falsify` and the
//! test suites.

use serde::Serialize;

use crate::algebra::{subalgebra_closure, FiniteAlgebra};
use crate::congruence::{bijection_check, quotient};
use crate::error::Result;
use crate::ideals::{classified_ideals, convexity_violation, ideal_lattice, maximal_ideals, IdealSet};
use crate::morphism::{chain_checks, first_isomorphism_theorem, second_isomorphism_theorem, Homomorphism};
use crate::product::{decompose_distant, representability_check, tuple_map_check};
use crate::spectrum::{minimal_maximal_primes, separation_on, spectrum, values_on};
use crate::subset::Subset;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub holds: bool,
    pub detail: Option<String>,
}

impl CheckOutcome {
    fn pass() -> Self {
        CheckOutcome { holds: true, detail: None }
    }

    fn fail(detail: impl Into<String>) -> Self {
        CheckOutcome { holds: false, detail: Some(detail.into()) }
    }

    fn from_first(failure: Option<String>) -> Self {
        failure.map_or_else(Self::pass, Self::fail)
    }
}

#[derive(Clone, Copy)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    /// Reported but not counted as a failure by `verify`.
    pub informational: bool,
    pub run: fn(&FiniteAlgebra) -> Result<CheckOutcome>,
}

impl std::fmt::Debug for TheoremCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("TheoremCheck").field("id", &self.id).finish()
    }
}

fn show(alg: &FiniteAlgebra, s: Subset) -> String {
    format!("{{{}}}", alg.labels(s).join(","))
}

fn flagged(
    alg: &FiniteAlgebra,
    pred: impl Fn(&IdealSet) -> Option<&'static str>,
) -> Result<CheckOutcome> {
    let ideals = classified_ideals(alg)?;
    Ok(CheckOutcome::from_first(
        ideals
            .iter()
            .find_map(|i| pred(i).map(|why| format!("{} {why}", show(alg, i.members)))),
    ))
}

fn ideal_cong_bij(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let r = bijection_check(alg)?;
    Ok(CheckOutcome::from_first(r.failures.first().cloned()))
}

fn max_prime(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    flagged(alg, |i| {
        let f = i.flags();
        (f.is_maximal && !f.is_prime).then_some("is maximal but not prime")
    })
}

fn regular_prime(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    flagged(alg, |i| {
        let f = i.flags();
        (f.is_regular && !f.is_prime).then_some("is regular but not prime")
    })
}

fn strong_all(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    flagged(alg, |i| (!i.flags().is_strong).then_some("is not strong"))
}

fn strong_image(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    flagged(alg, |i| {
        (!i.flags().is_strong_image).then_some("is not strong with a*I read as an image set")
    })
}

fn convex(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let ideals = classified_ideals(alg)?;
    Ok(CheckOutcome::from_first(
        ideals.iter().find_map(|i| convexity_violation(alg, i.members)),
    ))
}

fn ideal_lattice_laws(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let l = ideal_lattice(alg)?;
    Ok(CheckOutcome::from_first(if !l.join_formula_agrees {
        Some("the join of two ideals differs from the ideal generated by their sums".into())
    } else if !l.algebraic {
        Some("some ideal is not the join of the principal ideals below it".into())
    } else {
        None
    }))
}

fn prime_chain_quot(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let r = chain_checks(alg)?;
    Ok(CheckOutcome::from_first(r.quotient_discrepancies.first().map(|&m| {
        format!("A/{} is a chain iff prime fails", show(alg, m))
    })))
}

fn chain_criterion(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let r = chain_checks(alg)?;
    Ok(CheckOutcome::from_first((r.is_chain != r.criterion_holds).then(|| {
        match r.criterion_witness {
            Some((a, b)) => format!("chain={} but {}^{} = 0", r.is_chain, alg.label(a), alg.label(b)),
            None => format!("chain={} but the meet criterion holds", r.is_chain),
        }
    })))
}

fn prime_upset_chain(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let r = chain_checks(alg)?;
    Ok(CheckOutcome::from_first(
        r.non_chain_upsets
            .first()
            .map(|&p| format!("ideals above prime {} are not a chain", show(alg, p))),
    ))
}

fn ker_meet(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let ideals = classified_ideals(alg)?;
    let quotients = ideals
        .iter()
        .map(|i| quotient(alg, i.members))
        .collect::<Result<Vec<_>>>()?;
    for (x, qi) in quotients.iter().enumerate() {
        for qj in &quotients[x..] {
            let homs = vec![
                (qi.algebra.clone(), qi.projection.clone()),
                (qj.algebra.clone(), qj.projection.clone()),
            ];
            let r = tuple_map_check(alg, &homs)?;
            if !r.holds {
                return Ok(CheckOutcome::fail(format!(
                    "tuple of {} and {}: kernel {} vs meet {}",
                    qi.algebra.name(),
                    qj.algebra.name(),
                    show(alg, r.kernel),
                    show(alg, r.meet_of_kernels)
                )));
            }
        }
    }
    Ok(CheckOutcome::pass())
}

fn distant_decomp(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let d = decompose_distant(alg)?;
    Ok(CheckOutcome::from_first(d.iter().find(|x| !x.holds).map(|x| {
        format!("A is not isomorphic to A/{} x A/{}", show(alg, x.i), show(alg, x.j))
    })))
}

fn spec_sep(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let spec = spectrum(alg)?;
    let r = separation_on(alg, &spec);
    Ok(CheckOutcome::from_first(r.witnesses.iter().find(|w| !w.ok()).map(|w| {
        format!(
            "P={} Q={} a={} b={} u={} v={}: P in S(u) {}, Q in S(v) {}, u^v=0 {}, disjoint {}",
            show(alg, spec.primes[w.p]),
            show(alg, spec.primes[w.q]),
            alg.label(w.a),
            alg.label(w.b),
            alg.label(w.u),
            alg.label(w.v),
            w.p_in_su,
            w.q_in_sv,
            w.meet_zero,
            w.disjoint
        )
    })))
}

fn minmax_t2(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let r = minimal_maximal_primes(alg)?;
    let polar = r
        .polars
        .iter()
        .find(|c| !(c.polar_is_ideal && c.disjoint && c.covers && c.closed));
    Ok(CheckOutcome::from_first(if let Some((p, q)) = r.minimal_t2_failure {
        Some(format!("minimal primes #{p} and #{q} are not separated"))
    } else if let Some((p, q)) = r.maximal_t2_failure {
        Some(format!("maximal primes #{p} and #{q} are not separated"))
    } else {
        polar.map(|c| {
            format!(
                "polar of {} = {}: ideal {}, disjoint {}, covers {}, closed {}",
                alg.label(c.a),
                show(alg, c.polar),
                c.polar_is_ideal,
                c.disjoint,
                c.covers,
                c.closed
            )
        })
    }))
}

fn mu_check(alg: &FiniteAlgebra, uniqueness: bool) -> Result<CheckOutcome> {
    let spec = spectrum(alg)?;
    let ideals: Vec<Subset> = classified_ideals(alg)?.into_iter().map(|i| i.members).collect();
    for a in alg.elements().filter(|&a| a != alg.zero()) {
        let v = values_on(alg, &spec, &ideals, a);
        if uniqueness {
            if let Some(&(p, count)) = v.uniqueness_failures.first() {
                return Ok(CheckOutcome::fail(format!(
                    "a={}: prime {} lies below {count} values",
                    alg.label(a),
                    show(alg, spec.primes[p])
                )));
            }
        } else if !v.continuous {
            return Ok(CheckOutcome::fail(format!("mu for a={} is not continuous", alg.label(a))));
        }
    }
    Ok(CheckOutcome::pass())
}

fn mu_unique(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    mu_check(alg, true)
}

fn mu_cont(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    mu_check(alg, false)
}

fn repr_equiv(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let r = representability_check(alg)?;
    Ok(CheckOutcome::from_first(
        (!r.agree).then(|| format!("R1={} R2={} R3={}", r.r1, r.r2, r.r3)),
    ))
}

fn maximal_variant(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let r = representability_check(alg)?;
    Ok(CheckOutcome::from_first(
        (r.m2 != r.r1).then(|| format!("M2={} but R1={}", r.m2, r.r1)),
    ))
}

fn iso1(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    for i in classified_ideals(alg)? {
        let q = quotient(alg, i.members)?;
        let f = Homomorphism::new(alg.clone(), q.algebra, q.projection)?;
        if !first_isomorphism_theorem(&f)?.holds {
            return Ok(CheckOutcome::fail(format!("fails for the projection onto A/{}", show(alg, i.members))));
        }
    }
    Ok(CheckOutcome::pass())
}

/// Subalgebras generated by at most two elements.
fn small_subalgebras(alg: &FiniteAlgebra) -> Vec<Subset> {
    let mut out = Vec::new();
    for x in alg.elements() {
        for y in x..alg.n() {
            let s = subalgebra_closure(alg, Subset::singleton(x).with(y));
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

fn iso2(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    let ideals = classified_ideals(alg)?;
    for b in small_subalgebras(alg) {
        for n in &ideals {
            let r = second_isomorphism_theorem(alg, b, n.members)?;
            if !r.holds {
                return Ok(CheckOutcome::fail(format!(
                    "B={} N={}: {}",
                    show(alg, b),
                    show(alg, n.members),
                    r.note.unwrap_or_else(|| "sides not isomorphic".into())
                )));
            }
        }
    }
    Ok(CheckOutcome::pass())
}

fn radical_maximal(alg: &FiniteAlgebra) -> Result<CheckOutcome> {
    // every proper ideal lies in a maximal one
    let ideals = classified_ideals(alg)?;
    let maxima = maximal_ideals(&ideals);
    Ok(CheckOutcome::from_first(ideals.iter().find_map(|i| {
        let proper = i.members != alg.carrier();
        (proper && !maxima.iter().any(|&m| i.members.is_subset(m)))
            .then(|| format!("{} lies in no maximal ideal", show(alg, i.members)))
    })))
}

pub const CHECKS: &[TheoremCheck] = &[
    TheoremCheck {
        id: "T-IDEAL-CONG-BIJ",
        statement: "ideals and congruences correspond one-to-one",
        informational: false,
        run: ideal_cong_bij,
    },
    TheoremCheck {
        id: "T-CONVEX",
        statement: "every ideal is a convex subalgebra",
        informational: false,
        run: convex,
    },
    TheoremCheck {
        id: "T-IDEAL-LATTICE",
        statement: "ideal joins are generated by sums and the ideal lattice is algebraic",
        informational: false,
        run: ideal_lattice_laws,
    },
    TheoremCheck {
        id: "T-MAX-PRIME",
        statement: "every maximal ideal is prime",
        informational: false,
        run: max_prime,
    },
    TheoremCheck {
        id: "T-MAX-EXISTS",
        statement: "every proper ideal lies in a maximal ideal",
        informational: false,
        run: radical_maximal,
    },
    TheoremCheck {
        id: "T-REGULAR-PRIME",
        statement: "every regular ideal is prime",
        informational: false,
        run: regular_prime,
    },
    TheoremCheck {
        id: "T-STRONG-ALL",
        statement: "every ideal is strong (a*I read as {x : a*x in I})",
        informational: false,
        run: strong_all,
    },
    TheoremCheck {
        id: "T-STRONG-IMAGE",
        statement: "every ideal is strong (a*I read as {a*x : x in I})",
        informational: true,
        run: strong_image,
    },
    TheoremCheck {
        id: "T-CHAIN-CRITERION",
        statement: "A is a chain iff a^b = 0 implies a = 0 or b = 0",
        informational: false,
        run: chain_criterion,
    },
    TheoremCheck {
        id: "T-PRIME-CHAIN-QUOT",
        statement: "A/M is a chain iff M is prime, for proper M",
        informational: false,
        run: prime_chain_quot,
    },
    TheoremCheck {
        id: "T-PRIME-UPSET-CHAIN",
        statement: "the ideals containing a prime form a chain",
        informational: false,
        run: prime_upset_chain,
    },
    TheoremCheck {
        id: "T-ISO1",
        statement: "A/ker f is isomorphic to Im f",
        informational: false,
        run: iso1,
    },
    TheoremCheck {
        id: "T-ISO2",
        statement: "B*N is a subalgebra and B*N/N is isomorphic to B/(B^N)",
        informational: false,
        run: iso2,
    },
    TheoremCheck {
        id: "T-KER-MEET",
        statement: "the kernel of a tuple map is the meet of the kernels",
        informational: false,
        run: ker_meet,
    },
    TheoremCheck {
        id: "T-DISTANT-DECOMP",
        statement: "a distant pair (I, J) gives A = A/I x A/J",
        informational: false,
        run: distant_decomp,
    },
    TheoremCheck {
        id: "T-SPEC-SEP",
        statement: "incomparable primes have disjoint basic neighbourhoods",
        informational: false,
        run: spec_sep,
    },
    TheoremCheck {
        id: "T-MINMAX-T2",
        statement: "minimal and maximal prime subspaces are Hausdorff",
        informational: false,
        run: minmax_t2,
    },
    TheoremCheck {
        id: "T-MU-UNIQUE",
        statement: "every prime in S(a) lies below exactly one value of a",
        informational: false,
        run: mu_unique,
    },
    TheoremCheck {
        id: "T-MU-CONT",
        statement: "the value map is continuous",
        informational: false,
        run: mu_cont,
    },
    TheoremCheck {
        id: "T-REPR-EQUIV",
        statement: "representable iff primes meet in {0} iff subdirect product of chains",
        informational: false,
        run: repr_equiv,
    },
    TheoremCheck {
        id: "T-MAXIMAL-VARIANT",
        statement: "maximals meet in {0} with simple chain quotients iff representable",
        informational: true,
        run: maximal_variant,
    },
];

pub fn find(id: &str) -> Option<&'static TheoremCheck> {
    CHECKS.iter().find(|c| c.id == id)
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: &'static str,
    pub statement: &'static str,
    pub informational: bool,
    pub holds: bool,
    pub detail: Option<String>,
}

/// Runs every registered check on one algebra.
pub fn run_all(alg: &FiniteAlgebra) -> Result<Vec<CheckRecord>> {
    CHECKS
        .iter()
        .map(|c| {
            let o = (c.run)(alg)?;
            Ok(CheckRecord {
                id: c.id,
                statement: c.statement,
                informational: c.informational,
                holds: o.holds,
                detail: o.detail,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<&str> = CHECKS.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), CHECKS.len());
    }

    #[test]
    fn four_element_fixture_passes_every_counted_check() {
        let a = fixtures::four_chain();
        let records = run_all(&a).unwrap();
        for r in records.iter().filter(|r| !r.informational) {
            assert!(r.holds, "{} failed: {:?}", r.id, r.detail);
        }
        let image = records.iter().find(|r| r.id == "T-STRONG-IMAGE").unwrap();
        assert!(!image.holds);
        // the radical {0,a,b} is not {0}
        let variant = records.iter().find(|r| r.id == "T-MAXIMAL-VARIANT").unwrap();
        assert!(!variant.holds);
    }
}
