//! Direct products, distant-pair decompositions, subdirect representations
//! and the representability equivalences.

use serde::Serialize;

use crate::algebra::{Elem, FiniteAlgebra, Op, Table, MAX_ORDER};
use crate::axioms::is_representable;
use crate::congruence::quotient;
use crate::error::{Error, Result};
use crate::ideals::{classified_ideals, distant_pairs_of, maximal_ideals, prime_ideals};
use crate::morphism::{find_isomorphism, is_homomorphism};
use crate::subset::Subset;

/// A product together with its factors. Elements are tuples indexed
/// lexicographically, first factor most significant.
#[derive(Clone, Debug)]
pub struct ProductAlgebra {
    pub factors: Vec<FiniteAlgebra>,
    pub algebra: FiniteAlgebra,
}

impl ProductAlgebra {
    pub fn coords(&self, mut x: Elem) -> Vec<Elem> {
        let mut out = vec![0; self.factors.len()];
        for (slot, f) in out.iter_mut().zip(&self.factors).rev() {
            *slot = x % f.n();
            x /= f.n();
        }
        out
    }

    pub fn index(&self, coords: &[Elem]) -> Elem {
        coords
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&c, f)| acc * f.n() + c)
    }

    /// The `i`-th projection as an element map.
    pub fn projection(&self, i: usize) -> Vec<Elem> {
        self.algebra.elements().map(|x| self.coords(x)[i]).collect()
    }
}

pub fn direct_product(factors: &[FiniteAlgebra]) -> Result<ProductAlgebra> {
    direct_product_bounded(factors, MAX_ORDER)
}

pub fn direct_product_bounded(factors: &[FiniteAlgebra], bound: usize) -> Result<ProductAlgebra> {
    if factors.is_empty() {
        return Err(Error::Precondition("a product needs at least one factor".into()));
    }
    let size = factors
        .iter()
        .try_fold(1usize, |acc, f| acc.checked_mul(f.n()).filter(|&s| s <= bound));
    let Some(size) = size else {
        let n = factors.iter().fold(1u128, |acc, f| acc * f.n() as u128);
        return Err(Error::BoundExceeded { n: n.min(usize::MAX as u128) as usize, bound });
    };
    let mut shell = ProductAlgebra {
        factors: factors.to_vec(),
        algebra: FiniteAlgebra::trivial(),
    };
    let coords: Vec<Vec<Elem>> = (0..size).map(|x| shell.coords(x)).collect();
    let names: Vec<String> = coords
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().zip(factors).map(|(&x, f)| f.label(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let table = |op: Op| {
        Table::from_fn(size, |x, y| {
            let z: Vec<Elem> = factors
                .iter()
                .enumerate()
                .map(|(i, f)| f.op(op, coords[x][i], coords[y][i]))
                .collect();
            shell.index(&z)
        })
    };
    let zero = shell.index(&factors.iter().map(|f| f.zero()).collect::<Vec<_>>());
    let name = factors.iter().map(|f| f.name()).collect::<Vec<_>>().join(" x ");
    let algebra = FiniteAlgebra::new(
        name,
        names,
        zero,
        table(Op::Plus),
        table(Op::Star),
        table(Op::Join),
        table(Op::Meet),
    )?;
    shell.algebra = algebra;
    Ok(shell)
}

#[derive(Clone, Debug, Serialize)]
pub struct TupleMapReport {
    /// `α(x)` as coordinates in the factors.
    pub tuples: Vec<Vec<Elem>>,
    pub is_homomorphism: bool,
    pub kernel: Subset,
    pub meet_of_kernels: Subset,
    pub holds: bool,
}

/// Given homomorphisms `f_i : A -> B_i`, checks that the tuple map is a
/// homomorphism with kernel equal to the intersection of the `ker f_i`.
pub fn tuple_map_check(alg: &FiniteAlgebra, homs: &[(FiniteAlgebra, Vec<Elem>)]) -> Result<TupleMapReport> {
    let mut meet_of_kernels = alg.carrier();
    let mut is_hom = true;
    for (target, map) in homs {
        if map.len() != alg.n() || map.iter().any(|&y| y >= target.n()) {
            return Err(Error::Precondition("map is not a total function".into()));
        }
        is_hom &= is_homomorphism(alg, target, map).is_homomorphism;
        let k: Subset = alg.elements().filter(|&x| map[x] == target.zero()).collect();
        meet_of_kernels = meet_of_kernels.intersection(k);
    }
    let tuples: Vec<Vec<Elem>> = alg
        .elements()
        .map(|x| homs.iter().map(|(_, m)| m[x]).collect())
        .collect();
    let zero_tuple: Vec<Elem> = homs.iter().map(|(t, _)| t.zero()).collect();
    let kernel: Subset = alg.elements().filter(|&x| tuples[x] == zero_tuple).collect();
    Ok(TupleMapReport {
        tuples,
        is_homomorphism: is_hom,
        kernel,
        meet_of_kernels,
        holds: is_hom && kernel == meet_of_kernels,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct Decomposition {
    pub i: Subset,
    pub j: Subset,
    pub proper: bool,
    /// `A -> A/I x A/J`, as product indices.
    pub isomorphism: Option<Vec<Elem>>,
    pub holds: bool,
}

/// For every distant pair `(I, J)`, checks `A ≅ A/I x A/J`.
pub fn decompose_distant(alg: &FiniteAlgebra) -> Result<Vec<Decomposition>> {
    let ideals = classified_ideals(alg)?;
    let dp = distant_pairs_of(alg, &ideals);
    let mut out = Vec::new();
    for (i, j) in dp.pairs {
        let qi = quotient(alg, i)?;
        let qj = quotient(alg, j)?;
        let prod = direct_product(&[qi.algebra.clone(), qj.algebra.clone()])?;
        let natural: Vec<Elem> = alg
            .elements()
            .map(|x| prod.index(&[qi.projection[x], qj.projection[x]]))
            .collect();
        let check = is_homomorphism(alg, &prod.algebra, &natural);
        let isomorphism = if check.is_isomorphism {
            Some(natural)
        } else {
            find_isomorphism(alg, &prod.algebra)
        };
        out.push(Decomposition {
            i,
            j,
            proper: i != alg.carrier() && j != alg.carrier(),
            holds: isomorphism.is_some(),
            isomorphism,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct ProductKernels {
    pub kernels: (Subset, Subset),
    pub is_distant_pair: bool,
}

/// For a two-factor product, whether the projection kernels form a distant
/// pair.
pub fn product_kernels(p: &ProductAlgebra) -> Result<ProductKernels> {
    if p.factors.len() != 2 {
        return Err(Error::Precondition("expected a product of two factors".into()));
    }
    let alg = &p.algebra;
    let ker = |i: usize| -> Subset {
        let proj = p.projection(i);
        alg.elements().filter(|&x| proj[x] == p.factors[i].zero()).collect()
    };
    let kernels = (ker(0), ker(1));
    let ideals = classified_ideals(alg)?;
    let dp = distant_pairs_of(alg, &ideals);
    Ok(ProductKernels {
        is_distant_pair: dp.pairs.contains(&kernels),
        kernels,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SubdirectReport {
    /// Prime ideals used, or `None` if none intersect to `{0}`.
    pub family: Option<Vec<Subset>>,
    /// `a ↦ ([a]_P)_P`, class indices per prime.
    pub tuples: Vec<Vec<Elem>>,
    pub injective: bool,
    pub projections_onto: bool,
    pub projections_homomorphic: bool,
    pub factors_are_chains: bool,
}

impl SubdirectReport {
    pub fn holds(&self) -> bool {
        self.family.is_some()
            && self.injective
            && self.projections_onto
            && self.projections_homomorphic
            && self.factors_are_chains
    }
}

/// Smallest family of primes (fewest members, then lexicographic in the
/// enumeration order) whose intersection is `{0}`.
pub fn minimal_prime_family(alg: &FiniteAlgebra, primes: &[Subset]) -> Option<Vec<Subset>> {
    let zero = alg.zero_set();
    if alg.carrier() == zero {
        return Some(Vec::new());
    }
    let all = primes.iter().fold(alg.carrier(), |acc, &p| acc.intersection(p));
    if all != zero {
        return None;
    }
    let m = primes.len();
    for k in 1..=m {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let meet = idx.iter().fold(alg.carrier(), |acc, &i| acc.intersection(primes[i]));
            if meet == zero {
                return Some(idx.iter().map(|&i| primes[i]).collect());
            }
            // next k-combination
            let mut pos = k;
            while pos > 0 && idx[pos - 1] == m - k + pos - 1 {
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
            idx[pos - 1] += 1;
            for q in pos..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    None
}

fn embed(alg: &FiniteAlgebra, family: &[Subset]) -> Result<SubdirectReport> {
    let quotients = family
        .iter()
        .map(|&p| quotient(alg, p))
        .collect::<Result<Vec<_>>>()?;
    let tuples: Vec<Vec<Elem>> = alg
        .elements()
        .map(|x| quotients.iter().map(|q| q.projection[x]).collect())
        .collect();
    let mut sorted = tuples.clone();
    sorted.sort();
    sorted.dedup();
    let injective = sorted.len() == alg.n();
    let projections_onto = quotients
        .iter()
        .all(|q| q.projection.iter().copied().collect::<Subset>() == q.algebra.carrier());
    let projections_homomorphic = quotients
        .iter()
        .all(|q| is_homomorphism(alg, &q.algebra, &q.projection).is_homomorphism);
    let factors_are_chains = quotients.iter().all(|q| q.algebra.is_chain());
    Ok(SubdirectReport {
        family: Some(family.to_vec()),
        tuples,
        injective,
        projections_onto,
        projections_homomorphic,
        factors_are_chains,
    })
}

pub fn subdirect_representation(alg: &FiniteAlgebra) -> Result<SubdirectReport> {
    let ideals = classified_ideals(alg)?;
    let primes = prime_ideals(&ideals);
    match minimal_prime_family(alg, &primes) {
        Some(family) => embed(alg, &family),
        None => Ok(SubdirectReport {
            family: None,
            tuples: Vec::new(),
            injective: false,
            projections_onto: false,
            projections_homomorphic: false,
            factors_are_chains: false,
        }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RepresentabilityReport {
    /// Semiregular and satisfies the four contractions.
    pub r1: bool,
    /// Some family of primes intersects to `{0}`.
    pub r2: bool,
    /// Subdirect product of chain quotients.
    pub r3: bool,
    /// Maximal ideals intersect to `{0}` and every `A/M` is a simple chain.
    pub m2: bool,
    pub agree: bool,
    pub note: &'static str,
}

pub fn representability_check(alg: &FiniteAlgebra) -> Result<RepresentabilityReport> {
    let ideals = classified_ideals(alg)?;
    let primes = prime_ideals(&ideals);
    let r1 = is_representable(alg);
    let family = minimal_prime_family(alg, &primes);
    let r2 = family.is_some();
    let r3 = match &family {
        Some(f) => embed(alg, f)?.holds(),
        None => false,
    };
    let maxima = maximal_ideals(&ideals);
    let radical_zero = maxima.iter().fold(alg.carrier(), |acc, &m| acc.intersection(m)) == alg.zero_set();
    let mut simple_chains = true;
    for &m in &maxima {
        let q = quotient(alg, m)?.algebra;
        let qi = classified_ideals(&q)?;
        let simple = qi
            .iter()
            .all(|i| i.members == q.zero_set() || i.members == q.carrier());
        simple_chains &= simple && q.is_chain();
    }
    let m2 = radical_zero && simple_chains;
    Ok(RepresentabilityReport {
        r1,
        r2,
        r3,
        m2,
        agree: r1 == r2 && r2 == r3,
        note: "order-reversing homomorphic images are not considered",
    })
}
