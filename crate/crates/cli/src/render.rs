use almonoid::{Elem, FiniteAlgebra, Subset};

pub fn set(alg: &FiniteAlgebra, s: Subset) -> String {
    format!("{{{}}}", alg.labels(s).join(","))
}

pub fn labels(alg: &FiniteAlgebra, s: Subset) -> Vec<String> {
    alg.labels(s)
}

pub fn map(source: &FiniteAlgebra, target: &FiniteAlgebra, m: &[Elem]) -> String {
    source
        .elements()
        .map(|x| format!("{}->{}", source.label(x), target.label(m[x])))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn pass(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "FAIL"
    }
}

const ADJECTIVES: &[&str] = &[
    "commutative",
    "associative",
    "idempotent",
    "monotone",
    "positive",
    "definite",
    "symmetric",
];

/// One-line account of an axiom failure, e.g. `+ not commutative, witness (a,d)`.
pub fn axiom_failure(id: &str, witness: &[String]) -> String {
    let w = format!("witness ({})", witness.join(","));
    let symbol = match id.split('.').next() {
        Some("plus") => Some("+"),
        Some("star") => Some("*"),
        Some("join") => Some("v"),
        Some("meet") => Some("^"),
        _ => None,
    };
    let property = id.split('.').nth(1).unwrap_or_default();
    match symbol {
        Some(s) if ADJECTIVES.contains(&property) => format!("{s} not {property}, {w}"),
        _ => format!("{id} fails, {w}"),
    }
}
