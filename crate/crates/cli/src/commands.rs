use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use almonoid::axioms::{check_al_monoid, is_al_monoid};
use almonoid::congruence::{bijection_check, enumerate_congruences, ideal_from_congruence, is_congruence, quotient};
use almonoid::ideals::{
    classified_ideals, distant_pairs_of, ideal_lattice, is_ideal, radical_of, residue_class, set_ideal_bound,
    star_sets,
};
use almonoid::morphism::{
    enumerate_homomorphisms, find_isomorphism, first_isomorphism_theorem, second_isomorphism_theorem, Homomorphism,
};
use almonoid::product::{decompose_distant, direct_product_bounded, representability_check, subdirect_representation};
use almonoid::search::{counterexample_search, enumerate_models_bounded, SearchSpec, DEFAULT_SEARCH_BOUND};
use almonoid::spectrum::{minimal_maximal_primes, separation_on, spectrum, values_on};
use almonoid::algebra::MAX_ORDER;
use almonoid::{parse_algebra, registry, subalgebra_closure, to_alm, Elem, FiniteAlgebra, Subset};
use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use crate::render::{axiom_failure, labels, map, pass, set, yes};
use crate::{Cli, Command, VerifyArgs};

pub struct Output {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

pub fn run(cli: &Cli) -> Result<Output> {
    if let Some(b) = cli.bound {
        set_ideal_bound(b);
    }
    match &cli.command {
        Command::Check { file } => check(&load(file)?),
        Command::Ideals { file } => ideals(&load(file)?),
        Command::Congruences { file } => congruences(&load(file)?),
        Command::Quotient { file, ideal, output } => quotient_cmd(&load(file)?, ideal, output.as_deref()),
        Command::Homs { source, target, count_only } => homs(&load(source)?, &load(target)?, *count_only),
        Command::Iso { first, second } => iso(&load(first)?, &load(second)?),
        Command::Isotheorems { file } => isotheorems(&load(file)?),
        Command::Product { first, second, output } => {
            product(&load(first)?, &load(second)?, output.as_deref(), cli.bound.unwrap_or(MAX_ORDER))
        }
        Command::Decompose { file } => decompose(&load(file)?),
        Command::Subdirect { file } => subdirect(&load(file)?),
        Command::Representable { file } => representable(&load(file)?),
        Command::Spectrum { file, element } => spectrum_cmd(&load(file)?, element.as_deref()),
        Command::Search { order, count_only, emit } => {
            search(*order, *count_only, emit.as_deref(), cli.bound.unwrap_or(DEFAULT_SEARCH_BOUND))
        }
        Command::Falsify { order, property, emit } => {
            falsify(*order, property, emit.as_deref(), cli.bound.unwrap_or(DEFAULT_SEARCH_BOUND))
        }
        Command::Verify(args) => verify(args, cli.bound.unwrap_or(DEFAULT_SEARCH_BOUND)),
    }
}

fn load(path: &Path) -> Result<FiniteAlgebra> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_algebra(&text).with_context(|| format!("{}", path.display()))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    fs::write(path, contents).with_context(|| format!("cannot write {}", path.display()))
}

fn element(alg: &FiniteAlgebra, label: &str) -> Result<Elem> {
    alg.index_of(label.trim())
        .ok_or_else(|| anyhow!("unknown element '{}' in {}", label.trim(), alg.name()))
}

fn subset(alg: &FiniteAlgebra, spec: &str) -> Result<Subset> {
    spec.trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|l| element(alg, l))
        .collect()
}

/// Appends a note and returns false when the input is not an AL-monoid.
fn note_model(alg: &FiniteAlgebra, text: &mut String) -> bool {
    let ok = is_al_monoid(alg);
    if !ok {
        let _ = writeln!(text, "warning: {} is not an AL-monoid (see `check`)", alg.name());
    }
    ok
}

fn check(alg: &FiniteAlgebra) -> Result<Output> {
    let report = check_al_monoid(alg);
    let mut text = format!("algebra {} ({} elements)\n", alg.name(), alg.n());
    for r in &report.results {
        let _ = write!(text, "  {:<28} {}", r.axiom_id, pass(r.holds));
        if let Some(w) = &r.witness {
            let _ = write!(text, "  witness ({})", w.join(","));
        }
        text.push('\n');
    }
    for r in report.failures() {
        let _ = writeln!(text, "{}", axiom_failure(r.axiom_id, r.witness.as_deref().unwrap_or_default()));
    }
    let v = &report.verdicts;
    let _ = writeln!(text, "is_autometrized: {}", v.is_autometrized);
    let _ = writeln!(text, "is_lattice_ordered_autometrized: {}", v.is_lattice_ordered_autometrized);
    let _ = writeln!(text, "is_al_monoid: {}", v.is_al_monoid);
    let _ = writeln!(text, "is_representable: {}", v.is_representable);
    Ok(Output {
        passed: v.is_al_monoid,
        json: serde_json::to_value(&report)?,
        text,
    })
}

fn ideals(alg: &FiniteAlgebra) -> Result<Output> {
    let ideals = classified_ideals(alg)?;
    let lattice = ideal_lattice(alg)?;
    let radical = radical_of(alg, &ideals);
    let distant = distant_pairs_of(alg, &ideals);
    let mut text = String::new();
    let model = note_model(alg, &mut text);
    let _ = writeln!(text, "ideals of {}: {}", alg.name(), ideals.len());
    let mut rows = Vec::new();
    for i in &ideals {
        let f = i.flags();
        let tags: Vec<&str> = [
            (f.is_prime, "prime"),
            (f.is_maximal, "maximal"),
            (f.is_regular, "regular"),
            (f.is_strong, "strong"),
            (f.is_strong_image, "strong-image"),
        ]
        .into_iter()
        .filter_map(|(b, t)| b.then_some(t))
        .collect();
        let _ = writeln!(text, "  {:<20} {}", set(alg, i.members), tags.join(" "));
        let mut images = serde_json::Map::new();
        let mut residues = serde_json::Map::new();
        for a in alg.elements() {
            let image = star_sets(alg, a, i.members, i.members).0;
            let residue = residue_class(alg, a, i.members);
            let _ = writeln!(
                text,
                "      {}*{} = {}   {{x : {}*x in I}} = {}",
                alg.label(a),
                set(alg, i.members),
                set(alg, image),
                alg.label(a),
                set(alg, residue)
            );
            images.insert(alg.label(a).to_string(), json!(labels(alg, image)));
            residues.insert(alg.label(a).to_string(), json!(labels(alg, residue)));
        }
        rows.push(json!({
            "members": labels(alg, i.members),
            "prime": f.is_prime,
            "maximal": f.is_maximal,
            "regular": f.is_regular,
            "strong": f.is_strong,
            "strong_image": f.is_strong_image,
            "star_images": images,
            "residues": residues,
        }));
    }
    let _ = write!(text, "radical: {}", set(alg, radical.members));
    if let Some(note) = radical.note {
        let _ = write!(text, " ({note})");
    }
    text.push('\n');
    let pairs: Vec<Value> = distant
        .pairs
        .iter()
        .map(|&(i, j)| json!([labels(alg, i), labels(alg, j)]))
        .collect();
    let _ = writeln!(
        text,
        "distant pairs: {}",
        distant
            .pairs
            .iter()
            .map(|&(i, j)| format!("({}, {})", set(alg, i), set(alg, j)))
            .collect::<Vec<_>>()
            .join(" ")
    );
    let _ = writeln!(text, "directly indecomposable: {}", yes(distant.is_directly_indecomposable));
    let _ = writeln!(
        text,
        "ideal lattice: join by sums {}, algebraic {}, principal {}/{}",
        pass(lattice.join_formula_agrees),
        pass(lattice.algebraic),
        lattice.principal.iter().filter(|&&p| p).count(),
        lattice.principal.len()
    );
    Ok(Output {
        passed: model,
        json: json!({
            "algebra": alg.name(),
            "is_al_monoid": model,
            "ideals": rows,
            "radical": labels(alg, radical.members),
            "radical_note": radical.note,
            "distant_pairs": pairs,
            "directly_indecomposable": distant.is_directly_indecomposable,
            "join_formula_agrees": lattice.join_formula_agrees,
            "algebraic": lattice.algebraic,
            "principal": lattice.principal,
        }),
        text,
    })
}

fn congruences(alg: &FiniteAlgebra) -> Result<Output> {
    let mut text = String::new();
    let model = note_model(alg, &mut text);
    let all = enumerate_congruences(alg)?;
    let _ = writeln!(text, "congruences of {}: {}", alg.name(), all.len());
    let mut rows = Vec::new();
    for t in &all {
        let classes: Vec<String> = t.classes().iter().map(|&c| set(alg, c)).collect();
        let zero_class = ideal_from_congruence(alg, t)?;
        let _ = writeln!(text, "  {}   [0] = {}", classes.join(" "), set(alg, zero_class));
        rows.push(json!({
            "classes": t.classes().iter().map(|&c| labels(alg, c)).collect::<Vec<_>>(),
            "zero_class": labels(alg, zero_class),
            "check": is_congruence(alg, t),
        }));
    }
    let b = bijection_check(alg)?;
    let _ = writeln!(
        text,
        "ideals {} / congruences {}; ideal -> congruence -> ideal {}, congruence -> ideal -> congruence {}",
        b.ideals,
        b.congruences,
        pass(b.ideal_round_trip),
        pass(b.congruence_round_trip)
    );
    for f in &b.failures {
        let _ = writeln!(text, "  {f}");
    }
    Ok(Output {
        passed: model && b.holds,
        json: json!({ "algebra": alg.name(), "congruences": rows, "bijection": b }),
        text,
    })
}

fn quotient_cmd(alg: &FiniteAlgebra, ideal: &str, output: Option<&Path>) -> Result<Output> {
    let i = subset(alg, ideal)?;
    if let Err(v) = is_ideal(alg, i) {
        bail!("{} is not an ideal: {}", set(alg, i), v.describe(alg));
    }
    let q = quotient(alg, i)?;
    let alm = to_alm(&q.algebra);
    let projection = map(alg, &q.algebra, &q.projection);
    let text = match output {
        Some(path) => {
            write_file(path, &alm)?;
            format!("wrote {} ({} classes)\nprojection: {projection}\n", path.display(), q.algebra.n())
        }
        None => alm.clone(),
    };
    Ok(Output {
        passed: true,
        json: json!({ "quotient": alm, "projection": q.projection.iter().map(|&c| q.algebra.label(c)).collect::<Vec<_>>() }),
        text,
    })
}

fn homs(a: &FiniteAlgebra, b: &FiniteAlgebra, count_only: bool) -> Result<Output> {
    let all = enumerate_homomorphisms(a, b);
    let mut text = format!("homomorphisms {} -> {}: {}\n", a.name(), b.name(), all.len());
    if !count_only {
        for m in &all {
            let f = almonoid::morphism::is_homomorphism(a, b, m);
            let kind = if f.is_isomorphism {
                " iso"
            } else if f.is_epimorphism {
                " epi"
            } else if f.is_monomorphism {
                " mono"
            } else {
                ""
            };
            let _ = writeln!(text, "  {}{kind}", map(a, b, m));
        }
    }
    let maps: Vec<Vec<&str>> = all.iter().map(|m| m.iter().map(|&y| b.label(y)).collect()).collect();
    Ok(Output {
        passed: true,
        json: json!({ "source": a.name(), "target": b.name(), "count": all.len(), "maps": maps }),
        text,
    })
}

fn iso(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<Output> {
    let found = find_isomorphism(a, b);
    let text = match &found {
        Some(m) => format!("isomorphic: {}\n", map(a, b, m)),
        None => format!("{} and {} are not isomorphic\n", a.name(), b.name()),
    };
    Ok(Output {
        passed: found.is_some(),
        json: json!({
            "isomorphic": found.is_some(),
            "map": found.as_ref().map(|m| m.iter().map(|&y| b.label(y)).collect::<Vec<_>>()),
        }),
        text,
    })
}

fn isotheorems(alg: &FiniteAlgebra) -> Result<Output> {
    let mut text = String::new();
    let mut passed = note_model(alg, &mut text);
    let ideals = classified_ideals(alg)?;
    let mut first = Vec::new();
    let _ = writeln!(text, "A/ker f = Im f, for the projection onto each quotient:");
    for i in &ideals {
        let q = quotient(alg, i.members)?;
        let f = Homomorphism::new(alg.clone(), q.algebra, q.projection)?;
        let r = first_isomorphism_theorem(&f)?;
        passed &= r.holds;
        let _ = writeln!(text, "  ker = {:<20} {}", set(alg, i.members), pass(r.holds));
        first.push(json!({ "kernel": labels(alg, i.members), "holds": r.holds }));
    }
    let mut subalgebras: Vec<Subset> = Vec::new();
    for x in alg.elements() {
        for y in x..alg.n() {
            let s = subalgebra_closure(alg, Subset::singleton(x).with(y));
            if !subalgebras.contains(&s) {
                subalgebras.push(s);
            }
        }
    }
    subalgebras.sort();
    let mut second = Vec::new();
    let _ = writeln!(text, "B*N/N = B/(B^N), for subalgebras generated by two elements:");
    for &b in &subalgebras {
        for n in &ideals {
            let r = second_isomorphism_theorem(alg, b, n.members)?;
            passed &= r.holds;
            let _ = write!(text, "  B = {:<20} N = {:<20} {}", set(alg, b), set(alg, n.members), pass(r.holds));
            if let Some(note) = &r.note {
                let _ = write!(text, "  ({note})");
            }
            text.push('\n');
            second.push(json!({
                "b": labels(alg, b),
                "n": labels(alg, n.members),
                "holds": r.holds,
                "note": r.note,
            }));
        }
    }
    Ok(Output {
        passed,
        json: json!({ "algebra": alg.name(), "first": first, "second": second }),
        text,
    })
}

fn product(a: &FiniteAlgebra, b: &FiniteAlgebra, output: Option<&Path>, bound: usize) -> Result<Output> {
    let p = direct_product_bounded(&[a.clone(), b.clone()], bound)?;
    let report = check_al_monoid(&p.algebra);
    let alm = to_alm(&p.algebra);
    let mut text = String::new();
    if let Some(path) = output {
        write_file(path, &alm)?;
        let _ = writeln!(text, "wrote {}", path.display());
    } else {
        text.push_str(&alm);
    }
    let _ = writeln!(text, "# {} elements, is_al_monoid: {}", p.algebra.n(), report.verdicts.is_al_monoid);
    for r in report.failures() {
        let _ = writeln!(text, "# {}", axiom_failure(r.axiom_id, r.witness.as_deref().unwrap_or_default()));
    }
    Ok(Output {
        passed: report.verdicts.is_al_monoid,
        json: json!({ "product": alm, "order": p.algebra.n(), "verdicts": report.verdicts }),
        text,
    })
}

fn decompose(alg: &FiniteAlgebra) -> Result<Output> {
    let mut text = String::new();
    let model = note_model(alg, &mut text);
    let ideals = classified_ideals(alg)?;
    let dp = distant_pairs_of(alg, &ideals);
    let reports = decompose_distant(alg)?;
    let mut rows = Vec::new();
    for d in &reports {
        let _ = write!(text, "A = A/{} x A/{}: {}", set(alg, d.i), set(alg, d.j), pass(d.holds));
        if let Some(m) = &d.isomorphism {
            let qi = quotient(alg, d.i)?.algebra;
            let qj = quotient(alg, d.j)?.algebra;
            let prod = almonoid::product::direct_product(&[qi, qj])?.algebra;
            let _ = write!(text, "  via {}", map(alg, &prod, m));
        }
        text.push('\n');
        rows.push(json!({
            "i": labels(alg, d.i),
            "j": labels(alg, d.j),
            "proper": d.proper,
            "holds": d.holds,
            "isomorphism": d.isomorphism,
        }));
    }
    let _ = writeln!(text, "directly indecomposable: {}", yes(dp.is_directly_indecomposable));
    Ok(Output {
        passed: model && reports.iter().all(|d| d.holds),
        json: json!({
            "algebra": alg.name(),
            "decompositions": rows,
            "directly_indecomposable": dp.is_directly_indecomposable,
        }),
        text,
    })
}

fn subdirect(alg: &FiniteAlgebra) -> Result<Output> {
    let mut text = String::new();
    let model = note_model(alg, &mut text);
    let r = subdirect_representation(alg)?;
    match &r.family {
        Some(f) => {
            let _ = writeln!(
                text,
                "prime family: {}",
                if f.is_empty() {
                    "(empty)".to_string()
                } else {
                    f.iter().map(|&p| set(alg, p)).collect::<Vec<_>>().join(" ")
                }
            );
            for x in alg.elements() {
                let _ = writeln!(text, "  {} -> {:?}", alg.label(x), r.tuples[x]);
            }
            let _ = writeln!(
                text,
                "injective {}, projections onto {}, projections homomorphic {}, chain factors {}",
                pass(r.injective),
                pass(r.projections_onto),
                pass(r.projections_homomorphic),
                pass(r.factors_are_chains)
            );
        }
        None => {
            let _ = writeln!(text, "no family of prime ideals meets in {{0}}");
        }
    }
    Ok(Output {
        passed: model && r.holds(),
        json: json!({
            "algebra": alg.name(),
            "family": r.family.as_ref().map(|f| f.iter().map(|&p| labels(alg, p)).collect::<Vec<_>>()),
            "injective": r.injective,
            "projections_onto": r.projections_onto,
            "projections_homomorphic": r.projections_homomorphic,
            "factors_are_chains": r.factors_are_chains,
        }),
        text,
    })
}

fn representable(alg: &FiniteAlgebra) -> Result<Output> {
    let mut text = String::new();
    let model = note_model(alg, &mut text);
    let r = representability_check(alg)?;
    let _ = writeln!(text, "R1 semiregular with contractions: {}", r.r1);
    let _ = writeln!(text, "R2 primes meet in {{0}}:           {}", r.r2);
    let _ = writeln!(text, "R3 subdirect product of chains:   {}", r.r3);
    let _ = writeln!(text, "M2 maximals meet in {{0}}, simple chain quotients: {}", r.m2);
    let _ = writeln!(text, "R1, R2, R3 agree: {}", yes(r.agree));
    let _ = writeln!(text, "note: {}", r.note);
    Ok(Output {
        passed: model && r.agree,
        json: json!({ "algebra": alg.name(), "report": r }),
        text,
    })
}

fn spectrum_cmd(alg: &FiniteAlgebra, chosen: Option<&str>) -> Result<Output> {
    let mut text = String::new();
    let mut passed = note_model(alg, &mut text);
    let spec = spectrum(alg)?;
    let prime = |p: usize| set(alg, spec.primes[p]);
    let primes_of = |s: Subset| format!("{{{}}}", s.iter().map(prime).collect::<Vec<_>>().join(", "));
    let _ = writeln!(text, "primes: {}", spec.primes.len());
    for (k, &p) in spec.primes.iter().enumerate() {
        let _ = writeln!(text, "  P{k} = {}", set(alg, p));
    }
    for a in alg.elements() {
        let _ = writeln!(text, "  S({}) = {}", alg.label(a), primes_of(spec.basic_opens[a]));
    }
    let _ = writeln!(text, "open sets: {}", spec.opens.len());

    let sep = separation_on(alg, &spec);
    passed &= sep.holds;
    for w in &sep.witnesses {
        let _ = writeln!(
            text,
            "  separate {} | {}: u = {}, v = {}, u^v = {}: {}",
            prime(w.p),
            prime(w.q),
            alg.label(w.u),
            alg.label(w.v),
            alg.label(alg.meet(w.u, w.v)),
            pass(w.ok())
        );
    }
    let mm = minimal_maximal_primes(alg)?;
    passed &= mm.holds();
    let _ = writeln!(text, "minimal primes: {}  T2 {}", primes_of(mm.minimal), pass(mm.minimal_t2_failure.is_none()));
    let _ = writeln!(text, "maximal primes: {}  T2 {}", primes_of(mm.maximal), pass(mm.maximal_t2_failure.is_none()));
    let polars_ok = mm.polars.iter().all(|c| c.polar_is_ideal && c.disjoint && c.covers && c.closed);
    let _ = writeln!(text, "polar complements on minimal primes: {}", pass(polars_ok));
    let _ = writeln!(
        text,
        "element generating A: {}",
        mm.unit.map_or("none".to_string(), |b| alg.label(b).to_string())
    );

    let mut values_json = Value::Null;
    if let Some(label) = chosen {
        let a = element(alg, label)?;
        let ideals: Vec<Subset> = classified_ideals(alg)?.into_iter().map(|i| i.members).collect();
        let v = values_on(alg, &spec, &ideals, a);
        passed &= v.holds();
        let _ = writeln!(text, "values of {}: {}", alg.label(a), v.values.iter().map(|&x| set(alg, x)).collect::<Vec<_>>().join(" "));
        for &(p, val) in &v.mu {
            let _ = writeln!(
                text,
                "  mu({}) = {}",
                prime(p),
                val.map_or("undefined".to_string(), |k| set(alg, v.values[k]))
            );
        }
        let _ = writeln!(text, "  unique {}, continuous {}", pass(v.uniqueness_failures.is_empty()), pass(v.continuous));
        values_json = json!({
            "element": alg.label(a),
            "values": v.values.iter().map(|&x| labels(alg, x)).collect::<Vec<_>>(),
            "mu": v.mu.iter().map(|&(p, val)| json!([labels(alg, spec.primes[p]), val.map(|k| labels(alg, v.values[k]))])).collect::<Vec<_>>(),
            "unique": v.uniqueness_failures.is_empty(),
            "continuous": v.continuous,
        });
    }
    Ok(Output {
        passed,
        json: json!({
            "algebra": alg.name(),
            "primes": spec.primes.iter().map(|&p| labels(alg, p)).collect::<Vec<_>>(),
            "basic_opens": alg
                .elements()
                .map(|a| (alg.label(a).to_string(), json!(spec.basic_opens[a].to_vec())))
                .collect::<serde_json::Map<_, _>>(),
            "open_count": spec.opens.len(),
            "separation": sep,
            "minimal": mm.minimal.to_vec(),
            "maximal": mm.maximal.to_vec(),
            "minimal_t2": mm.minimal_t2_failure.is_none(),
            "maximal_t2": mm.maximal_t2_failure.is_none(),
            "polars_ok": polars_ok,
            "unit": mm.unit.map(|b| alg.label(b).to_string()),
            "values": values_json,
        }),
        text,
    })
}

fn search(order: usize, count_only: bool, emit: Option<&Path>, bound: usize) -> Result<Output> {
    let models = enumerate_models_bounded(order, bound)?;
    let mut text = format!("AL-monoids of order {order}: {}\n", models.len());
    let alms: Vec<String> = models.iter().map(to_alm).collect();
    if let Some(dir) = emit {
        for (m, alm) in models.iter().zip(&alms) {
            write_file(&dir.join(format!("{}.alm", m.name())), alm)?;
        }
        let _ = writeln!(text, "wrote {} files to {}", models.len(), dir.display());
    }
    if !count_only {
        for alm in &alms {
            text.push('\n');
            text.push_str(alm);
        }
    }
    Ok(Output {
        passed: true,
        json: json!({
            "order": order,
            "count": models.len(),
            "models": if count_only { Value::Null } else { json!(alms) },
        }),
        text,
    })
}

fn falsify(order: usize, property: &str, emit: Option<&Path>, bound: usize) -> Result<Output> {
    let spec = SearchSpec { max_order: order, properties: vec![property.to_string()], bound };
    let verdict = counterexample_search(&spec)?;
    let searched: Vec<String> = verdict.searched.iter().map(|(n, c)| format!("{n}:{c}")).collect();
    let mut text = String::new();
    match &verdict.found {
        None => {
            let _ = writeln!(text, "none found up to order {order} (models per order {})", searched.join(" "));
        }
        Some(c) => {
            let _ = writeln!(
                text,
                "counterexample: {} (order {}) violates {}{}",
                c.model_name,
                c.order,
                c.property,
                c.witness.as_ref().map(|w| format!(": {w}")).unwrap_or_default()
            );
            let alm = to_alm(&c.model);
            if let Some(dir) = emit {
                let path = dir.join(format!("{}-{}.alm", c.property, c.model_name));
                write_file(&path, &alm)?;
                let _ = writeln!(text, "wrote {}", path.display());
            }
            text.push_str(&alm);
        }
    }
    Ok(Output {
        passed: verdict.found.is_none(),
        json: json!({
            "property": property,
            "found": verdict.found.as_ref().map(|c| json!({
                "model": to_alm(&c.model),
                "name": c.model_name,
                "order": c.order,
                "witness": c.witness,
            })),
            "searched": verdict.searched,
        }),
        text,
    })
}

fn verify_one(alg: &FiniteAlgebra, text: &mut String) -> Result<(bool, Value)> {
    let records = registry::run_all(alg)?;
    let mut ok = is_al_monoid(alg);
    for r in &records {
        let status = match (r.holds, r.informational) {
            (true, _) => "ok",
            (false, true) => "info",
            (false, false) => "FAIL",
        };
        ok &= r.holds || r.informational;
        let _ = write!(text, "  {:<20} {:<5} {}", r.id, status, r.statement);
        if let Some(d) = r.detail.as_ref().filter(|_| !r.holds) {
            let _ = write!(text, "\n      {d}");
        }
        text.push('\n');
    }
    Ok((ok, json!({ "algebra": alg.name(), "passed": ok, "checks": records })))
}

fn verify(args: &VerifyArgs, bound: usize) -> Result<Output> {
    let mut text = String::new();
    let models = match (&args.file, args.order) {
        (Some(f), None) => vec![load(f)?],
        (None, Some(n)) => {
            let mut all = Vec::new();
            for k in 1..=n {
                all.extend(enumerate_models_bounded(k, bound)?);
            }
            all
        }
        _ => bail!("give either a file or --order"),
    };
    let mut passed = true;
    let mut results = Vec::new();
    for m in &models {
        let model = is_al_monoid(m);
        let _ = writeln!(text, "{} ({} elements){}", m.name(), m.n(), if model { "" } else { ": not an AL-monoid" });
        let (ok, j) = verify_one(m, &mut text)?;
        if !ok {
            if let Some(dir) = &args.emit {
                write_file(&dir.join(format!("{}.alm", m.name())), &to_alm(m))?;
            }
        }
        passed &= ok;
        results.push(j);
    }
    let _ = writeln!(
        text,
        "{} of {} algebras passed every counted check",
        results.iter().filter(|r| r["passed"] == json!(true)).count(),
        models.len()
    );
    Ok(Output {
        passed,
        json: json!({ "passed": passed, "results": results }),
        text,
    })
}
