//! One function per subcommand, each producing the parameter echo, the
//! JSON payload, and the prose rendering. Diagnostics (warnings, notes)
//! go straight to stderr so stdout stays machine-readable.

use std::fmt::Write as _;

use monoid_core::omission::omission_verdict;
use monoid_core::{
    ArithmeticalMonoid, ComplexOptions, LengthSet, NumericalMonoid, Result, DEFAULT_ORACLE_BUDGET,
};
use serde_json::{json, Map, Value};

use crate::args::{ArithTriple, Command, MonoidSpec, What};
use crate::drivers;

pub struct Outcome {
    pub name: &'static str,
    pub parameters: Map<String, Value>,
    pub result: Value,
    pub human: String,
}

pub fn run(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Frobenius { spec } => frobenius(spec),
        Command::Lenset { spec, n } => lenset(spec, *n),
        Command::Lentable { spec, bound } => lentable(spec, *bound),
        Command::Contains { spec, n } => contains(spec, *n),
        Command::Coords { arith, n } => coords(arith.arith, *n),
        Command::Factorize { spec, n } => factorize(spec, *n),
        Command::Apery { spec, m } => apery(spec, *m),
        Command::OmitCheck { arith, omit, what } => omit_check(arith.arith, &omit.0, *what),
        Command::Complex {
            arith,
            no_shortcut,
            fast,
        } => complex(arith.arith, !no_shortcut, *fast),
        Command::ScanTightness { w, d } => scan_tightness(*w, *d),
        Command::Survey { a, d, w } => survey(*a, *d, *w),
    }
}

/// The monoid behind a `--gens`/`--arith` spec, in whichever form came in.
enum Monoid {
    List(NumericalMonoid),
    Arith(ArithmeticalMonoid),
}

impl Monoid {
    fn resolve(spec: &MonoidSpec) -> Result<Self> {
        match (&spec.gens, &spec.arith) {
            (Some(g), None) => Ok(Monoid::List(NumericalMonoid::new(&g.0)?)),
            (None, Some(t)) => Ok(Monoid::Arith(arith(*t)?)),
            _ => unreachable!("clap group guarantees exactly one form"),
        }
    }

    fn expand(&self) -> NumericalMonoid {
        match self {
            Monoid::List(s) => s.clone(),
            Monoid::Arith(m) => m.expand(),
        }
    }
}

fn arith(t: ArithTriple) -> Result<ArithmeticalMonoid> {
    ArithmeticalMonoid::new(t.a, t.d, t.w)
}

fn spec_params(spec: &MonoidSpec) -> Map<String, Value> {
    let mut p = Map::new();
    match (&spec.gens, &spec.arith) {
        (Some(g), None) => {
            p.insert("gens".into(), json!(g.0));
        }
        (None, Some(t)) => {
            p.extend(arith_params(*t));
        }
        _ => unreachable!("clap group guarantees exactly one form"),
    }
    p
}

fn arith_params(t: ArithTriple) -> Map<String, Value> {
    let mut p = Map::new();
    p.insert("a".into(), json!(t.a));
    p.insert("d".into(), json!(t.d));
    p.insert("w".into(), json!(t.w));
    p
}

fn braces<T: std::fmt::Display>(items: &[T]) -> String {
    let body: Vec<String> = items.iter().map(T::to_string).collect();
    format!("{{{}}}", body.join(", "))
}

fn lenset_json(ls: &Option<LengthSet>) -> Value {
    match ls {
        Some(ls) => json!(ls.to_vec()),
        None => Value::Null,
    }
}

fn frobenius(spec: &MonoidSpec) -> Result<Outcome> {
    let m = Monoid::resolve(spec)?;
    let f = match &m {
        Monoid::List(s) => s.frobenius(),
        Monoid::Arith(m) => m.frobenius(),
    };
    Ok(Outcome {
        name: "frobenius",
        parameters: spec_params(spec),
        result: json!(f),
        human: format!("F = {f}"),
    })
}

fn lenset(spec: &MonoidSpec, n: u64) -> Result<Outcome> {
    let m = Monoid::resolve(spec)?;
    let ls = match &m {
        Monoid::List(s) => s.length_set(n),
        Monoid::Arith(m) => m.length_set(n as i64),
    };
    let human = match &ls {
        Some(ls) => format!("L({n}) = {}", braces(&ls.to_vec())),
        None => format!("{n} is a gap"),
    };
    let mut parameters = spec_params(spec);
    parameters.insert("n".into(), json!(n));
    Ok(Outcome {
        name: "lenset",
        parameters,
        result: lenset_json(&ls),
        human,
    })
}

fn lentable(spec: &MonoidSpec, bound: u64) -> Result<Outcome> {
    let m = Monoid::resolve(spec)?;
    let table = m.expand().length_table(bound);
    let rows: Vec<Value> = (0..=bound)
        .map(|n| lenset_json(&table.row(n).cloned()))
        .collect();
    let mut human = String::new();
    for (n, row) in table.iter_rows() {
        match row {
            Some(ls) => writeln!(human, "{n}: {}", braces(&ls.to_vec())).unwrap(),
            None => writeln!(human, "{n}: gap").unwrap(),
        }
    }
    human.pop();
    let mut parameters = spec_params(spec);
    parameters.insert("bound".into(), json!(bound));
    Ok(Outcome {
        name: "lentable",
        parameters,
        result: json!(rows),
        human,
    })
}

fn contains(spec: &MonoidSpec, n: u64) -> Result<Outcome> {
    let m = Monoid::resolve(spec)?;
    let inside = match &m {
        Monoid::List(s) => s.contains(n),
        Monoid::Arith(m) => m.contains(n as i64),
    };
    let mut parameters = spec_params(spec);
    parameters.insert("n".into(), json!(n));
    Ok(Outcome {
        name: "contains",
        parameters,
        result: json!(inside),
        human: format!("{n} is {}a member", if inside { "" } else { "not " }),
    })
}

fn coords(t: ArithTriple, n: i64) -> Result<Outcome> {
    let m = arith(t)?;
    let c = m.coords(n);
    let mut parameters = arith_params(t);
    parameters.insert("n".into(), json!(n));
    Ok(Outcome {
        name: "coords",
        parameters,
        result: json!({ "c1": c.c1, "c2": c.c2 }),
        human: format!(
            "{n} = {}*{} + {}*{}  (c1 = {}, c2 = {})",
            c.c1, t.a, c.c2, t.d, c.c1, c.c2
        ),
    })
}

fn oracle_budget() -> u64 {
    match std::env::var("MONOID_ORACLE_BUDGET") {
        Ok(s) => s.parse().unwrap_or_else(|_| {
            eprintln!("note: ignoring unparsable MONOID_ORACLE_BUDGET {s:?}");
            DEFAULT_ORACLE_BUDGET
        }),
        Err(_) => DEFAULT_ORACLE_BUDGET,
    }
}

fn factorize(spec: &MonoidSpec, n: u64) -> Result<Outcome> {
    let s = Monoid::resolve(spec)?.expand();
    let budget = oracle_budget();
    let mut vectors: Vec<Vec<u64>> = s
        .factorizations_budgeted(n, budget)?
        .into_iter()
        .map(|f| f.multiplicities)
        .collect();
    vectors.sort();
    let mut human = format!(
        "generators: {:?}\n{} factorization{} of {n}",
        s.generators(),
        vectors.len(),
        if vectors.len() == 1 { "" } else { "s" },
    );
    for v in &vectors {
        let length: u64 = v.iter().sum();
        write!(human, "\n{v:?} (length {length})").unwrap();
    }
    let mut parameters = spec_params(spec);
    parameters.insert("n".into(), json!(n));
    parameters.insert("budget".into(), json!(budget));
    Ok(Outcome {
        name: "factorize",
        parameters,
        result: json!({ "generators": s.generators(), "factorizations": vectors }),
        human,
    })
}

fn apery(spec: &MonoidSpec, m: u64) -> Result<Outcome> {
    let s = Monoid::resolve(spec)?.expand();
    let set = s.apery_set(m)?;
    let mut parameters = spec_params(spec);
    parameters.insert("m".into(), json!(m));
    Ok(Outcome {
        name: "apery",
        parameters,
        result: json!(set),
        human: format!("Apery mod {m}: {set:?}"),
    })
}

fn omit_check(t: ArithTriple, omit: &[u64], what: What) -> Result<Outcome> {
    let m = arith(t)?;
    let (check_lengths, check_frobenius) = (what != What::Frobenius, what != What::Lengths);
    let v = omission_verdict(&m, omit, check_lengths, check_frobenius)?;
    let mut human = String::new();
    match v.lengths_equal {
        Some(eq) => writeln!(human, "lengths_equal: {eq}").unwrap(),
        None => writeln!(human, "lengths_equal: not checked").unwrap(),
    }
    match v.frobenius_equal {
        Some(eq) => writeln!(human, "frobenius_equal: {eq}").unwrap(),
        None => writeln!(human, "frobenius_equal: not checked").unwrap(),
    }
    write!(human, "shortcut: {}", v.shortcut_used.name()).unwrap();
    if let Some(witness) = v.witness {
        write!(human, "\nwitness: {witness}").unwrap();
    }
    let mut parameters = arith_params(t);
    parameters.insert("omit".into(), json!(omit));
    parameters.insert("what".into(), json!(what.name()));
    Ok(Outcome {
        name: "omit-check",
        parameters,
        result: json!({
            "lengths_equal": v.lengths_equal,
            "frobenius_equal": v.frobenius_equal,
            "shortcut_used": v.shortcut_used.name(),
            "witness": v.witness,
        }),
        human,
    })
}

fn violations_json(violations: &[monoid_core::Violation]) -> Value {
    json!(violations
        .iter()
        .map(|v| json!({ "face": v.face, "missing_subset": v.missing_subset }))
        .collect::<Vec<_>>())
}

fn complex(t: ArithTriple, use_shortcut: bool, prune: bool) -> Result<Outcome> {
    let m = arith(t)?;
    let options = ComplexOptions {
        use_shortcut,
        prune_supersets: prune,
    };
    let c = drivers::complex(&m, options)?;
    let violations = c.downward_closure_violations();
    for v in &violations {
        eprintln!(
            "WARNING: downward closure violated for A = ({}, {}, {}): \
             face {} lacks subset {}",
            t.a,
            t.d,
            t.w,
            braces(&v.face),
            braces(&v.missing_subset),
        );
    }
    let family = |faces: &[Vec<u64>]| -> String {
        if faces.is_empty() {
            "(none)".into()
        } else {
            faces
                .iter()
                .map(|f| braces(f))
                .collect::<Vec<_>>()
                .join(" ")
        }
    };
    let human = format!(
        "ground set: {}\nfaces: {} of {} subsets\nmaximal faces: {}\nminimal non-faces: {}\ndownward closed: {}",
        braces(c.ground_set()),
        c.faces().len(),
        1u64 << c.ground_set().len(),
        family(c.maximal_faces()),
        family(c.minimal_nonfaces()),
        c.downward_closed(),
    );
    let mut parameters = arith_params(t);
    parameters.insert("shortcut".into(), json!(use_shortcut));
    parameters.insert("prune".into(), json!(prune));
    Ok(Outcome {
        name: "complex",
        parameters,
        result: json!({
            "ground_set": c.ground_set(),
            "maximal_faces": c.maximal_faces(),
            "minimal_nonfaces": c.minimal_nonfaces(),
            "downward_closed": c.downward_closed(),
            "violations": violations_json(&violations),
        }),
        human,
    })
}

fn scan_tightness(w: crate::args::RangeArg, d: crate::args::RangeArg) -> Result<Outcome> {
    if w.lo < 6 && w.lo <= w.hi {
        eprintln!("note: the tightness experiment is only claimed for w >= 6; smaller w included as requested");
    }
    let rows = drivers::tightness(w.iter(), d.iter())?;
    let mut human = String::new();
    for r in &rows {
        let bad = match r.largest_bad_a {
            Some(a) => a.to_string(),
            None => "none".into(),
        };
        writeln!(
            human,
            "w={} d={}: largest_bad_a = {bad} (scan bound {})",
            r.w, r.d, r.scan_bound
        )
        .unwrap();
    }
    human.pop();
    if human.is_empty() {
        human.push_str("no cells in range");
    }
    let result: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "w": r.w,
                "d": r.d,
                "largest_bad_a": r.largest_bad_a,
                "scan_bound": r.scan_bound,
            })
        })
        .collect();
    let mut parameters = Map::new();
    parameters.insert("w".into(), json!(w.to_string()));
    parameters.insert("d".into(), json!(d.to_string()));
    Ok(Outcome {
        name: "scan-tightness",
        parameters,
        result: json!(result),
        human,
    })
}

fn survey(
    a: crate::args::RangeArg,
    d: crate::args::RangeArg,
    w: crate::args::RangeArg,
) -> Result<Outcome> {
    let rows = drivers::survey(a.iter(), d.iter(), w.iter());
    let mut human = String::new();
    for r in &rows {
        writeln!(
            human,
            "a={} d={} w={}: {} faces, {} maximal, {} minimal non-faces, downward closed: {}",
            r.a,
            r.d,
            r.w,
            r.face_count,
            r.maximal_face_count,
            r.minimal_nonface_count,
            r.downward_closed
        )
        .unwrap();
        if !r.downward_closed {
            for v in &r.violations {
                eprintln!(
                    "WARNING: downward closure violated for A = ({}, {}, {}): \
                     face {} lacks subset {}",
                    r.a,
                    r.d,
                    r.w,
                    braces(&v.face),
                    braces(&v.missing_subset),
                );
            }
        }
    }
    human.pop();
    if human.is_empty() {
        human.push_str("no cells in range");
    }
    let result: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "a": r.a,
                "d": r.d,
                "w": r.w,
                "downward_closed": r.downward_closed,
                "face_count": r.face_count,
                "maximal_face_count": r.maximal_face_count,
                "minimal_nonface_count": r.minimal_nonface_count,
                "violations": violations_json(&r.violations),
            })
        })
        .collect();
    let mut parameters = Map::new();
    parameters.insert("a".into(), json!(a.to_string()));
    parameters.insert("d".into(), json!(d.to_string()));
    parameters.insert("w".into(), json!(w.to_string()));
    Ok(Outcome {
        name: "survey",
        parameters,
        result: json!(result),
        human,
    })
}
