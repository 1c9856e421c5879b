use std::fmt::{self, Write};

use clap::Subcommand;
use serde_json::{json, Map, Value};

use lpa_core::ideals::{self, IdealRep};
use lpa_core::io::{emit_ideal, parse_ideal};
use lpa_core::theorems::{format_family, registry, Analysis, CheckOutcome, IdealCount, TheoremCheck};
use lpa_core::{AdmissiblePair, Check, FieldTag, Graph};

use crate::dot;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Internal(String),
    /// Output was produced but a check failed.
    CheckFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) | CliError::CheckFailed(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Internal(m) => f.write_str(m),
            CliError::CheckFailed(m) => write!(f, "check failed: {m}"),
        }
    }
}

impl From<lpa_core::Error> for CliError {
    fn from(e: lpa_core::Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

#[derive(Subcommand, Debug, Clone)]
pub enum IdealOp {
    /// Graded part `gr(I)`.
    Gr,
    /// `I^n`.
    Power { n: u32 },
    /// `⋂ₙ Iⁿ`.
    Limit,
    /// Primes over `I` and their intersection.
    PrimesOver,
    /// Irredundant intersection of primes equal to `I`.
    Decompose,
    /// Graded-prime factorization of a graded `I`.
    Factor,
    /// Whether `⋂ₙ Iⁿ = 0`.
    Krull,
}

fn pair_json(g: &Graph, p: &AdmissiblePair) -> Value {
    json!({ "H": g.set_names(p.h), "S": g.set_names(p.s) })
}

fn run_checks(a: &Analysis) -> Result<Vec<(&'static str, CheckOutcome)>, CliError> {
    registry()
        .iter()
        .map(|c| Ok((c.name(), c.run(a)?)))
        .collect()
}

/// The report, or `CheckFailed` carrying it when some check fails.
fn finish(out: String, failed: &[&str]) -> Result<String, CliError> {
    if failed.is_empty() {
        Ok(out)
    } else {
        print!("{out}");
        Err(CliError::CheckFailed(failed.join(", ")))
    }
}

pub fn analyze(name: &str, g: Graph, field: FieldTag, as_json: bool) -> Result<String, CliError> {
    let a = Analysis::new(g, field)?;
    let g = a.g();
    let cond_l = g.condition_l();
    let cond_k = g.condition_k();
    let primes = a.graded_primes();
    let checks = run_checks(&a)?;
    let failed: Vec<&str> = checks.iter().filter(|(_, o)| !o.passed).map(|(n, _)| *n).collect();
    let count = a.count_ideals()?;
    let all_prime = a.everything_prime_check()?.all_prime;

    if as_json {
        let mut check_map = Map::new();
        for (n, o) in &checks {
            check_map.insert(n.to_string(), json!({ "passed": o.passed, "details": o.details }));
        }
        let report = json!({
            "graph": name,
            "field": field.to_string(),
            "vertices": g.vertex_count(),
            "conditionL": cond_l.holds(),
            "conditionK": cond_k.holds(),
            "latticeSize": a.lattice.len(),
            "ideals": match count { IdealCount::Finite(n) => json!(n), IdealCount::Infinite(..) => json!("infinite") },
            "allPrime": all_prime,
            "primes": primes.iter().map(|p| pair_json(g, p)).collect::<Vec<_>>(),
            "checks": check_map,
        });
        let out = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
        return finish(out, &failed);
    }

    let mut out = String::new();
    writeln!(out, "graph: {name} ({} vertices, field {field})", g.vertex_count()).unwrap();
    match &cond_l {
        Check::Holds => writeln!(out, "Condition(L): true").unwrap(),
        Check::Fails(c) => writeln!(out, "Condition(L): false (exitless cycle {})", c.display(g)).unwrap(),
    }
    match cond_k {
        Check::Holds => writeln!(out, "Condition(K): true").unwrap(),
        Check::Fails(v) => {
            writeln!(out, "Condition(K): false ({} is the base of exactly one closed path)", g.name(v)).unwrap()
        }
    }
    match count {
        IdealCount::Finite(n) => writeln!(out, "ideals: {n}").unwrap(),
        IdealCount::Infinite(p, c) => {
            writeln!(out, "ideals: infinite (⟨g(c)⟩ for c = {} over {})", c.display(g), p.display(g)).unwrap()
        }
    }
    writeln!(out, "lattice size: {}", a.lattice.len()).unwrap();
    writeln!(out, "all prime: {all_prime}").unwrap();
    writeln!(out, "primes: {}", primes.len()).unwrap();
    for p in &primes {
        writeln!(out, "  I{}", p.display(g)).unwrap();
    }
    writeln!(out, "checks:").unwrap();
    for (n, o) in &checks {
        writeln!(out, "  {n}: {}", if o.passed { "pass" } else { "FAIL" }).unwrap();
    }
    finish(out, &failed)
}

pub fn lattice(name: &str, g: Graph, field: FieldTag, as_dot: bool) -> Result<String, CliError> {
    let a = Analysis::new(g, field)?;
    let g = a.g();
    let lat = &a.lattice;
    let mut prime = Vec::with_capacity(lat.len());
    let mut maximal = Vec::with_capacity(lat.len());
    for (i, p) in lat.elements().iter().enumerate() {
        let proper = i != lat.top();
        prime.push(proper && a.is_graded_prime(p)?);
        maximal.push(proper && ideals::is_maximal(g, lat, &IdealRep::graded(*p))?);
    }
    if as_dot {
        return Ok(dot::hasse(name, g, lat, &prime, &maximal));
    }
    let mut out = String::new();
    writeln!(out, "{} admissible pairs", lat.len()).unwrap();
    for (i, p) in lat.elements().iter().enumerate() {
        let covers: Vec<String> = lat.upper_covers(i).iter().map(|j| format!("#{j}")).collect();
        let mut flags = Vec::new();
        if prime[i] {
            flags.push("prime");
        }
        if maximal[i] {
            flags.push("maximal");
        }
        writeln!(
            out,
            "#{i} {} [{}] covered by {}",
            p.display(g),
            flags.join(","),
            if covers.is_empty() { "-".to_string() } else { covers.join(" ") }
        )
        .unwrap();
    }
    Ok(out)
}

fn ideal_lines(out: &mut String, label: &str, g: &Graph, i: &IdealRep) {
    writeln!(out, "{label}: {}", i.display(g)).unwrap();
    writeln!(out, "{label} literal: {}", emit_ideal(g, i)).unwrap();
}

pub fn ideal(g: Graph, field: FieldTag, literal: &str, op: &IdealOp) -> Result<String, CliError> {
    let a = Analysis::new(g, field)?;
    let g = a.g();
    let i = parse_ideal(g, field, literal)?;
    let mut out = String::new();
    ideal_lines(&mut out, "input", g, &i);
    match op {
        IdealOp::Gr => ideal_lines(&mut out, "graded part", g, &IdealRep::graded(i.graded_part())),
        IdealOp::Power { n } => ideal_lines(&mut out, &format!("power {n}"), g, &ideals::power(g, &i, *n)?),
        IdealOp::Limit => ideal_lines(&mut out, "limit", g, &ideals::limit_power(g, &i)),
        IdealOp::PrimesOver => {
            let primes = a.primes_containing(&i)?;
            writeln!(out, "graded primes: {}", primes.graded.len()).unwrap();
            for p in &primes.graded {
                writeln!(out, "  I{}", p.display(g)).unwrap();
            }
            writeln!(out, "non-graded primes: {}", primes.nongraded.len()).unwrap();
            for p in &primes.nongraded {
                writeln!(out, "  {}", p.display(g)).unwrap();
            }
            for (p, c) in &primes.families {
                writeln!(out, "family: I{} + ⟨f at {}⟩ for every irreducible f", p.display(g), c.display(g)).unwrap();
            }
            let r = a.intersection_of_primes(&i)?;
            writeln!(
                out,
                "intersection: {}; equals input: {}",
                r.result.display(g),
                if r.equals_input { "yes" } else { "no" }
            )
            .unwrap();
            writeln!(out, "intersection literal: {}", emit_ideal(g, &r.result)).unwrap();
        }
        IdealOp::Decompose => match a.irredundant_prime_intersection(&i)? {
            Some(family) => {
                writeln!(out, "decomposition: {}", format_family(g, &family)).unwrap();
                for p in &family {
                    writeln!(out, "  {}", emit_ideal(g, p)).unwrap();
                }
            }
            None => writeln!(out, "decomposition: none").unwrap(),
        },
        IdealOp::Factor => {
            let factors = a.factor_graded(&i)?;
            let shown: Vec<String> = factors.iter().map(|p| format!("I{}", p.display(g))).collect();
            writeln!(out, "factors: {{{}}}", shown.join(", ")).unwrap();
        }
        IdealOp::Krull => writeln!(out, "krull: {}", a.krull_check(&i)?).unwrap(),
    }
    Ok(out)
}

pub fn list_checks() -> String {
    let mut out = String::new();
    for c in registry() {
        writeln!(out, "{:<24} {}", c.name(), c.summary()).unwrap();
    }
    out
}

pub fn check(name: &str, g: Graph, field: FieldTag) -> Result<String, CliError> {
    let check: Box<dyn TheoremCheck> = lpa_core::theorems::find_check(name)
        .ok_or_else(|| CliError::Input(format!("unknown check `{name}` (see `lpa check --list`)")))?;
    let a = Analysis::new(g, field)?;
    let o = check.run(&a)?;
    let out = format!(
        "{}: {}\n{}\n",
        check.name(),
        if o.passed { "pass" } else { "FAIL" },
        serde_json::to_string_pretty(&o.details).expect("details serialize")
    );
    let failed = if o.passed { vec![] } else { vec![name] };
    finish(out, &failed)
}
