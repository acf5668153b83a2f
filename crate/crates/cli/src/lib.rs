//! Job files, caps and command dispatch for the `hopfchrom` binary.
//!
//! A job is `{"schema": "1", "structure": {...}, "character": ..., "group": [...]}`
//! plus optional `"expected"` values that `verify` compares against.

use std::collections::BTreeMap;
use std::sync::Arc;

use hopfchrom_core::chromatic::{
    coloring_oracle_capped, psi_with, verify_flawless_effective_with, verify_flawless_poly, ClassQSym, OracleCap,
    Options,
};
use hopfchrom_core::complexes::{
    coloring_complex_with, hilb, theta_certificate, verify_m_increasing, verify_psi_equals_hilb_with,
};
use hopfchrom_core::compositions::IntComposition;
use hopfchrom_core::groups::{CharacterTable, PermGroup, DEFAULT_GROUP_CAP};
use hopfchrom_core::json::{PermutationSpec, StructureSpec};
use hopfchrom_core::structures::{balanced_convexity, ConvexityCheck};
use hopfchrom_core::{CharacterSpec, Error as CoreError, HopfStructure};
use serde::Deserialize;
use serde_json::{json, Value};

pub const SCHEMA: &str = "1";
/// Largest ground set for the enumeration commands without `--allow-large`.
pub const DEFAULT_MAX_GROUND: usize = 9;
/// Largest ground set for `verify` without `--allow-large`.
pub const DEFAULT_MAX_GROUND_VERIFY: usize = 8;
/// Overrides the ground-set cap (still subject to `--allow-large`).
pub const CAP_ENV: &str = "HOPFCHROM_MAX_GROUND";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("resource cap: {0}")]
    Cap(String),
    /// The report is still emitted.
    #[error("verification failed")]
    Verification(Value),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Verification(_) => 1,
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
        }
    }
}

/// Attaches the field that produced a core error.
fn at(field: &str) -> impl Fn(CoreError) -> CliError + '_ {
    move |e| match e {
        CoreError::Resource(m) => CliError::Cap(format!("{field}: {m}")),
        other => CliError::Input(format!("{field}: {other}")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Psi,
    Orbital,
    Poly,
    OrbitalPoly,
    Complex,
    Certify,
    Verify,
    Oracle,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Psi => "psi",
            Command::Orbital => "orbital",
            Command::Poly => "poly",
            Command::OrbitalPoly => "orbital-poly",
            Command::Complex => "complex",
            Command::Certify => "certify",
            Command::Verify => "verify",
            Command::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub schema: String,
    #[serde(default)]
    pub description: Option<String>,
    pub structure: StructureSpec,
    pub character: CharacterSpec,
    #[serde(default)]
    pub group: Vec<PermutationSpec>,
    #[serde(default)]
    pub expected: Option<Expected>,
}

/// Reference values for `verify`. Coefficients map compositions to values at
/// named group elements (`"()"`, `"(a c)(b d)"`, ...).
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    /// `"published"` or `"derived"`.
    pub origin: String,
    #[serde(default)]
    pub psi: Option<BTreeMap<String, BTreeMap<String, String>>>,
    #[serde(default)]
    pub orbital: Option<BTreeMap<String, String>>,
    /// Monomial-basis coefficients of the identity polynomial, low degree first.
    #[serde(default)]
    pub identity_polynomial: Option<Vec<String>>,
    /// Coefficients whose expected value is derived rather than printed.
    #[serde(default)]
    pub derived: Vec<String>,
    #[serde(default)]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub workers: usize,
    pub max_ground: Option<usize>,
    pub allow_large: bool,
    pub colors: Option<usize>,
    /// Restrict `certify` to one pair.
    pub pair: Option<(String, String)>,
}

pub struct Instance {
    pub job: Job,
    pub h: HopfStructure,
    pub phi: CharacterSpec,
    pub group: Arc<PermGroup>,
}

pub fn parse_job(text: &str) -> Result<Job, CliError> {
    let job: Job = serde_json::from_str(text).map_err(|e| CliError::Input(format!("job: {e}")))?;
    if job.schema != SCHEMA {
        return Err(CliError::Input(format!("schema: expected \"{SCHEMA}\", found {:?}", job.schema)));
    }
    if let Some(e) = &job.expected {
        if e.origin != "published" && e.origin != "derived" {
            return Err(CliError::Input(format!("expected.origin: {:?} is not \"published\" or \"derived\"", e.origin)));
        }
    }
    Ok(job)
}

pub fn build(job: Job) -> Result<Instance, CliError> {
    let h = job.structure.build().map_err(at("structure"))?;
    let phi = job.character;
    h.check_character(phi).map_err(at("character"))?;
    let ground = h.universe().clone();
    let mut gens = Vec::with_capacity(job.group.len());
    for (k, g) in job.group.iter().enumerate() {
        let p = g.build(&ground).map_err(at(&format!("group[{k}]")))?;
        if !h.automorphism_check(&p).map_err(at(&format!("group[{k}]")))? {
            return Err(CliError::Input(format!("group[{k}]: {p} is not an automorphism of the structure")));
        }
        gens.push(p);
    }
    let group = PermGroup::generate_capped(&ground, gens, DEFAULT_GROUP_CAP).map_err(at("group"))?;
    Ok(Instance { job, h, phi, group })
}

/// The effective ground-set cap for `command`.
pub fn ground_cap(command: Command, opts: &RunOptions) -> Result<usize, CliError> {
    let default = if command == Command::Verify { DEFAULT_MAX_GROUND_VERIFY } else { DEFAULT_MAX_GROUND };
    let env = std::env::var(CAP_ENV).ok();
    let requested = match (opts.max_ground, env) {
        (Some(n), _) => Some(n),
        (None, Some(v)) => Some(v.trim().parse().map_err(|_| CliError::Input(format!("{CAP_ENV}: {v:?} is not a number")))?),
        (None, None) => None,
    };
    match requested {
        None => Ok(default),
        Some(n) if n <= default || opts.allow_large => Ok(n),
        Some(n) => Err(CliError::Input(format!("max-ground: raising the cap to {n} (default {default}) needs --allow-large"))),
    }
}

fn header(command: Command, inst: &Instance) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command.name()));
    m.insert("kind".into(), json!(inst.h.kind().name()));
    m.insert("character".into(), json!(inst.phi.to_string()));
    m.insert("ground".into(), json!(inst.h.universe().labels()));
    m.insert("group_order".into(), json!(inst.group.order()));
    m
}

fn merge(mut m: serde_json::Map<String, Value>, v: Value) -> Value {
    if let Value::Object(o) = v {
        m.extend(o);
    }
    Value::Object(m)
}

/// Runs one command on a job document.
pub fn run(command: Command, text: &str, opts: &RunOptions) -> Result<Value, CliError> {
    let inst = build(parse_job(text)?)?;
    let n = inst.h.size();
    let cap = ground_cap(command, opts)?;
    if n > cap {
        return Err(CliError::Cap(format!("structure has {n} labels; the {} cap is {cap}", command.name())));
    }
    let o = Options::with_workers(opts.workers);
    let (h, phi, g) = (&inst.h, inst.phi, &inst.group);
    let head = header(command, &inst);
    match command {
        Command::Psi => Ok(merge(head, psi_with(h, phi, g, o).map_err(at("psi"))?.to_json())),
        Command::Orbital => Ok(merge(head, psi_with(h, phi, g, o).and_then(|q| q.orbital()).map_err(at("orbital"))?.to_json())),
        Command::Poly => Ok(merge(head, psi_with(h, phi, g, o).map_err(at("poly"))?.principal_specialization().to_json())),
        Command::OrbitalPoly => {
            let p = psi_with(h, phi, g, o).and_then(|q| q.principal_specialization().orbital()).map_err(at("orbital-poly"))?;
            Ok(merge(head, p.to_json()))
        }
        Command::Complex => {
            let x = coloring_complex_with(h, phi, o).map_err(at("complex"))?;
            let mut v = x.to_json();
            v["f_vector"] = x.f_vector_json();
            v["dimension"] = json!(x.dimension());
            Ok(merge(head, v))
        }
        Command::Certify => certify(head, &inst, o, opts),
        Command::Oracle => {
            let k = opts.colors.unwrap_or(n);
            let oracle = coloring_oracle_capped(h, phi, k, OracleCap { max_ground: cap, max_colors: Some(cap.max(n)) })
                .map_err(at("colors"))?;
            let fixed: Vec<(String, usize)> =
                g.classes().iter().map(|c| (c.representative.to_string(), oracle.count_fixed(&c.representative))).collect();
            Ok(merge(head, oracle.to_json(&fixed)))
        }
        Command::Verify => verify(head, &inst, o, opts),
    }
}

fn certify(head: serde_json::Map<String, Value>, inst: &Instance, o: Options, opts: &RunOptions) -> Result<Value, CliError> {
    let x = coloring_complex_with(&inst.h, inst.phi, o).map_err(at("complex"))?;
    let report = match &opts.pair {
        Some((a, b)) => {
            let a: IntComposition = a.parse().map_err(|e: CoreError| CliError::Input(format!("alpha: {e}")))?;
            let b: IntComposition = b.parse().map_err(|e: CoreError| CliError::Input(format!("beta: {e}")))?;
            let c = theta_certificate(&x, &inst.group, &a, &b).map_err(at("pair"))?;
            json!({"passed": c.valid(), "certificates": [c.to_json()]})
        }
        None => {
            let q = hilb(&x, &inst.group).map_err(at("hilb"))?;
            verify_m_increasing(&q, &x, &inst.group).map_err(at("certify"))?.to_json()
        }
    };
    let passed = report["passed"].as_bool() == Some(true);
    let out = merge(head, report);
    if passed {
        Ok(out)
    } else {
        Err(CliError::Verification(out))
    }
}

struct Checks(Vec<Value>);

impl Checks {
    fn push(&mut self, name: &str, passed: bool, detail: Value) {
        self.0.push(json!({"check": name, "passed": passed, "detail": detail}));
    }
    fn passed(&self) -> bool {
        self.0.iter().all(|c| c["passed"] == json!(true))
    }
}

fn verify(head: serde_json::Map<String, Value>, inst: &Instance, o: Options, opts: &RunOptions) -> Result<Value, CliError> {
    let (h, phi, g) = (&inst.h, inst.phi, &inst.group);
    let n = h.size();
    let mut checks = Checks(vec![]);
    let mut notes: Vec<String> = vec![];

    match balanced_convexity(h, phi).map_err(at("character"))? {
        ConvexityCheck::Holds => checks.push("balanced_convexity", true, json!("holds")),
        ConvexityCheck::NotApplicable => {
            checks.push("balanced_convexity", true, json!("not applicable: no restriction/contraction for this kind"))
        }
        ConvexityCheck::Violated(w) => checks.push("balanced_convexity", false, serde_json::to_value(w).unwrap()),
    }
    if !checks.passed() {
        return Err(CliError::Verification(merge(head, json!({"passed": false, "checks": checks.0}))));
    }

    let q = psi_with(h, phi, g, o).map_err(at("psi"))?;

    let k = opts.colors.unwrap_or(n);
    let oracle = coloring_oracle_capped(h, phi, k, OracleCap { max_ground: DEFAULT_MAX_GROUND_VERIFY.max(n), max_colors: Some(k.max(n)) })
        .map_err(at("colors"))?;
    let diff = oracle.compare_with(&q);
    checks.push("oracle", diff.is_empty(), json!({"colors": k, "mismatches": diff}));

    let ph = verify_psi_equals_hilb_with(h, phi, g, o).map_err(at("complex"))?;
    checks.push("psi_equals_hilb", ph.passed(), ph.to_json());

    let x = coloring_complex_with(h, phi, o).map_err(at("complex"))?;
    let m = verify_m_increasing(&q, &x, g).map_err(at("m_increasing"))?;
    let failed: Vec<Value> = m.certificates.iter().filter(|c| !c.valid()).map(|c| c.to_json()).collect();
    checks.push(
        "m_increasing",
        m.passed() && m.methods_agree(),
        json!({
            "certificates": m.certificates.len(),
            "invalid_certificates": failed,
            "character_checks": m.character_checks.len(),
            "character_failures": m.character_checks.iter().filter(|c| !c.holds).collect::<Vec<_>>(),
        }),
    );
    if !g.is_abelian() {
        notes.push("nonabelian group: ≤_G checked by θ certificates only; flawless inequalities checked on the orbital polynomial".into());
    }

    let p = q.principal_specialization();
    if g.is_abelian() {
        let table = CharacterTable::new(g).map_err(at("group"))?;
        let r = verify_flawless_effective_with(&p, &table).map_err(at("flawless"))?;
        checks.push("effectively_flawless", r.passed(), json!({"failures": r.failures()}));
    }
    let orbital = p.orbital().map_err(at("orbital"))?;
    let r = verify_flawless_poly(&orbital);
    checks.push(
        "orbital_strongly_flawless",
        r.strongly_flawless() && r.edge_inequalities_hold(),
        json!({"failures": r.failures()}),
    );

    if let Some(e) = &inst.job.expected {
        let (ok, detail) = compare_expected(e, &q, g)?;
        checks.push("expected", ok, detail);
        notes.extend(e.notes.iter().cloned());
    }

    let passed = checks.passed();
    let out = merge(head, json!({"passed": passed, "checks": checks.0, "notes": notes}));
    if passed {
        Ok(out)
    } else {
        Err(CliError::Verification(out))
    }
}

fn compare_expected(e: &Expected, q: &ClassQSym, g: &Arc<PermGroup>) -> Result<(bool, Value), CliError> {
    let mut mismatches = vec![];
    if let Some(psi) = &e.psi {
        let mut keys: Vec<IntComposition> = q.coefficients().keys().cloned().collect();
        for (a, by_element) in psi {
            let alpha: IntComposition =
                a.parse().map_err(|err: CoreError| CliError::Input(format!("expected.psi.{a}: {err}")))?;
            keys.retain(|k| k != &alpha);
            let f = q.coefficient(&alpha);
            for (el, want) in by_element {
                let p = PermutationSpec::Cycles(el.clone())
                    .build(g.ground())
                    .map_err(at(&format!("expected.psi.{a}.{el}")))?;
                let got = f.value_at(&p).map_err(at(&format!("expected.psi.{a}.{el}")))?;
                if got.to_string() != *want {
                    mismatches.push(json!({"coefficient": a, "element": el, "expected": want, "actual": got.to_string()}));
                }
            }
        }
        // coefficients absent from the expectation must vanish
        for a in keys {
            mismatches.push(json!({"coefficient": a.to_string(), "expected": "0", "actual": q.coefficient(&a).to_string()}));
        }
    }
    if let Some(orb) = &e.orbital {
        let o = q.orbital().map_err(at("orbital"))?;
        for (a, want) in orb {
            let alpha: IntComposition =
                a.parse().map_err(|err: CoreError| CliError::Input(format!("expected.orbital.{a}: {err}")))?;
            let got = o.coefficient(&alpha).to_string();
            if got != *want {
                mismatches.push(json!({"orbital": a, "expected": want, "actual": got}));
            }
        }
    }
    if let Some(poly) = &e.identity_polynomial {
        let got: Vec<String> = q.principal_specialization().at_identity().monomial().iter().map(|c| c.to_string()).collect();
        if &got != poly {
            mismatches.push(json!({"identity_polynomial": poly, "actual": got}));
        }
    }
    Ok((
        mismatches.is_empty(),
        json!({"origin": e.origin, "derived": e.derived, "mismatches": mismatches}),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = r#"{"schema":"1","structure":{"kind":"graph","vertices":["a","b","c","d"],
        "edges":[["a","b"],["a","c"],["b","d"],["c","d"]]},"character":"chromatic"}"#;

    #[test]
    fn caps_need_acknowledgement() {
        let mut o = RunOptions { max_ground: Some(7), ..Default::default() };
        assert_eq!(ground_cap(Command::Psi, &o).unwrap(), 7);
        o.max_ground = Some(11);
        assert_eq!(ground_cap(Command::Psi, &o).unwrap_err().exit_code(), 2);
        o.allow_large = true;
        assert_eq!(ground_cap(Command::Verify, &o).unwrap(), 11);
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let bad = SQUARE.replace("\"character\"", "\"charcter\"");
        let e = parse_job(&bad).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        let bad = SQUARE.replace("\"chromatic\"}", "\"chromatic\",\"expected\":{\"origin\":\"guessed\"}}");
        assert!(parse_job(&bad).unwrap_err().to_string().contains("expected.origin"));
    }

    #[test]
    fn square_polynomial() {
        let v = run(Command::Poly, SQUARE, &RunOptions::default()).unwrap();
        assert_eq!(v["schema"], "1");
        assert_eq!(v["polynomials"][0]["monomial_basis"], json!(["0", "-3", "6", "-4", "1"]));
    }

    #[test]
    fn trivial_group_orbital_is_identity_slice() {
        let psi = run(Command::Psi, SQUARE, &RunOptions::default()).unwrap();
        let orb = run(Command::Orbital, SQUARE, &RunOptions::default()).unwrap();
        let slice: serde_json::Map<String, Value> =
            psi["coefficients"].as_object().unwrap().iter().map(|(k, v)| (k.clone(), v[0].clone())).collect();
        assert_eq!(orb["coefficients"], Value::Object(slice));
    }

    #[test]
    fn large_groups_hit_the_cap() {
        let labels: Vec<String> = (0..8).map(|i| format!("v{i}")).collect();
        let job = json!({
            "schema": "1",
            "structure": {"kind": "graph", "vertices": labels},
            "character": "chromatic",
            "group": [format!("({})", labels.join(" ")), "(v0 v1)"],
        });
        let e = run(Command::Orbital, &job.to_string(), &RunOptions::default()).unwrap_err();
        assert_eq!(e.exit_code(), 3, "{e}");
    }
}
