use std::io::Read;

use num_traits::One;
use serde_json::{json, Value};
use tangles::duality::dualize;
use tangles::exactlp::{format_rational, parse_rational, Rational};
use tangles::generators::{gen_grid, gen_intro, gen_principal, gen_tau_mk, gen_thirds, Instance, Provenance};
use tangles::inducers::{
    brute_force_set_inducer, decide_induced, induces, normalize_inducer, FarkasWitness, InduceOutcome, WeightFunction,
};
use tangles::orientations::{
    consistency_violation, enumerate_orientations, is_f_ell_tangle, max_f_ell, maximal_indices, profile_violation,
    regularity_violation, tangle_violation, AxiomFilter, Orientation, ProfileViolation, TangleViolation,
};
use tangles::reproduce::{run_all, run_criterion, DEFAULT_SEED};
use tangles::resilience::{is_locally_induced, resilience, LocalInduction, ResilienceValue};
use tangles::{Error, OrientedSeparation, Result, Side};

use crate::doc::{
    certificate_json, digest, direction, instance_json, oriented_json, parse_certificate, parse_instance,
    rationals_json, to_pretty, Certificate, InstanceDoc,
};
use crate::{Family, Format, InstanceArg, OracleQuery};

pub const ENUM_BUDGET_VAR: &str = "TANGLES_ENUM_BUDGET";
pub const LP_BUDGET_VAR: &str = "TANGLES_LP_BUDGET";

pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 2,
        Error::Resource(_) => 3,
        Error::Invariant(_) => 1,
    }
}

pub struct Context {
    format: Format,
    enum_budget: u64,
    lp_budget: u64,
}

fn budget_from_env(var: &str, default: u64) -> Result<u64> {
    match std::env::var(var) {
        Err(_) => Ok(default),
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .ok()
            .filter(|&b| b > 0)
            .ok_or_else(|| Error::Input(format!("{var} must be a positive integer, got `{v}`"))),
    }
}

fn read_input(arg: &InstanceArg) -> Result<String> {
    let mut text = String::new();
    match arg.instance.as_deref() {
        None | Some("-") => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Input(format!("cannot read standard input: {e}")))?;
        }
        Some(path) => {
            text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
        }
    }
    Ok(text)
}

fn load(arg: &InstanceArg) -> Result<InstanceDoc> {
    parse_instance(&read_input(arg)?)
}

fn oriented(doc: &InstanceDoc) -> Result<&Orientation> {
    doc.orientation
        .as_ref()
        .ok_or_else(|| Error::Input("the instance has no orientation".into()))
}

fn side_text(s: &Side) -> String {
    s.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn oriented_text(s: &OrientedSeparation) -> String {
    format!("({} | {})", side_text(s.small()), side_text(s.big()))
}

fn emit(v: &Value) {
    println!("{}", to_pretty(v));
}

fn instance_doc(inst: Instance) -> InstanceDoc {
    InstanceDoc {
        system: inst.system,
        orientation: Some(inst.orientation),
        provenance: Some(inst.provenance),
    }
}

struct AxiomCheck {
    name: String,
    holds: bool,
    witness: Vec<OrientedSeparation>,
    text: String,
}

impl Context {
    pub fn from_env(format: Format) -> Result<Self> {
        Ok(Context {
            format,
            enum_budget: budget_from_env(ENUM_BUDGET_VAR, 1 << 24)?,
            lp_budget: budget_from_env(LP_BUDGET_VAR, 1 << 16)?,
        })
    }

    fn json(&self) -> bool {
        self.format == Format::Json
    }

    pub fn generate(&self, family: Family) -> Result<u8> {
        let doc = match family {
            Family::Principal { n, x } => instance_doc(gen_principal(n, x)?),
            Family::Intro { m } => instance_doc(gen_intro(m)?),
            Family::TauMk { m, k, ell, materialize } => {
                let t = gen_tau_mk(m, k, ell)?;
                if materialize {
                    let max_points = 63 - self.enum_budget.leading_zeros() as usize;
                    instance_doc(t.materialize(max_points)?)
                } else {
                    instance_doc(t.instance)
                }
            }
            Family::Thirds { n } => instance_doc(gen_thirds(n)?),
            Family::Grid { n } => {
                instance_doc(gen_grid(n, usize::try_from(self.enum_budget).unwrap_or(usize::MAX))?)
            }
        };
        emit(&instance_json(&doc));
        Ok(0)
    }

    pub fn verify(&self, axioms: Option<&str>, certificate: Option<&str>, input: &InstanceArg) -> Result<u8> {
        if axioms.is_none() && certificate.is_none() {
            return Err(Error::Input("nothing to verify: pass --axioms and/or --certificate".into()));
        }
        let doc = load(input)?;
        let mut ok = true;
        let mut report = serde_json::Map::new();
        if let Some(list) = axioms {
            let tau = oriented(&doc)?;
            let mut entries = Vec::new();
            for name in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let c = check_axiom(tau, name)?;
                ok &= c.holds;
                if !self.json() {
                    println!("{}: {}", c.name, if c.holds { "holds" } else { "fails" });
                    if !c.holds {
                        println!("  {}", c.text);
                        for s in &c.witness {
                            println!("  {}", oriented_text(s));
                        }
                    }
                }
                entries.push(json!({
                    "axiom": c.name,
                    "holds": c.holds,
                    "witness": c.witness.iter().map(oriented_json).collect::<Vec<_>>(),
                }));
            }
            report.insert("axioms".into(), Value::from(entries));
        }
        if let Some(path) = certificate {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {path}: {e}")))?;
            let (cert, claimed) = parse_certificate(&text)?;
            let outcome = if claimed != digest(&doc) {
                Err("certificate was issued for a different instance".to_string())
            } else {
                verify_certificate(&doc, &cert)?
            };
            ok &= outcome.is_ok();
            if !self.json() {
                match &outcome {
                    Ok(()) => println!("certificate ({}): valid", cert.kind()),
                    Err(why) => println!("certificate ({}): invalid: {why}", cert.kind()),
                }
            }
            report.insert(
                "certificate".into(),
                json!({ "kind": cert.kind(), "valid": outcome.is_ok(), "reason": outcome.err() }),
            );
        }
        if self.json() {
            emit(&Value::Object(report));
        }
        Ok(if ok { 0 } else { 1 })
    }

    pub fn decide(&self, expect_induced: bool, use_maximal: bool, input: &InstanceArg) -> Result<u8> {
        let doc = load(input)?;
        let tau = oriented(&doc)?;
        let decision = decide_induced(tau, use_maximal)?;
        let cert = match &decision.outcome {
            InduceOutcome::Induced(w) => {
                let w = if tau.is_empty() { w.clone() } else { normalize_inducer(w, tau, &Rational::one())? };
                Certificate::Inducer(w.values().to_vec())
            }
            InduceOutcome::NotInduced(wit) => Certificate::FarkasWitness {
                columns: column_indices(tau, &wit.columns)?,
                weights: wit.weights.clone(),
            },
        };
        let induced = decision.outcome.is_induced();
        let mut v = certificate_json(&cert, &digest(&doc));
        v["outcome"] = Value::from(if induced { "induced" } else { "not-induced" });
        emit(&v);
        if !self.json() {
            eprintln!("{}", if induced { "Induced" } else { "NotInduced" });
        }
        Ok(if expect_induced && !induced { 1 } else { 0 })
    }

    pub fn resilience(&self, cap: usize, input: &InstanceArg) -> Result<u8> {
        let doc = load(input)?;
        let r = resilience(oriented(&doc)?, cap)?;
        let (kind, value, text) = match r.value {
            ResilienceValue::Finite(k) => ("finite", Some(k), k.to_string()),
            ResilienceValue::AtLeast(k) => ("at-least", Some(k), format!("at least {k}")),
            ResilienceValue::Infinite => ("infinite", None, "infinite".to_string()),
        };
        if self.json() {
            emit(&json!({
                "resilience": { "kind": kind, "value": value },
                "cover": r.cover.iter().map(oriented_json).collect::<Vec<_>>(),
            }));
        } else {
            println!("{text}");
            for s in &r.cover {
                println!("  {}", oriented_text(s));
            }
        }
        Ok(0)
    }

    pub fn locally_induced(&self, k: usize, ell: &str, input: &InstanceArg) -> Result<u8> {
        let ell = parse_rational(ell)?;
        let doc = load(input)?;
        let tau = oriented(&doc)?;
        match is_locally_induced(tau, k, &ell, self.lp_budget)? {
            LocalInduction::Witnesses(ws) => {
                let cert = Certificate::LocalWitnessSet {
                    k,
                    ell,
                    maximal: column_indices(tau, &ws.maximal)?,
                    subsets: ws.subsets.clone(),
                    weights: ws.weights.iter().map(|w| w.values().to_vec()).collect(),
                };
                emit(&certificate_json(&cert, &digest(&doc)));
                Ok(0)
            }
            LocalInduction::Counterexample(ce) => {
                if self.json() {
                    emit(&json!({
                        "kind": "local-counterexample",
                        "subset": column_indices(tau, &ce.elements)?,
                        "certificate": rationals_json(&ce.certificate),
                    }));
                } else {
                    println!("not {k}-locally {}-induced; no local inducer for:", format_rational(&ell));
                    for s in &ce.elements {
                        println!("  {}", oriented_text(s));
                    }
                }
                Ok(1)
            }
        }
    }

    pub fn dualize(&self, input: &InstanceArg) -> Result<u8> {
        let doc = load(input)?;
        let sigma = oriented(&doc)?;
        let dual = dualize(sigma)?;
        if !dual.injective {
            let classes: Vec<String> = dual
                .collisions
                .iter()
                .filter(|c| c.len() > 1)
                .map(|c| format!("{{{}}}", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")))
                .collect();
            eprintln!("φ is not injective; colliding points: {}", classes.join(" "));
        }
        let mut params = std::collections::BTreeMap::new();
        params.insert("points".to_string(), sigma.ground_size() as u64);
        let out = InstanceDoc {
            system: dual.base.clone(),
            orientation: dual.default.clone(),
            provenance: Some(Provenance {
                generator: "dual".into(),
                params,
            }),
        };
        emit(&instance_json(&out));
        Ok(0)
    }

    pub fn oracle(&self, query: OracleQuery) -> Result<u8> {
        match query {
            OracleQuery::SetInducer { input } => {
                let doc = load(&input)?;
                let found = brute_force_set_inducer(oriented(&doc)?, self.enum_budget)?;
                if self.json() {
                    emit(&json!({ "set": found.as_ref().map(Side::to_vec) }));
                } else {
                    match &found {
                        Some(x) => println!("set: {{{}}}", side_text(x)),
                        None => println!("none"),
                    }
                }
            }
            OracleQuery::Enumerate { filter, input } => {
                let filter: AxiomFilter = filter.parse()?;
                let doc = load(&input)?;
                let found = enumerate_orientations(&doc.system, filter, self.enum_budget)?;
                let rows: Vec<Vec<&str>> =
                    found.iter().map(|t| t.elements().iter().map(direction).collect()).collect();
                if self.json() {
                    emit(&json!({ "count": found.len(), "orientations": rows }));
                } else {
                    println!("{} orientations", found.len());
                    for r in rows {
                        println!("  {}", r.join(" "));
                    }
                }
            }
        }
        Ok(0)
    }

    pub fn reproduce(&self, seed: Option<u64>, only: Option<u8>) -> Result<u8> {
        let seed = seed.unwrap_or(DEFAULT_SEED);
        let results = match only {
            Some(id) => vec![run_criterion(id, seed).ok_or_else(|| Error::Input(format!("no criterion {id}")))?],
            None => run_all(seed),
        };
        let passed = results.iter().filter(|r| r.passed).count();
        if self.json() {
            let rows: Vec<Value> = results
                .iter()
                .map(|r| json!({ "id": r.id, "name": r.name, "passed": r.passed, "detail": r.detail }))
                .collect();
            emit(&json!({ "seed": seed, "passed": passed, "total": results.len(), "criteria": rows }));
        } else {
            for r in &results {
                println!("{r}");
            }
            println!("{passed} of {} criteria passed", results.len());
        }
        Ok(if passed == results.len() { 0 } else { 1 })
    }
}

/// System indices of elements of `tau`.
fn column_indices(tau: &Orientation, columns: &[OrientedSeparation]) -> Result<Vec<usize>> {
    columns
        .iter()
        .map(|c| {
            tau.system()
                .index_of_oriented(c)
                .ok_or_else(|| Error::Invariant(format!("{c:?} is not in the system")))
        })
        .collect()
}

fn check_axiom(tau: &Orientation, name: &str) -> Result<AxiomCheck> {
    let mk = |holds: bool, witness: Vec<OrientedSeparation>, text: &str| AxiomCheck {
        name: name.to_string(),
        holds,
        witness,
        text: text.to_string(),
    };
    Ok(match name {
        "consistent" => match consistency_violation(tau) {
            None => mk(true, vec![], ""),
            Some(pair) => mk(false, pair.to_vec(), "inconsistent pair"),
        },
        "regular" => match regularity_violation(tau) {
            None => mk(true, vec![], ""),
            Some(s) => mk(false, vec![s], "co-small element"),
        },
        "profile" => match profile_violation(tau) {
            None => mk(true, vec![], ""),
            Some(ProfileViolation::Inconsistent(pair)) => mk(false, pair.to_vec(), "inconsistent pair"),
            Some(ProfileViolation::Meet { s, t, meet }) => {
                mk(false, vec![s, t, meet], "two elements and the meet of their inverses")
            }
        },
        "tangle" => match tangle_violation(tau) {
            None => mk(true, vec![], ""),
            Some(TangleViolation::Inconsistent(pair)) => mk(false, pair.to_vec(), "inconsistent pair"),
            Some(TangleViolation::Cover(triple)) => mk(false, triple.to_vec(), "small sides covering the ground set"),
        },
        other => match other.strip_prefix("f-ell=") {
            Some(ell) => {
                let ell = parse_rational(ell)?;
                let holds = is_f_ell_tangle(tau, &ell)?;
                let best = max_f_ell(tau)?;
                let text = match best {
                    Some(b) => format!("smallest triple intersection of big sides has {b} points"),
                    None => "empty orientation".to_string(),
                };
                mk(holds, vec![], &text)
            }
            None => return Err(Error::Input(format!("unknown axiom `{other}`"))),
        },
    })
}

/// `Ok(Err(reason))` when the certificate is well-formed but wrong.
fn verify_certificate(doc: &InstanceDoc, cert: &Certificate) -> Result<std::result::Result<(), String>> {
    let tau = oriented(doc)?;
    let n = tau.ground_size();
    let elements = |idx: &[usize]| -> std::result::Result<Vec<OrientedSeparation>, String> {
        idx.iter()
            .map(|&i| (i < tau.len()).then(|| tau.get(i).clone()).ok_or(format!("index {i} out of range")))
            .collect()
    };
    Ok(match cert {
        Certificate::Inducer(values) => {
            if values.len() != n {
                return Ok(Err(format!("{} weights for {n} points", values.len())));
            }
            match WeightFunction::new(values.clone()) {
                Ok(w) if induces(&w, tau) => Ok(()),
                Ok(_) => Err("weights do not induce the orientation".into()),
                Err(e) => Err(e.to_string()),
            }
        }
        Certificate::InducingSet(set) => match Side::from_indices(n, set.iter().copied()) {
            Ok(x) if induces(&WeightFunction::indicator(&x), tau) => Ok(()),
            Ok(_) => Err("the set does not induce the orientation".into()),
            Err(e) => Err(e.to_string()),
        },
        Certificate::FarkasWitness { columns, weights } => match elements(columns) {
            Err(e) => Err(e),
            Ok(cols) => {
                let w = FarkasWitness {
                    columns: cols,
                    weights: weights.clone(),
                };
                if w.verify(n) {
                    Ok(())
                } else {
                    Err("y ≥ 0, Qy ≤ 0, 1ᵀy > 0 fails".into())
                }
            }
        },
        Certificate::LocalWitnessSet {
            k,
            ell,
            maximal,
            subsets,
            weights,
        } => verify_local(tau, *k, ell, maximal, subsets, weights),
    })
}

fn verify_local(
    tau: &Orientation,
    k: usize,
    ell: &Rational,
    maximal: &[usize],
    subsets: &[Vec<usize>],
    weights: &[Vec<Rational>],
) -> std::result::Result<(), String> {
    let mut want = maximal_indices(tau);
    want.sort_unstable();
    let mut got = maximal.to_vec();
    got.sort_unstable();
    if got != want {
        return Err("maximal elements do not match the orientation".into());
    }
    let m = maximal.len();
    let r = k.min(m);
    if subsets.len() != weights.len() {
        return Err("one weight function per subset is required".into());
    }
    let mut seen = std::collections::BTreeSet::new();
    for s in subsets {
        let mut s2 = s.clone();
        s2.sort_unstable();
        s2.dedup();
        if s2.len() != r || s2.iter().any(|&i| i >= m) || !seen.insert(s2) {
            return Err("subsets must be distinct r-subsets of the maximal elements".into());
        }
    }
    let expected: u128 = (0..r).fold(1u128, |acc, i| acc * (m - i) as u128 / (i + 1) as u128);
    if seen.len() as u128 != expected {
        return Err(format!("{} subsets given, {expected} needed", seen.len()));
    }
    let neg_ell = -ell.clone();
    for (s, values) in subsets.iter().zip(weights) {
        let w = WeightFunction::new(values.clone()).map_err(|e| e.to_string())?;
        if w.len() != tau.ground_size() || !w.is_nonzero() {
            return Err("weight functions must be non-zero on the ground set".into());
        }
        for (j, &idx) in maximal.iter().enumerate() {
            let margin = w.margin(tau.get(idx));
            let ok = if s.contains(&j) { margin >= Rational::one() } else { margin >= neg_ell };
            if !ok {
                return Err(format!("subset {s:?}: margin {} on maximal element {j}", format_rational(&margin)));
            }
        }
    }
    Ok(())
}
