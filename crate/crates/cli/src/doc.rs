//! JSON instance and certificate documents.
//!
//! Keys are sorted (serde_json's default map), sets are sorted index arrays and
//! rationals are "p/q" strings, so equal documents serialize to equal bytes.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use tangles::exactlp::{format_rational, parse_rational, Rational};
use tangles::generators::Provenance;
use tangles::{Error, GroundSet, OrderSpec, Orientation, OrientedSeparation, Result, Separation, SeparationSystem, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceDoc {
    pub system: Arc<SeparationSystem>,
    pub orientation: Option<Orientation>,
    pub provenance: Option<Provenance>,
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

pub fn side_json(s: &Side) -> Value {
    Value::from(s.to_vec())
}

pub fn oriented_json(s: &OrientedSeparation) -> Value {
    json!({ "small": side_json(s.small()), "big": side_json(s.big()) })
}

pub fn rationals_json(values: &[Rational]) -> Value {
    Value::from(values.iter().map(format_rational).collect::<Vec<_>>())
}

fn separation_json(s: &Separation) -> Value {
    let c = s.canonical();
    json!({ "a": side_json(c.small()), "b": side_json(c.big()) })
}

/// `"ab"` when `s` is the listed (canonical) orientation of its separation, else `"ba"`.
pub fn direction(s: &OrientedSeparation) -> &'static str {
    if s.is_canonical() {
        "ab"
    } else {
        "ba"
    }
}

pub fn instance_json(doc: &InstanceDoc) -> Value {
    let sys = &doc.system;
    let mut ground = Map::new();
    ground.insert("size".into(), Value::from(sys.ground_size()));
    if let Some(labels) = sys.ground().labels() {
        ground.insert("labels".into(), Value::from(labels.to_vec()));
    }
    let order = match sys.order_spec() {
        OrderSpec::Standard => json!({ "kind": "standard" }),
        OrderSpec::Crossing { families } => {
            json!({ "kind": "crossing", "families": families.iter().map(side_json).collect::<Vec<_>>() })
        }
        OrderSpec::Explicit { table } => {
            let entries: Vec<Value> = table
                .iter()
                .map(|(s, o)| {
                    let c = s.canonical();
                    json!({ "a": side_json(c.small()), "b": side_json(c.big()), "order": o })
                })
                .collect();
            json!({ "kind": "explicit", "entries": entries })
        }
    };
    let mut out = Map::new();
    out.insert("ground".into(), Value::Object(ground));
    out.insert("order".into(), order);
    out.insert(
        "separations".into(),
        Value::from(sys.separations().iter().map(separation_json).collect::<Vec<_>>()),
    );
    if let Some(tau) = &doc.orientation {
        let entries: Vec<Value> = tau
            .elements()
            .iter()
            .enumerate()
            .map(|(i, s)| json!({ "index": i, "direction": direction(s) }))
            .collect();
        out.insert("orientation".into(), Value::from(entries));
    }
    if let Some(p) = &doc.provenance {
        out.insert("provenance".into(), provenance_json(p));
    }
    Value::Object(out)
}

fn provenance_json(p: &Provenance) -> Value {
    let params: Map<String, Value> = p.params.iter().map(|(k, v)| (k.clone(), Value::from(*v))).collect();
    json!({ "generator": p.generator, "params": params })
}

/// Compact serialization; the digest is taken over exactly these bytes.
pub fn to_compact(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}

pub fn to_pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

pub fn digest(doc: &InstanceDoc) -> String {
    hex::encode(Sha256::digest(to_compact(&instance_json(doc)).as_bytes()))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    v.as_u64()
        .and_then(|x| usize::try_from(x).ok())
        .ok_or_else(|| bad(format!("`{what}` must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("`{what}` must be an array")))
}

pub fn parse_side(v: &Value, n: usize, what: &str) -> Result<Side> {
    let idx = as_array(v, what)?
        .iter()
        .map(|x| as_usize(x, what))
        .collect::<Result<Vec<_>>>()?;
    Side::from_indices(n, idx)
}

pub fn parse_rationals(v: &Value, what: &str) -> Result<Vec<Rational>> {
    as_array(v, what)?
        .iter()
        .map(|x| {
            x.as_str()
                .ok_or_else(|| bad(format!("`{what}` entries must be \"p/q\" strings")))
                .and_then(parse_rational)
        })
        .collect()
}

fn parse_pair(v: &Value, n: usize) -> Result<(Side, Side)> {
    Ok((parse_side(field(v, "a")?, n, "a")?, parse_side(field(v, "b")?, n, "b")?))
}

pub fn parse_instance(text: &str) -> Result<InstanceDoc> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("malformed JSON: {e}")))?;
    instance_from_json(&v)
}

pub fn instance_from_json(v: &Value) -> Result<InstanceDoc> {
    let g = field(v, "ground")?;
    let n = as_usize(field(g, "size")?, "ground.size")?;
    let ground = match g.get("labels") {
        None | Some(Value::Null) => GroundSet::new(n)?,
        Some(l) => {
            let labels = as_array(l, "ground.labels")?
                .iter()
                .map(|x| x.as_str().map(str::to_string).ok_or_else(|| bad("labels must be strings")))
                .collect::<Result<Vec<_>>>()?;
            if labels.len() != n {
                return Err(bad(format!("{} labels for {n} points", labels.len())));
            }
            GroundSet::with_labels(labels)?
        }
    };
    let mut listed = Vec::new();
    for s in as_array(field(v, "separations")?, "separations")? {
        let (a, b) = parse_pair(s, n)?;
        listed.push(OrientedSeparation::new(a, b)?);
    }
    let order_v = field(v, "order")?;
    let order = match field(order_v, "kind")?.as_str() {
        Some("standard") => OrderSpec::Standard,
        Some("crossing") => OrderSpec::Crossing {
            families: as_array(field(order_v, "families")?, "families")?
                .iter()
                .map(|f| parse_side(f, n, "families"))
                .collect::<Result<_>>()?,
        },
        Some("explicit") => {
            let mut table = BTreeMap::new();
            for e in as_array(field(order_v, "entries")?, "entries")? {
                let (a, b) = parse_pair(e, n)?;
                table.insert(Separation::new(a, b)?, field(e, "order")?.as_u64().ok_or_else(|| bad("order must be an integer"))?);
            }
            OrderSpec::Explicit { table }
        }
        _ => return Err(bad("order.kind must be standard, crossing or explicit")),
    };
    let seps: Vec<Separation> = listed.iter().map(OrientedSeparation::underlying).collect();
    let system = Arc::new(SeparationSystem::new(ground, seps, order)?);
    if system.len() != listed.len() {
        return Err(bad("separations are listed more than once"));
    }
    let orientation = match v.get("orientation") {
        None | Some(Value::Null) => None,
        Some(o) => {
            let entries = as_array(o, "orientation")?;
            let mut chosen: Vec<Option<OrientedSeparation>> = vec![None; listed.len()];
            for e in entries {
                let i = as_usize(field(e, "index")?, "orientation.index")?;
                let Some(s) = listed.get(i) else {
                    return Err(bad(format!("orientation index {i} is out of range")));
                };
                let pick = match field(e, "direction")?.as_str() {
                    Some("ab") => s.clone(),
                    Some("ba") => s.inverse(),
                    _ => return Err(bad("direction must be \"ab\" or \"ba\"")),
                };
                if chosen[i].replace(pick).is_some() {
                    return Err(bad(format!("separation {i} is oriented twice")));
                }
            }
            if chosen.iter().any(Option::is_none) {
                return Err(bad("orientation does not cover every separation"));
            }
            Some(Orientation::from_elements(system.clone(), chosen.into_iter().flatten())?)
        }
    };
    let provenance = match v.get("provenance") {
        None | Some(Value::Null) => None,
        Some(p) => {
            let generator = field(p, "generator")?
                .as_str()
                .ok_or_else(|| bad("provenance.generator must be a string"))?
                .to_string();
            let mut params = BTreeMap::new();
            if let Some(ps) = p.get("params") {
                let obj = ps.as_object().ok_or_else(|| bad("provenance.params must be an object"))?;
                for (k, x) in obj {
                    params.insert(k.clone(), x.as_u64().ok_or_else(|| bad("parameters must be integers"))?);
                }
            }
            Some(Provenance { generator, params })
        }
    };
    Ok(InstanceDoc {
        system,
        orientation,
        provenance,
    })
}

/// A certificate about an orientation, bound to the instance by its digest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    Inducer(Vec<Rational>),
    InducingSet(Vec<usize>),
    /// Elements of the orientation (by separation index) with their weights.
    FarkasWitness { columns: Vec<usize>, weights: Vec<Rational> },
    /// One weight function per subset of the maximal elements, which are given by separation index.
    LocalWitnessSet {
        k: usize,
        ell: Rational,
        maximal: Vec<usize>,
        subsets: Vec<Vec<usize>>,
        weights: Vec<Vec<Rational>>,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Inducer(_) => "inducer",
            Certificate::InducingSet(_) => "inducing-set",
            Certificate::FarkasWitness { .. } => "farkas-witness",
            Certificate::LocalWitnessSet { .. } => "local-witness-set",
        }
    }
}

pub fn certificate_json(c: &Certificate, instance_digest: &str) -> Value {
    let mut out = Map::new();
    out.insert("kind".into(), Value::from(c.kind()));
    out.insert("instance".into(), Value::from(instance_digest));
    match c {
        Certificate::Inducer(w) => {
            out.insert("weights".into(), rationals_json(w));
        }
        Certificate::InducingSet(x) => {
            out.insert("set".into(), Value::from(x.clone()));
        }
        Certificate::FarkasWitness { columns, weights } => {
            out.insert("columns".into(), Value::from(columns.clone()));
            out.insert("weights".into(), rationals_json(weights));
        }
        Certificate::LocalWitnessSet {
            k,
            ell,
            maximal,
            subsets,
            weights,
        } => {
            out.insert("k".into(), Value::from(*k));
            out.insert("ell".into(), Value::from(format_rational(ell)));
            out.insert("maximal".into(), Value::from(maximal.clone()));
            out.insert("subsets".into(), Value::from(subsets.clone()));
            out.insert(
                "weights".into(),
                Value::from(weights.iter().map(|w| rationals_json(w)).collect::<Vec<_>>()),
            );
        }
    }
    Value::Object(out)
}

fn usize_list(v: &Value, what: &str) -> Result<Vec<usize>> {
    as_array(v, what)?.iter().map(|x| as_usize(x, what)).collect()
}

/// Parses a certificate document, returning it with the digest it claims to certify.
pub fn parse_certificate(text: &str) -> Result<(Certificate, String)> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("malformed JSON: {e}")))?;
    let digest = field(&v, "instance")?
        .as_str()
        .ok_or_else(|| bad("instance digest must be a string"))?
        .to_string();
    let cert = match field(&v, "kind")?.as_str() {
        Some("inducer") => Certificate::Inducer(parse_rationals(field(&v, "weights")?, "weights")?),
        Some("inducing-set") => Certificate::InducingSet(usize_list(field(&v, "set")?, "set")?),
        Some("farkas-witness") => Certificate::FarkasWitness {
            columns: usize_list(field(&v, "columns")?, "columns")?,
            weights: parse_rationals(field(&v, "weights")?, "weights")?,
        },
        Some("local-witness-set") => Certificate::LocalWitnessSet {
            k: as_usize(field(&v, "k")?, "k")?,
            ell: parse_rational(field(&v, "ell")?.as_str().ok_or_else(|| bad("ell must be a \"p/q\" string"))?)?,
            maximal: usize_list(field(&v, "maximal")?, "maximal")?,
            subsets: as_array(field(&v, "subsets")?, "subsets")?
                .iter()
                .map(|s| usize_list(s, "subsets"))
                .collect::<Result<_>>()?,
            weights: as_array(field(&v, "weights")?, "weights")?
                .iter()
                .map(|w| parse_rationals(w, "weights"))
                .collect::<Result<_>>()?,
        },
        _ => return Err(bad("unknown certificate kind")),
    };
    Ok((cert, digest))
}
