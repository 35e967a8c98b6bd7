//! Structured result records: a single self-describing JSON document with
//! a `format_version` field, carrying enough state (arrays, parameters,
//! invariants, provenance) to re-verify the result from the record alone.

use crate::formats::array_line;
use lpair_core::construct::ConstructionReport;
use lpair_core::{crt_transport, FiniteAbelianGroup, GArray, PairRecord, SearchOutcome};
use serde_json::{json, Map, Value};

pub const FORMAT_VERSION: u64 = 1;

pub fn array_json(a: &GArray) -> Value {
    json!({
        "group": a.group().spec_string(),
        "alphabet": a.alphabet().name(),
        "values": payload_of(a),
    })
}

fn payload_of(a: &GArray) -> String {
    array_line(a)
        .rsplit(' ')
        .next()
        .expect("line has three fields")
        .to_string()
}

pub fn invariants_json(a: &GArray) -> Value {
    let distribution: Vec<Value> = a
        .autocorrelation_distribution()
        .iter()
        .map(|&(v, c)| json!([v, c]))
        .collect();
    json!({
        "row_sum": a.row_sum(),
        "ones": a.ones_count(),
        "symmetry": a.symmetry_type().name(),
        "distribution": distribution,
        "energy": a.correlation_energy(false),
        "peak": a.peak_correlation(),
        "balanced": a.is_balanced(),
        "perfect": a.is_perfect(),
    })
}

pub fn pair_json(p: &PairRecord) -> Value {
    json!({
        "a": array_json(p.a()),
        "b": array_json(p.b()),
        "invariants": { "a": invariants_json(p.a()), "b": invariants_json(p.b()) },
    })
}

/// The same array written over the cyclic group of equal order, when the
/// factor realignment exists (pairwise-coprime factors).
pub fn cyclic_form(a: &GArray) -> Option<GArray> {
    if a.group().rank() <= 1 {
        return None;
    }
    let cyclic = FiniteAbelianGroup::cyclic(a.group().order() as u64).ok()?;
    crt_transport(a, &cyclic).ok()
}

fn provenance(parameters: &[(String, String)]) -> Value {
    let mut map = Map::new();
    map.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    for (key, value) in parameters {
        if key == "modulus" || key == "alpha" || key == "alpha1" || key == "alpha2" {
            map.insert(key.clone(), json!(value));
        }
    }
    Value::Object(map)
}

pub fn construction_json(report: &ConstructionReport) -> Value {
    let parameters: Map<String, Value> = report
        .parameters
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect();
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(
            |c| json!({"name": c.name, "expected": c.expected, "got": c.got, "passed": c.passed()}),
        )
        .collect();
    let mut outputs = Map::new();
    if let Some(a) = report.array() {
        outputs.insert("array".into(), array_json(a));
        outputs.insert("invariants".into(), json!({ "array": invariants_json(a) }));
        if let Some(c) = cyclic_form(a) {
            outputs.insert("cyclic_array".into(), array_json(&c));
        }
    }
    if let Some(p) = report.pair() {
        outputs.insert("pair".into(), pair_json(p));
        if let (Some(ca), Some(cb)) = (cyclic_form(p.a()), cyclic_form(p.b())) {
            outputs.insert(
                "cyclic_pair".into(),
                json!({ "a": array_json(&ca), "b": array_json(&cb) }),
            );
        }
    }
    if let Some(lift) = report.lift() {
        outputs.insert("lift".into(), array_json(lift));
        outputs.insert("lift_invariants".into(), invariants_json(lift));
        if let Some(c) = cyclic_form(lift) {
            outputs.insert("cyclic_lift".into(), array_json(&c));
        }
    }
    json!({
        "format_version": FORMAT_VERSION,
        "operation": "construct",
        "family": report.family,
        "parameters": parameters,
        "outputs": outputs,
        "verification": checks,
        "provenance": provenance(&report.parameters),
    })
}

pub fn search_json(mode: &str, outcome: &SearchOutcome) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "operation": "search",
        "mode": mode,
        "space": outcome.descriptor,
        "status": outcome.status.name(),
        "census": outcome.census.to_string(),
        "cardinality": outcome.cardinality.to_string(),
        "found_token": outcome.found_token.map(|t| t.to_string()),
        "next_token": outcome.next_token.map(|t| t.to_string()),
        "certificate": outcome.certificate.as_ref().map(pair_json),
        "provenance": { "version": env!("CARGO_PKG_VERSION") },
    })
}

pub fn print_record(value: &Value, out: Option<&std::path::Path>) -> anyhow::Result<()> {
    let text = format!("{}\n", serde_json::to_string_pretty(value)?);
    match out {
        Some(path) => crate::formats::write_text(path, &text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
