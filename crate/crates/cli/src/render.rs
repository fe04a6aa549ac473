//! Rendering helpers shared by the table and JSON report writers.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::json;

use tsg_core::{perm_to_cycles, GroupLabel, PermGroup, Verdict, Vertex};

use crate::claims::ClaimResult;

/// Compact element-order histogram, e.g. `1:1 2:15 4:8 8:8`.
pub fn histogram_string(histogram: &BTreeMap<u32, u32>) -> String {
    histogram
        .iter()
        .map(|(order, count)| format!("{order}:{count}"))
        .collect::<Vec<_>>()
        .join(" ")
}

/// The pinned verdict object: `{n, k, subgroup_label, class_size,
/// realizable, positively_realizable, citations, witness}`.
pub fn verdict_json(
    n: usize,
    k: usize,
    label: &GroupLabel,
    class_size: usize,
    verdict: &Verdict,
) -> serde_json::Value {
    let citations: Vec<serde_json::Value> = verdict
        .citations
        .iter()
        .map(|c| json!({"id": c.id, "quote": c.quote}))
        .collect();
    let witness = match &verdict.witness {
        None => serde_json::Value::Null,
        Some(w) => json!({
            "kind": w.kind.as_str(),
            "element": w
                .witness_element
                .as_ref()
                .map(|p| perm_to_cycles(p, n)),
        }),
    };
    json!({
        "n": n,
        "k": k,
        "subgroup_label": label.to_string(),
        "class_size": class_size,
        "realizable": verdict.realizable.as_str(),
        "positively_realizable": verdict.positively_realizable.as_str(),
        "citations": citations,
        "witness": witness,
    })
}

/// One-line witness description for the human tables.
pub fn witness_string(n: usize, verdict: &Verdict) -> String {
    match &verdict.witness {
        None => "-".to_string(),
        Some(w) => match &w.witness_element {
            None => w.kind.as_str().to_string(),
            Some(p) => format!("{}: {}", w.kind.as_str(), perm_to_cycles(p, n)),
        },
    }
}

pub fn claim_json(result: &ClaimResult) -> serde_json::Value {
    json!({
        "claim_id": result.claim_id,
        "citation": {"location": result.citation.0, "quote": result.citation.1},
        "expected": result.expected,
        "computed": result.computed,
        "status": result.status.as_str(),
    })
}

/// Size of the conjugacy class of `h` inside `ambient`: the orbit of its
/// element set under conjugation by every ambient element.
pub fn class_size_of(ambient: &PermGroup, h: &PermGroup) -> usize {
    let canonical = |elements: &mut Vec<Vec<u16>>| {
        elements.sort_unstable();
        elements.clone()
    };
    let mut seen: BTreeSet<Vec<Vec<u16>>> = BTreeSet::new();
    for g in ambient.elements() {
        let mut conjugated: Vec<Vec<u16>> = h
            .elements()
            .iter()
            .map(|p| p.conjugate_by(g).images().to_vec())
            .collect();
        seen.insert(canonical(&mut conjugated));
    }
    seen.len()
}

/// Minimal CSV quoting: fields with commas or quotes are wrapped and
/// internal quotes doubled.
pub fn csv_field(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// Edge list as CSV with the vertex names used everywhere else.
pub fn edges_csv(graph: &tsg_core::PetersenGraph) -> String {
    let n = graph.n();
    let mut out = String::from("a,b,class\n");
    for e in graph.edges() {
        out.push_str(&format!(
            "{},{},{}\n",
            Vertex::from_point(e.a, n).display(n),
            Vertex::from_point(e.b, n).display(n),
            e.class.as_str()
        ));
    }
    out
}

/// Cycle notation for every generator of a group acting on P(n, k).
pub fn generator_cycles(group: &PermGroup, n: usize) -> Vec<String> {
    group
        .generators()
        .iter()
        .map(|p| perm_to_cycles(p, n))
        .collect()
}
