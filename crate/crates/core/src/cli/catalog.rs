//! Bundled instances with their expected exact values.

use rayon::prelude::*;
use serde_json::json;

use crate::error::Result;

use super::instance::InstanceFile;
use super::report::{evaluate, StabilityReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    pub delta: String,
    /// `None` where no α formula is available (spherical instances with edges).
    pub alpha: Option<String>,
    pub verdict: String,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub instance: InstanceFile,
    pub expected: Expected,
}

impl CatalogEntry {
    fn new(
        id: &str,
        instance: InstanceFile,
        delta: &str,
        alpha: Option<&str>,
        verdict: &str,
    ) -> Self {
        CatalogEntry {
            id: id.into(),
            instance: instance.with_id(id),
            expected: Expected {
                delta: delta.into(),
                alpha: alpha.map(Into::into),
                verdict: verdict.into(),
            },
        }
    }

    pub fn evaluate(&self) -> Result<StabilityReport> {
        evaluate(&self.id, &self.instance.build()?)
    }
}

pub const TORIC_FANS: &[(&str, &[&[i64]])] = &[
    ("p1", &[&[1], &[-1]]),
    ("p2", &[&[1, 0], &[0, 1], &[-1, -1]]),
    ("p3", &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[-1, -1, -1]]),
    ("p1xp1", &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]]),
    ("bl1-p2", &[&[1, 0], &[0, 1], &[1, 1], &[-1, -1]]),
    ("bl2-p2", &[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1]]),
    (
        "bl3-p2",
        &[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]],
    ),
];

/// Expected (δ, α) for [`TORIC_FANS`], in the same order.
const TORIC_VALUES: &[(&str, &str)] = &[
    ("1", "1/2"),
    ("1", "1/3"),
    ("1", "1/4"),
    ("1", "1/2"),
    ("6/7", "1/3"),
    ("21/25", "1/3"),
    ("1", "1/2"),
];

fn semistable_or_not(delta: &str) -> &'static str {
    if delta == "1" {
        "k-semistable"
    } else {
        "k-unstable"
    }
}

fn synthetic_square(edges: serde_json::Value) -> InstanceFile {
    let doc = json!({
        "kind": "spherical",
        "n_rank": 2,
        "t_rank": 2,
        "pi": [[1, 0], [0, 1]],
        "valuation_cone_generators": [[-1, 0], [0, -1]],
        "colored_fan_edges": edges,
        "moment_polytope": {"vertices": [[0, 0], [1, 0], [0, 1], [1, 1]]},
        "positive_roots": [],
        "levi_subset": [],
        "dh": {"terms": [{"exponents": [0, 0], "coeff": 1}]},
        "V": 1
    });
    InstanceFile::parse(&doc.to_string()).expect("bundled instance parses")
}

fn rank_one_segment() -> InstanceFile {
    let doc = json!({
        "kind": "spherical",
        "n_rank": 1,
        "t_rank": 2,
        "pi": [[1, 1]],
        "valuation_cone_generators": [[1]],
        "colored_fan_edges": [{"gen": [1], "a": 1}],
        "moment_polytope": {"vertices": [[0, 0], [1, 1]]},
        "positive_roots": [[1, 1]],
        "levi_subset": [],
        "dh": {"construct": "root-squares"},
        "V": 1
    });
    InstanceFile::parse(&doc.to_string()).expect("bundled instance parses")
}

/// All bundled instances, sorted by id.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for (&(id, rays), &(delta, alpha)) in TORIC_FANS.iter().zip(TORIC_VALUES) {
        out.push(CatalogEntry::new(
            id,
            InstanceFile::toric(rays),
            delta,
            Some(alpha),
            semistable_or_not(delta),
        ));
        let mirror_verdict = if delta == "1" {
            "k-polystable"
        } else {
            "k-unstable"
        };
        out.push(CatalogEntry::new(
            &format!("{id}-spherical"),
            InstanceFile::toric_as_spherical(rays),
            delta,
            None,
            mirror_verdict,
        ));
    }
    for m in 2..=6u32 {
        out.push(CatalogEntry::new(
            &format!("cyclic-{m}"),
            InstanceFile::p1_group("cyclic", Some(m)),
            "1",
            Some("1/2"),
            "k-semistable",
        ));
        out.push(CatalogEntry::new(
            &format!("dihedral-{m}"),
            InstanceFile::p1_group("dihedral", Some(m)),
            "2",
            Some("1"),
            "uniformly-k-stable",
        ));
        out.push(CatalogEntry::new(
            &format!("logpair-{m}-{m}"),
            InstanceFile::p1_logpair(&[m, m]),
            "1",
            Some("1/2"),
            "k-semistable",
        ));
    }
    for (family, delta, alpha) in [
        ("tetrahedral", "4", "2"),
        ("octahedral", "6", "3"),
        ("icosahedral", "12", "6"),
    ] {
        out.push(CatalogEntry::new(
            family,
            InstanceFile::p1_group(family, None),
            delta,
            Some(alpha),
            "uniformly-k-stable",
        ));
    }
    out.push(CatalogEntry::new(
        "logpair-2-3-5",
        InstanceFile::p1_logpair(&[2, 3, 5]),
        "12",
        Some("6"),
        "uniformly-k-stable",
    ));
    out.push(CatalogEntry::new(
        "synthetic-uniform",
        synthetic_square(json!([{"gen": [-1, 0], "a": 1}, {"gen": [0, -1], "a": 1}])),
        "2",
        None,
        "uniformly-k-stable",
    ));
    out.push(CatalogEntry::new(
        "empty-fan",
        synthetic_square(json!([])),
        "inf",
        Some("inf"),
        "vacuous",
    ));
    out.push(CatalogEntry::new(
        "rank1-segment",
        rank_one_segment(),
        "4/3",
        None,
        "uniformly-k-stable",
    ));
    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SelftestOutcome {
    pub checked: usize,
    pub failures: Vec<String>,
    pub warnings: Vec<String>,
}

impl SelftestOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates entries in parallel; results come back in input order.
pub fn evaluate_all(entries: &[CatalogEntry]) -> Vec<(String, Result<StabilityReport>)> {
    entries
        .par_iter()
        .map(|e| (e.id.clone(), e.evaluate()))
        .collect()
}

fn check(entry: &CatalogEntry, result: &Result<StabilityReport>) -> Vec<String> {
    let id = &entry.id;
    let r = match result {
        Ok(r) => r,
        Err(e) => return vec![format!("{id}: evaluation failed: {e}")],
    };
    let exp = &entry.expected;
    let mut out = Vec::new();
    if r.delta != exp.delta {
        out.push(format!(
            "{id}: delta expected {}, got {}",
            exp.delta, r.delta
        ));
    }
    if let Some(a) = &exp.alpha {
        if r.alpha.as_ref() != Some(a) {
            out.push(format!(
                "{id}: alpha expected {a}, got {}",
                r.alpha.as_deref().unwrap_or("null")
            ));
        }
    }
    if r.verdict != exp.verdict {
        out.push(format!(
            "{id}: verdict expected {}, got {}",
            exp.verdict, r.verdict
        ));
    }
    out
}

/// Recomputes every entry and compares with its stored expectations.
pub fn selftest(entries: &[CatalogEntry]) -> SelftestOutcome {
    let mut outcome = SelftestOutcome {
        checked: entries.len(),
        ..Default::default()
    };
    if entries.is_empty() {
        outcome
            .warnings
            .push("catalog is empty; nothing to check".into());
        return outcome;
    }
    let results = evaluate_all(entries);
    for (entry, (_, result)) in entries.iter().zip(&results) {
        outcome.failures.extend(check(entry, result));
    }
    outcome
}
