//! Canonical document formats and their loaders.
//!
//! Complexes are stored by their maximal simplexes of dimension >= 1 plus
//! the full vertex list, which is compact and face-closed by construction.
//! All writers emit a canonical form (ascending ids, lexicographic tuple
//! order, fixed field order, pretty JSON, trailing newline) so equal inputs
//! produce byte-identical files on every platform.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::complex::{Limits, Simplex, SimplicialComplex, VertexId};
use crate::dynamics::{EvolutionSchedule, EvolutionTrace, PHASE_ORDER};
use crate::error::{Error, Result};
use crate::leadership::ProbabilityTable;
use crate::random::RealizationDistribution;

pub const FORMAT_VERSION: &str = "1";

/// Serializes any document in the canonical pretty style.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents always serialize");
    s.push('\n');
    s
}

// ---------------------------------------------------------------------------
// complex documents
// ---------------------------------------------------------------------------

/// The on-disk form of a complex: every vertex id plus the maximal
/// simplexes of dimension >= 1 (isolated vertices are carried by
/// `vertices` alone).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub format_version: String,
    pub vertices: Vec<u32>,
    pub maximal_simplexes: Vec<Vec<u32>>,
}

impl ComplexDocument {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            vertices: c.vertices().map(VertexId::id).collect(),
            maximal_simplexes: c
                .maximal_simplexes()
                .into_iter()
                .filter(|s| s.dimension() >= 1)
                .map(|s| s.vertex_ids())
                .collect(),
        }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex> {
        self.validate()?;
        let mut c = SimplicialComplex::new();
        for &v in &self.vertices {
            c.insert(Simplex::vertex(VertexId(v)));
        }
        for ids in &self.maximal_simplexes {
            c.insert(Simplex::from_ids(ids.iter().copied()).expect("validated above"));
        }
        Ok(c)
    }

    fn validate(&self) -> Result<()> {
        let limits = Limits::default();
        if self.format_version != FORMAT_VERSION {
            return Err(Error::InvalidDocument(format!(
                "format_version: unsupported value {:?}",
                self.format_version
            )));
        }
        for (i, w) in self.vertices.windows(2).enumerate() {
            if w[0] >= w[1] {
                return Err(Error::InvalidDocument(format!(
                    "vertices[{}]: ids must be strictly ascending, got {} then {}",
                    i + 1,
                    w[0],
                    w[1]
                )));
            }
        }
        limits.check_vertex_count(self.vertices.len())?;
        let vertex_set: BTreeSet<u32> = self.vertices.iter().copied().collect();
        let mut seen: BTreeSet<&[u32]> = BTreeSet::new();
        for (i, ids) in self.maximal_simplexes.iter().enumerate() {
            let at = |msg: String| Error::InvalidDocument(format!("maximal_simplexes[{i}]: {msg}"));
            if ids.len() < 2 {
                return Err(at("a maximal simplex needs at least 2 vertices".into()));
            }
            if ids.len() - 1 > limits.max_dimension {
                return Err(at(format!(
                    "dimension {} above the cap of {}",
                    ids.len() - 1,
                    limits.max_dimension
                )));
            }
            for w in ids.windows(2) {
                if w[0] >= w[1] {
                    return Err(at(format!(
                        "ids must be strictly ascending, got {} then {}",
                        w[0], w[1]
                    )));
                }
            }
            for &v in ids {
                if !vertex_set.contains(&v) {
                    return Err(at(format!("vertex {v} is not listed in vertices")));
                }
            }
            if !seen.insert(ids) {
                return Err(at("duplicate simplex".into()));
            }
        }
        Ok(())
    }
}

/// Canonical pretty JSON for a complex.
pub fn write_complex(c: &SimplicialComplex) -> String {
    to_json_pretty(&ComplexDocument::from_complex(c))
}

/// Parses and validates a complex document.
pub fn read_complex(json: &str) -> Result<SimplicialComplex> {
    let doc: ComplexDocument = serde_json::from_str(json)?;
    doc.to_complex()
}

/// Compact canonical encoding, used as the frequency-table key for
/// empirical distributions. Equal complexes always produce equal keys.
pub fn canonical_key(c: &SimplicialComplex) -> String {
    serde_json::to_string(&ComplexDocument::from_complex(c)).expect("documents always serialize")
}

// ---------------------------------------------------------------------------
// probability tables
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub default: f64,
    #[serde(rename = "N")]
    pub max_dim: usize,
    pub entries: Vec<TableEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableEntry {
    pub tuple: Vec<u32>,
    pub p: f64,
}

/// Parses a probability table, canonicalizing tuples to ascending order and
/// rejecting duplicates.
pub fn read_table(json: &str) -> Result<ProbabilityTable> {
    let doc: TableDocument = serde_json::from_str(json)?;
    let mut table = ProbabilityTable::new(doc.max_dim, doc.default)?;
    for (i, entry) in doc.entries.iter().enumerate() {
        table
            .insert_entry(&entry.tuple, entry.p)
            .map_err(|e| Error::InvalidTable(format!("entries[{i}]: {e}")))?;
    }
    Ok(table)
}

/// Canonical pretty JSON for a probability table.
pub fn write_table(table: &ProbabilityTable) -> String {
    let doc = TableDocument {
        default: table.default_p(),
        max_dim: table.max_dim(),
        entries: table
            .entries()
            .map(|(tuple, p)| TableEntry {
                tuple: tuple.iter().map(|v| v.id()).collect(),
                p,
            })
            .collect(),
    };
    to_json_pretty(&doc)
}

// ---------------------------------------------------------------------------
// evolution schedules and traces
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScheduleDocument {
    pub format_version: String,
    pub horizon: u32,
    pub max_dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default)]
    pub default_p_add: f64,
    #[serde(default)]
    pub default_p_del: f64,
    #[serde(default)]
    pub vertex_arrivals: Vec<ArrivalEntry>,
    #[serde(default)]
    pub p_add: Vec<ProbabilityEntry>,
    #[serde(default)]
    pub p_del: Vec<ProbabilityEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrivalEntry {
    pub t: u32,
    pub count: u32,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProbabilityEntry {
    pub t: u32,
    pub dim: usize,
    pub p: f64,
}

/// Parses a schedule document. Returns the schedule (seeded from the file,
/// 0 when absent) together with the file's own seed field so callers can
/// decide whether a command-line seed should override it.
pub fn read_schedule(json: &str) -> Result<(EvolutionSchedule, Option<u64>)> {
    let doc: ScheduleDocument = serde_json::from_str(json)?;
    if doc.format_version != FORMAT_VERSION {
        return Err(Error::InvalidSchedule(format!(
            "format_version: unsupported value {:?}",
            doc.format_version
        )));
    }
    let mut sched = EvolutionSchedule::new(doc.horizon, doc.max_dim);
    sched.seed = doc.seed.unwrap_or(0);
    sched.default_p_add = doc.default_p_add;
    sched.default_p_del = doc.default_p_del;
    for (i, a) in doc.vertex_arrivals.iter().enumerate() {
        if sched.vertex_arrivals.insert(a.t, a.count).is_some() {
            return Err(Error::InvalidSchedule(format!(
                "vertex_arrivals[{i}]: duplicate time {}",
                a.t
            )));
        }
    }
    for (i, e) in doc.p_add.iter().enumerate() {
        if sched.p_add_overrides.insert((e.t, e.dim), e.p).is_some() {
            return Err(Error::InvalidSchedule(format!(
                "p_add[{i}]: duplicate (time, dimension) ({}, {})",
                e.t, e.dim
            )));
        }
    }
    for (i, e) in doc.p_del.iter().enumerate() {
        if sched.p_del_overrides.insert((e.t, e.dim), e.p).is_some() {
            return Err(Error::InvalidSchedule(format!(
                "p_del[{i}]: duplicate (time, dimension) ({}, {})",
                e.t, e.dim
            )));
        }
    }
    sched.validate()?;
    Ok((sched, doc.seed))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TraceDocument {
    pub format_version: String,
    /// Records the fixed within-step phase convention.
    pub phase_order: String,
    pub seed: u64,
    pub states: Vec<ComplexDocument>,
    pub events: Vec<EventRecord>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EventRecord {
    pub t: u32,
    pub added_vertices: Vec<u32>,
    pub removed_simplexes: Vec<Vec<u32>>,
    pub added_simplexes: Vec<Vec<u32>>,
}

impl TraceDocument {
    pub fn from_trace(trace: &EvolutionTrace, seed: u64) -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            phase_order: PHASE_ORDER.to_string(),
            seed,
            states: trace.states.iter().map(ComplexDocument::from_complex).collect(),
            events: trace
                .events
                .iter()
                .map(|ev| EventRecord {
                    t: ev.t,
                    added_vertices: ev.added_vertices.iter().map(|v| v.id()).collect(),
                    removed_simplexes: ev.removed_simplexes.iter().map(Simplex::vertex_ids).collect(),
                    added_simplexes: ev.added_simplexes.iter().map(Simplex::vertex_ids).collect(),
                })
                .collect(),
        }
    }
}

/// Canonical pretty JSON for an evolution trace.
pub fn write_trace(trace: &EvolutionTrace, seed: u64) -> String {
    to_json_pretty(&TraceDocument::from_trace(trace, seed))
}

// ---------------------------------------------------------------------------
// exact distributions
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct DistributionDocument {
    pub format_version: String,
    pub n: u32,
    pub max_dim: usize,
    pub p: String,
    pub entries: Vec<DistributionEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DistributionEntry {
    pub probability: String,
    pub approx: f64,
    pub vertices: Vec<u32>,
    pub maximal_simplexes: Vec<Vec<u32>>,
}

pub fn distribution_document(
    n: u32,
    max_dim: usize,
    p: &BigRational,
    dist: &RealizationDistribution,
) -> DistributionDocument {
    DistributionDocument {
        format_version: FORMAT_VERSION.to_string(),
        n,
        max_dim,
        p: p.to_string(),
        entries: dist
            .entries
            .iter()
            .map(|(c, prob)| {
                let doc = ComplexDocument::from_complex(c);
                DistributionEntry {
                    probability: prob.to_string(),
                    approx: prob.to_f64().unwrap_or(f64::NAN),
                    vertices: doc.vertices,
                    maximal_simplexes: doc.maximal_simplexes,
                }
            })
            .collect(),
    }
}

// ---------------------------------------------------------------------------
// run manifests
// ---------------------------------------------------------------------------

/// Record of one CLI run: command, full configuration, effective seed,
/// output checksums, and tool version. Re-running the same command with the
/// same configuration reproduces the checksummed bytes exactly.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: String,
    pub config: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub artifacts: Vec<ArtifactChecksum>,
    pub tool_version: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ArtifactChecksum {
    pub path: String,
    pub sha256: String,
}
