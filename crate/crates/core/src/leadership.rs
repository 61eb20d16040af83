//! Tuple-dependent acceptance probabilities and the hub analysis built on
//! them.
//!
//! A [`ProbabilityTable`] maps vertex tuples to acceptance probabilities
//! with a default for everything unlisted. Generation with a table reduces
//! to the constant-probability process when the table has no entries, draw
//! for draw. The hub analysis compares vertices pairwise: V beats a rival W
//! in context T when the tuple {V} + T has strictly higher probability than
//! {W} + T, and hub status demands a strict win share against every rival.
//! All threshold comparisons are exact integer arithmetic; no percentages
//! are ever rounded.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;

use crate::complex::{Limits, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::random::run_level_process;

/// Sparse acceptance probabilities keyed by canonical vertex tuples of size
/// 2..=max_dim+1, with a default for unlisted tuples. Lookup order never
/// matters.
#[derive(Clone, Debug, PartialEq)]
pub struct ProbabilityTable {
    max_dim: usize,
    default_p: f64,
    entries: BTreeMap<Vec<VertexId>, f64>,
}

fn check_probability(p: f64) -> Result<()> {
    if !p.is_finite() || !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p));
    }
    Ok(())
}

impl ProbabilityTable {
    pub fn new(max_dim: usize, default_p: f64) -> Result<Self> {
        let limits = Limits::default();
        if max_dim == 0 {
            return Err(Error::InvalidTable(
                "max_dim must be at least 1".into(),
            ));
        }
        limits.check_dimension(max_dim)?;
        check_probability(default_p)?;
        Ok(Self {
            max_dim,
            default_p,
            entries: BTreeMap::new(),
        })
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn default_p(&self) -> f64 {
        self.default_p
    }

    /// Adds one tuple in any order. Rejects repeated vertices, sizes outside
    /// 2..=max_dim+1, probabilities outside [0, 1], and tuples already
    /// present (in any order).
    pub fn insert_entry(&mut self, tuple: &[u32], p: f64) -> Result<()> {
        check_probability(p)?;
        if tuple.len() < 2 || tuple.len() > self.max_dim + 1 {
            return Err(Error::InvalidTable(format!(
                "tuple size {} is outside 2..={}",
                tuple.len(),
                self.max_dim + 1
            )));
        }
        let mut key: Vec<VertexId> = tuple.iter().copied().map(VertexId).collect();
        key.sort_unstable();
        if let Some(w) = key.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidTable(format!(
                "vertex {} repeats in the tuple",
                w[0]
            )));
        }
        if self.entries.contains_key(&key) {
            return Err(Error::InvalidTable(format!(
                "duplicate tuple {:?}",
                key.iter().map(|v| v.id()).collect::<Vec<_>>()
            )));
        }
        self.entries.insert(key, p);
        Ok(())
    }

    /// The probability for a tuple, in any vertex order.
    pub fn lookup(&self, tuple: &[VertexId]) -> f64 {
        let mut key = tuple.to_vec();
        key.sort_unstable();
        self.entries.get(&key).copied().unwrap_or(self.default_p)
    }

    /// All listed tuples in canonical order.
    pub fn entries(&self) -> impl Iterator<Item = (&[VertexId], f64)> + '_ {
        self.entries.iter().map(|(k, &p)| (k.as_slice(), p))
    }
}

/// Samples the level process on n vertices with per-tuple probabilities.
/// With an entryless table this equals [`crate::random::generate`] at the
/// same seed, draw for draw.
pub fn generate_hierarchical(
    n: u32,
    max_dim: usize,
    table: &ProbabilityTable,
    seed: u64,
) -> Result<SimplicialComplex> {
    let limits = Limits::default();
    limits.check_vertex_count(n as usize)?;
    limits.check_dimension(max_dim)?;
    let mut c = SimplicialComplex::with_vertices(n);
    run_level_process(&mut c, max_dim, seed, |_, s| table.lookup(s.vertices()));
    Ok(c)
}

/// One hub question: does `vertex` beat every rival on strictly more than
/// t percent of the size-k contexts?
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct HubQuery {
    pub vertex: VertexId,
    pub k: usize,
    pub t: u8,
}

/// The answer with its evidence: the context count per rival and the number
/// of contexts the queried vertex wins against each rival, in universe
/// order.
#[derive(Clone, Debug, PartialEq)]
pub struct HubReport {
    pub is_hub: bool,
    pub subsets_per_rival: u64,
    pub rival_counts: Vec<(VertexId, u64)>,
}

fn binomial(n: usize, k: usize) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc.checked_mul((n - k + i) as u128)?;
        acc /= i as u128;
    }
    u64::try_from(acc).ok()
}

fn validate_universe(universe: &[VertexId], k: usize) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidConfig(
            "context size k must be at least 1".into(),
        ));
    }
    let distinct: BTreeSet<VertexId> = universe.iter().copied().collect();
    if distinct.len() != universe.len() {
        return Err(Error::InvalidConfig(
            "the universe must not repeat vertices".into(),
        ));
    }
    if universe.len() < k + 2 {
        return Err(Error::UniverseTooSmall {
            need: k + 2,
            got: universe.len(),
        });
    }
    binomial(universe.len() - 2, k).ok_or_else(|| {
        Error::LimitExceeded(format!(
            "C({}, {k}) contexts do not fit in 64 bits",
            universe.len() - 2
        ))
    })
}

/// Evaluates one hub question. The win-share comparison
/// `wins * 100 > t * contexts` is exact in integers.
pub fn is_hub(table: &ProbabilityTable, universe: &[VertexId], query: &HubQuery) -> Result<HubReport> {
    if query.t > 100 {
        return Err(Error::InvalidConfig(format!(
            "threshold t must be at most 100, got {}",
            query.t
        )));
    }
    let total = validate_universe(universe, query.k)?;
    if !universe.contains(&query.vertex) {
        return Err(Error::MissingVertex(query.vertex.id()));
    }
    let rival_counts = rival_win_counts(table, universe, query.vertex, query.k);
    let is_hub = rival_counts
        .iter()
        .all(|&(_, wins)| (wins as u128) * 100 > (query.t as u128) * (total as u128));
    Ok(HubReport {
        is_hub,
        subsets_per_rival: total,
        rival_counts,
    })
}

fn rival_win_counts(
    table: &ProbabilityTable,
    universe: &[VertexId],
    v: VertexId,
    k: usize,
) -> Vec<(VertexId, u64)> {
    universe
        .iter()
        .copied()
        .filter(|&w| w != v)
        .map(|w| {
            let pool: Vec<VertexId> = universe
                .iter()
                .copied()
                .filter(|&x| x != v && x != w)
                .collect();
            let wins = pool
                .iter()
                .copied()
                .combinations(k)
                .filter(|context| {
                    let mut mine = context.clone();
                    mine.push(v);
                    let mut theirs = context.clone();
                    theirs.push(w);
                    table.lookup(&mine) > table.lookup(&theirs)
                })
                .count() as u64;
            (w, wins)
        })
        .collect()
}

/// For every vertex, the largest threshold t at which it is a (k, t)-hub,
/// or None when no threshold works. Sorted by threshold descending, then by
/// id, with the hopeless vertices last.
pub fn hub_profile(
    table: &ProbabilityTable,
    universe: &[VertexId],
    k: usize,
) -> Result<Vec<(VertexId, Option<u8>)>> {
    let total = validate_universe(universe, k)?;
    let profile_of = |&v: &VertexId| {
        let min_wins = rival_win_counts(table, universe, v, k)
            .into_iter()
            .map(|(_, wins)| wins)
            .min()
            .expect("the universe always holds at least one rival");
        // wins * 100 > t * total has a solution iff the vertex wins at
        // least once against every rival; the largest one is
        // ceil(100 * wins / total) - 1
        let t_max = if min_wins == 0 {
            None
        } else {
            Some(((100 * (min_wins as u128) - 1) / (total as u128)) as u8)
        };
        (v, t_max)
    };
    #[cfg(feature = "parallel")]
    let mut profile: Vec<(VertexId, Option<u8>)> = {
        use rayon::prelude::*;
        universe.par_iter().map(profile_of).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut profile: Vec<(VertexId, Option<u8>)> = universe.iter().map(profile_of).collect();
    profile.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    Ok(profile)
}
