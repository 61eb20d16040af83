//! Abstract simplicial complexes with closure-maintaining mutation.
//!
//! A complex stores its full face-closed simplex set, grouped by dimension,
//! because both the level-by-level generators and the boundary matrices
//! need direct enumeration of every k-simplex in canonical order.

use std::collections::BTreeSet;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex identifier. The total order on ids is the canonical simplex
/// ordering used everywhere (candidate iteration, matrix rows, documents).
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, Default,
)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn id(self) -> u32 {
        self.0
    }
}

impl std::fmt::Display for VertexId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A simplex in canonical form: a strictly ascending, non-empty vertex list.
/// Two simplexes are equal iff their vertex sequences are equal, and the
/// derived ordering (lexicographic on the sequence) is the canonical order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<VertexId>,
}

impl Simplex {
    /// Builds a simplex, requiring canonical form.
    pub fn new(vertices: Vec<VertexId>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::InvalidSimplex("empty vertex list".into()));
        }
        for w in vertices.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidSimplex(format!(
                    "vertex list must be strictly ascending, got {} then {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(Self { vertices })
    }

    /// Builds a simplex from raw ids, requiring canonical form.
    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Result<Self> {
        Self::new(ids.into_iter().map(VertexId).collect())
    }

    /// The 0-simplex on a single vertex.
    pub fn vertex(v: VertexId) -> Self {
        Self { vertices: vec![v] }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_ids(&self) -> Vec<u32> {
        self.vertices.iter().map(|v| v.0).collect()
    }

    /// Dimension is one less than the vertex count.
    pub fn dimension(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// True iff self's vertex set is a subset of other's.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        if self.vertices.len() > other.vertices.len() {
            return false;
        }
        self.vertices.iter().all(|v| other.contains_vertex(*v))
    }

    /// The faces of dimension one lower, in the order of the omitted index.
    /// A 0-simplex has no faces.
    pub fn faces(&self) -> Vec<Simplex> {
        if self.vertices.len() == 1 {
            return Vec::new();
        }
        (0..self.vertices.len())
            .map(|omit| {
                let mut vs = self.vertices.clone();
                vs.remove(omit);
                Simplex { vertices: vs }
            })
            .collect()
    }

    /// Every non-empty subset of the vertex set, self included.
    pub fn iterated_faces(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for size in 1..=self.vertices.len() {
            for combo in self.vertices.iter().copied().combinations(size) {
                out.push(Simplex { vertices: combo });
            }
        }
        out
    }

    /// The simplex extended by one vertex strictly above all current ones.
    /// Internal fast path for candidate enumeration.
    fn extended_above(&self, v: VertexId) -> Simplex {
        debug_assert!(*self.vertices.last().expect("non-empty") < v);
        let mut vs = Vec::with_capacity(self.vertices.len() + 1);
        vs.extend_from_slice(&self.vertices);
        vs.push(v);
        Simplex { vertices: vs }
    }
}

impl std::fmt::Display for Simplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}]", self.vertices.iter().join(","))
    }
}

/// Size caps applied at configuration and document boundaries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_dimension: usize,
    pub max_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_dimension: 16,
            max_vertices: 1_000_000,
        }
    }
}

impl Limits {
    pub fn check_dimension(&self, dim: usize) -> Result<()> {
        if dim > self.max_dimension {
            return Err(Error::LimitExceeded(format!(
                "dimension {dim} above the cap of {}",
                self.max_dimension
            )));
        }
        Ok(())
    }

    pub fn check_vertex_count(&self, count: usize) -> Result<()> {
        if count > self.max_vertices {
            return Err(Error::LimitExceeded(format!(
                "{count} vertices above the cap of {}",
                self.max_vertices
            )));
        }
        Ok(())
    }
}

/// A finite abstract simplicial complex.
///
/// Invariant (CLOSURE): every face of every stored simplex is stored. All
/// mutating methods preserve it; there is no raw mutation path.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimplicialComplex {
    // levels[k] holds the k-simplexes; no trailing empty level is kept.
    levels: Vec<BTreeSet<Simplex>>,
}

impl SimplicialComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// A complex of n isolated vertices with ids 0..n.
    pub fn with_vertices(n: u32) -> Self {
        let mut c = Self::new();
        for v in 0..n {
            c.insert(Simplex::vertex(VertexId(v)));
        }
        c
    }

    /// Max simplex dimension, or -1 for the empty complex.
    pub fn dimension(&self) -> i32 {
        self.levels.len() as i32 - 1
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.levels
            .get(s.dimension())
            .is_some_and(|level| level.contains(s))
    }

    pub fn simplex_count(&self) -> usize {
        self.levels.iter().map(BTreeSet::len).sum()
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.first().map_or(0, BTreeSet::len)
    }

    /// All simplexes, dimension ascending, lexicographic within a dimension.
    pub fn simplexes(&self) -> impl Iterator<Item = &Simplex> {
        self.levels.iter().flatten()
    }

    /// The k-simplexes in lexicographic order.
    pub fn simplexes_of_dim(&self, k: usize) -> impl Iterator<Item = &Simplex> {
        self.levels.get(k).into_iter().flatten()
    }

    /// The vertex ids, ascending.
    pub fn vertices(&self) -> impl DoubleEndedIterator<Item = VertexId> + '_ {
        self.levels.first().into_iter().flatten().map(|s| s.vertices()[0])
    }

    pub fn max_vertex_id(&self) -> Option<VertexId> {
        self.vertices().next_back()
    }

    /// Inserts s and every face of s. Idempotent.
    pub fn insert(&mut self, s: Simplex) {
        let dim = s.dimension();
        if self.contains(&s) {
            return;
        }
        while self.levels.len() <= dim {
            self.levels.push(BTreeSet::new());
        }
        for face in s.iterated_faces() {
            self.levels[face.dimension()].insert(face);
        }
    }

    /// Fast path for simplexes whose boundary is already present.
    fn insert_boundary_complete(&mut self, s: Simplex) {
        let dim = s.dimension();
        debug_assert!(s.faces().iter().all(|f| self.contains(f)));
        while self.levels.len() <= dim {
            self.levels.push(BTreeSet::new());
        }
        self.levels[dim].insert(s);
    }

    /// Removes s and every simplex having s as an iterated face.
    /// Removing an absent simplex is a no-op. CLOSURE is preserved because
    /// any kept simplex with a removed face would itself contain s.
    pub fn remove(&mut self, s: &Simplex) {
        if !self.contains(s) {
            return;
        }
        for level in &mut self.levels[s.dimension()..] {
            level.retain(|t| !s.is_face_of(t));
        }
        self.trim_levels();
    }

    /// Removes every simplex that contains any member of `marked` as an
    /// iterated face, in one pass. Returns the removed simplexes in
    /// canonical order. Used by the deletion phase of the evolution step,
    /// where all marks are sampled before any cascade runs.
    pub(crate) fn remove_all(&mut self, marked: &BTreeSet<Simplex>) -> Vec<Simplex> {
        let min_dim = match marked.iter().map(Simplex::dimension).min() {
            Some(d) => d,
            None => return Vec::new(),
        };
        let mut removed = Vec::new();
        for level in &mut self.levels[min_dim..] {
            level.retain(|t| {
                let hit = marked.iter().any(|m| m.is_face_of(t));
                if hit {
                    removed.push(t.clone());
                }
                !hit
            });
        }
        self.trim_levels();
        removed.sort();
        removed
    }

    fn trim_levels(&mut self) {
        while self.levels.last().is_some_and(BTreeSet::is_empty) {
            self.levels.pop();
        }
    }

    /// The subcomplex of all simplexes of dimension <= k.
    pub fn k_skeleton(&self, k: usize) -> Self {
        let end = (k + 1).min(self.levels.len());
        Self {
            levels: self.levels[..end].to_vec(),
        }
    }

    /// Every k-simplex absent from the complex whose full (k-1)-boundary is
    /// present, in lexicographic order. For k = 1 these are the absent edges
    /// over present vertices.
    ///
    /// Each candidate is found through its prefix face (the face omitting
    /// the largest vertex), so every candidate is visited exactly once.
    pub fn candidate_simplexes(&self, k: usize) -> Vec<Simplex> {
        assert!(k >= 1, "candidate level must be at least 1");
        let mut out = Vec::new();
        let Some(below) = self.levels.get(k - 1) else {
            return out;
        };
        let vertices: Vec<VertexId> = self.vertices().collect();
        for prefix in below {
            let top = *prefix.vertices().last().expect("non-empty");
            let start = vertices.partition_point(|v| *v <= top);
            for &v in &vertices[start..] {
                let cand = prefix.extended_above(v);
                if self.contains(&cand) {
                    continue;
                }
                let boundary_complete = cand
                    .faces()
                    .iter()
                    .take(k) // the last face is the prefix itself
                    .all(|f| below.contains(f));
                if boundary_complete {
                    out.push(cand);
                }
            }
        }
        out.sort();
        out
    }

    /// Simplex counts per dimension; empty for the empty complex.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(BTreeSet::len).collect()
    }

    /// Alternating sum of the f-vector.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(k, &count)| {
                let signed = count as i64;
                if k % 2 == 0 {
                    signed
                } else {
                    -signed
                }
            })
            .sum()
    }

    /// Simplexes with no proper coface, in canonical lexicographic order.
    /// A k-simplex is covered iff it is a face of some (k+1)-simplex.
    pub fn maximal_simplexes(&self) -> Vec<Simplex> {
        let mut out = Vec::new();
        for (k, level) in self.levels.iter().enumerate() {
            let covered: BTreeSet<Simplex> = self
                .levels
                .get(k + 1)
                .into_iter()
                .flatten()
                .flat_map(Simplex::faces)
                .collect();
            out.extend(level.iter().filter(|s| !covered.contains(*s)).cloned());
        }
        out.sort();
        out
    }

    /// Partition of the vertex set by 1-skeleton connectivity, each class
    /// ascending, classes ordered by smallest member.
    pub fn vertex_components(&self) -> Vec<Vec<VertexId>> {
        let vertices: Vec<VertexId> = self.vertices().collect();
        let index: std::collections::BTreeMap<VertexId, usize> =
            vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut uf = UnionFind::new(vertices.len());
        for edge in self.simplexes_of_dim(1) {
            let vs = edge.vertices();
            uf.union(index[&vs[0]], index[&vs[1]]);
        }
        let mut classes: std::collections::BTreeMap<usize, Vec<VertexId>> =
            std::collections::BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            classes.entry(uf.find(i)).or_default().push(*v);
        }
        let mut out: Vec<Vec<VertexId>> = classes.into_values().collect();
        out.sort_by_key(|class| class[0]);
        out
    }
}

/// Plain union-find with path halving, used for component partitions.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Inserts a boundary-complete candidate without a closure walk.
/// Exposed within the crate for the level-process generators.
pub(crate) fn accept_candidate(c: &mut SimplicialComplex, s: Simplex) {
    c.insert_boundary_complete(s);
}
