//! Connectivity beyond the graph level: q-overlap components, round-by-round
//! diffusion, and entry/exit probe matrices.
//!
//! Two simplexes overlap at level q when they share a full q-face, i.e. at
//! least q+1 vertices. Chains of such overlaps partition the simplexes of
//! dimension >= q; those classes are often coarser than graph components
//! and finer than the vertex partition suggests.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use serde::Serialize;

use crate::complex::{Simplex, SimplicialComplex, UnionFind, VertexId};
use crate::error::{Error, Result};

/// The partition of all simplexes of dimension >= q into chain-overlap
/// classes. Classes and their members are in canonical order.
#[derive(Clone, Debug, PartialEq)]
pub struct QComponents {
    pub q: usize,
    pub classes: Vec<Vec<Simplex>>,
}

/// Partitions the simplexes of dimension >= q by chains of shared q-faces.
/// Every simplex is linked to each of its q-faces, which are themselves in
/// the complex and carry the connectivity: two simplexes sharing a q-face
/// meet at that face.
pub fn q_components(c: &SimplicialComplex, q: usize) -> QComponents {
    let members: Vec<&Simplex> = c.simplexes().filter(|s| s.dimension() >= q).collect();
    let index: BTreeMap<&Simplex, usize> = members.iter().copied().zip(0..).collect();
    let mut uf = UnionFind::new(members.len());
    for (i, s) in members.iter().enumerate() {
        if s.dimension() == q {
            continue;
        }
        for face_vertices in s.vertices().iter().copied().combinations(q + 1) {
            let face = Simplex::new(face_vertices).expect("subsets of a simplex are canonical");
            let j = index[&face];
            uf.union(i, j);
        }
    }
    let mut by_root: BTreeMap<usize, Vec<Simplex>> = BTreeMap::new();
    for (i, s) in members.iter().enumerate() {
        by_root.entry(uf.find(i)).or_default().push((*s).clone());
    }
    let mut classes: Vec<Vec<Simplex>> = by_root.into_values().collect();
    classes.sort_by(|a, b| a[0].cmp(&b[0]));
    QComponents { q, classes }
}

/// How a message starting at `source` spreads one hop per round: the hop
/// distance to `target` (None when unreachable) and the number of vertices
/// first reached in each round, starting with the source's own round.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DiffusionReport {
    pub source: VertexId,
    pub target: VertexId,
    pub hop_count: Option<u32>,
    pub rounds: Vec<usize>,
}

fn adjacency(c: &SimplicialComplex, level: usize) -> BTreeMap<VertexId, BTreeSet<VertexId>> {
    let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for s in c.simplexes_of_dim(level) {
        for pair in s.vertices().iter().copied().combinations(2) {
            adj.entry(pair[0]).or_default().insert(pair[1]);
            adj.entry(pair[1]).or_default().insert(pair[0]);
        }
    }
    adj
}

fn bfs(
    adj: &BTreeMap<VertexId, BTreeSet<VertexId>>,
    source: VertexId,
) -> (BTreeMap<VertexId, u32>, Vec<usize>) {
    let mut dist = BTreeMap::new();
    dist.insert(source, 0u32);
    let mut rounds = vec![1];
    let mut frontier = vec![source];
    let mut depth = 0u32;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for v in &frontier {
            if let Some(neighbors) = adj.get(v) {
                for &n in neighbors {
                    if let std::collections::btree_map::Entry::Vacant(e) = dist.entry(n) {
                        e.insert(depth);
                        next.push(n);
                    }
                }
            }
        }
        if !next.is_empty() {
            rounds.push(next.len());
        }
        frontier = next;
    }
    (dist, rounds)
}

fn require_vertex(c: &SimplicialComplex, v: VertexId) -> Result<()> {
    if !c.contains(&Simplex::vertex(v)) {
        return Err(Error::MissingVertex(v.id()));
    }
    Ok(())
}

/// Floods from `source` along edges, one hop per round, until nothing new
/// is reached. The flood always runs to completion; the target only marks
/// which distance to report.
pub fn diffusion(c: &SimplicialComplex, source: VertexId, target: VertexId) -> Result<DiffusionReport> {
    diffusion_min_dim(c, source, target, 1)
}

/// Like [`diffusion`], but messages only travel inside simplexes of
/// dimension at least `min_dim`: two vertices are adjacent when some
/// simplex of that dimension contains both. Since every larger simplex
/// carries faces of dimension `min_dim`, scanning exactly that level
/// captures all of them.
pub fn diffusion_min_dim(
    c: &SimplicialComplex,
    source: VertexId,
    target: VertexId,
    min_dim: usize,
) -> Result<DiffusionReport> {
    if min_dim == 0 {
        return Err(Error::InvalidConfig(
            "diffusion needs a channel dimension of at least 1".into(),
        ));
    }
    require_vertex(c, source)?;
    require_vertex(c, target)?;
    let adj = adjacency(c, min_dim);
    let (dist, rounds) = bfs(&adj, source);
    Ok(DiffusionReport {
        source,
        target,
        hop_count: dist.get(&target).copied(),
        rounds,
    })
}

/// Hop distances from every entry vertex to every exit vertex along edges;
/// None marks an unreachable pair. Row i belongs to `entries[i]`, column j
/// to `exits[j]`.
pub fn probe_matrix(
    c: &SimplicialComplex,
    entries: &[VertexId],
    exits: &[VertexId],
) -> Result<Vec<Vec<Option<u32>>>> {
    for &v in entries.iter().chain(exits) {
        require_vertex(c, v)?;
    }
    let adj = adjacency(c, 1);
    Ok(entries
        .iter()
        .map(|&entry| {
            let (dist, _) = bfs(&adj, entry);
            exits.iter().map(|exit| dist.get(exit).copied()).collect()
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sx(ids: &[u32]) -> Simplex {
        Simplex::from_ids(ids.iter().copied()).unwrap()
    }

    fn complex_of(simplexes: &[&[u32]]) -> SimplicialComplex {
        let mut c = SimplicialComplex::new();
        for ids in simplexes {
            c.insert(sx(ids));
        }
        c
    }

    fn class_ids(classes: &[Vec<Simplex>]) -> Vec<Vec<Vec<u32>>> {
        classes
            .iter()
            .map(|class| class.iter().map(Simplex::vertex_ids).collect())
            .collect()
    }

    #[test]
    fn every_simplex_of_a_triangle_chains_at_level_zero() {
        let qc = q_components(&complex_of(&[&[0, 1, 2]]), 0);
        assert_eq!(qc.classes.len(), 1);
        assert_eq!(qc.classes[0].len(), 7);
    }

    #[test]
    fn hollow_triangle_edges_never_share_an_edge() {
        let hollow = complex_of(&[&[0, 1], &[0, 2], &[1, 2]]);
        let qc = q_components(&hollow, 1);
        assert_eq!(
            class_ids(&qc.classes),
            vec![vec![vec![0, 1]], vec![vec![0, 2]], vec![vec![1, 2]]]
        );
    }

    #[test]
    fn a_filled_triangle_chains_through_its_face() {
        let qc = q_components(&complex_of(&[&[0, 1, 2]]), 1);
        assert_eq!(qc.classes.len(), 1);
        assert_eq!(qc.classes[0].len(), 4);
    }

    #[test]
    fn triangles_sharing_one_vertex_stay_apart_at_level_one() {
        let c = complex_of(&[&[0, 1, 2], &[2, 3, 4]]);
        let qc = q_components(&c, 1);
        assert_eq!(qc.classes.len(), 2);
        assert_eq!(qc.classes[0].len(), 4);
        assert_eq!(qc.classes[1].len(), 4);
        // at the vertex level they merge
        assert_eq!(q_components(&c, 0).classes.len(), 1);
    }

    #[test]
    fn triangles_sharing_an_edge_chain_at_level_one() {
        let c = complex_of(&[&[0, 1, 2], &[1, 2, 3]]);
        let qc = q_components(&c, 1);
        assert_eq!(qc.classes.len(), 1);
        assert_eq!(qc.classes[0].len(), 7);
        // but never at level two
        let qc2 = q_components(&c, 2);
        assert_eq!(
            class_ids(&qc2.classes),
            vec![vec![vec![0, 1, 2]], vec![vec![1, 2, 3]]]
        );
    }

    #[test]
    fn overlap_above_the_dimension_is_empty() {
        let qc = q_components(&complex_of(&[&[0, 1]]), 2);
        assert!(qc.classes.is_empty());
    }

    #[test]
    fn path_diffusion_counts_hops_and_rounds() {
        let path = complex_of(&[&[0, 1], &[1, 2]]);
        let report = diffusion(&path, VertexId(0), VertexId(2)).unwrap();
        assert_eq!(report.hop_count, Some(2));
        assert_eq!(report.rounds, vec![1, 1, 1]);
    }

    #[test]
    fn source_equals_target() {
        let path = complex_of(&[&[0, 1], &[1, 2]]);
        let report = diffusion(&path, VertexId(1), VertexId(1)).unwrap();
        assert_eq!(report.hop_count, Some(0));
        // the flood still covers the whole component
        assert_eq!(report.rounds, vec![1, 2]);
    }

    #[test]
    fn unreachable_targets_report_none_but_flood_anyway() {
        let two = complex_of(&[&[0, 1], &[2, 3]]);
        let report = diffusion(&two, VertexId(0), VertexId(2)).unwrap();
        assert_eq!(report.hop_count, None);
        assert_eq!(report.rounds, vec![1, 1]);
    }

    #[test]
    fn wider_channels_restrict_the_flood() {
        let c = complex_of(&[&[0, 1, 2], &[2, 3], &[3, 4]]);
        let plain = diffusion(&c, VertexId(0), VertexId(4)).unwrap();
        assert_eq!(plain.hop_count, Some(3));
        let wide = diffusion_min_dim(&c, VertexId(0), VertexId(4), 2).unwrap();
        assert_eq!(wide.hop_count, None);
        assert_eq!(wide.rounds, vec![1, 2]);
        let inside = diffusion_min_dim(&c, VertexId(0), VertexId(1), 2).unwrap();
        assert_eq!(inside.hop_count, Some(1));
    }

    #[test]
    fn probe_matrix_on_a_path() {
        let path = complex_of(&[&[0, 1], &[1, 2]]);
        let probes = vec![VertexId(0), VertexId(2)];
        let matrix = probe_matrix(&path, &probes, &probes).unwrap();
        assert_eq!(
            matrix,
            vec![vec![Some(0), Some(2)], vec![Some(2), Some(0)]]
        );
    }

    #[test]
    fn probe_matrix_on_a_star() {
        let star = complex_of(&[&[0, 1], &[0, 2], &[0, 3], &[0, 4]]);
        let exits: Vec<VertexId> = (1..=4).map(VertexId).collect();
        let matrix = probe_matrix(&star, &[VertexId(0)], &exits).unwrap();
        assert_eq!(matrix, vec![vec![Some(1); 4]]);
        let single = probe_matrix(&star, &[VertexId(0)], &[VertexId(0)]).unwrap();
        assert_eq!(single, vec![vec![Some(0)]]);
    }

    #[test]
    fn vertices_must_exist() {
        let path = complex_of(&[&[0, 1]]);
        assert!(matches!(
            diffusion(&path, VertexId(0), VertexId(9)),
            Err(Error::MissingVertex(9))
        ));
        assert!(diffusion_min_dim(&path, VertexId(0), VertexId(1), 0).is_err());
        assert!(probe_matrix(&path, &[VertexId(9)], &[VertexId(0)]).is_err());
    }

    #[test]
    fn isolated_source_floods_only_itself() {
        let c = complex_of(&[&[0], &[1, 2]]);
        let report = diffusion(&c, VertexId(0), VertexId(2)).unwrap();
        assert_eq!(report.hop_count, None);
        assert_eq!(report.rounds, vec![1]);
    }
}
