//! Structural invariants checked over randomized inputs: closure under
//! every mutation path, homology identities, hub threshold semantics,
//! evolution bookkeeping, and document round trips.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use proptest::prelude::*;

use socioplex::analysis::{diffusion, probe_matrix, q_components};
use socioplex::complex::{Simplex, SimplicialComplex, VertexId};
use socioplex::dynamics::{replay, run, EvolutionSchedule};
use socioplex::homology::{betti_numbers, boundary_matrix, dimension_census, CoefficientMode};
use socioplex::io::{read_complex, write_complex};
use socioplex::leadership::{hub_profile, is_hub, HubQuery, ProbabilityTable};
use socioplex::random::{generate, RandomComplexConfig};

fn is_closed(c: &SimplicialComplex) -> bool {
    c.simplexes()
        .all(|s| s.faces().iter().all(|f| c.contains(f)))
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    (0u32..=7, 0usize..=3, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, max_dim, p, seed)| {
        generate(&RandomComplexConfig::new(n, max_dim, p, seed).unwrap()).unwrap()
    })
}

/// A generated complex with a few random simplexes knocked back out, so
/// removal cascades are part of every sampled history.
fn arb_mutated_complex() -> impl Strategy<Value = SimplicialComplex> {
    (
        arb_complex(),
        proptest::collection::vec(any::<prop::sample::Index>(), 0..4),
    )
        .prop_map(|(mut c, picks)| {
            for pick in picks {
                let all: Vec<Simplex> = c.simplexes().cloned().collect();
                if all.is_empty() {
                    break;
                }
                let victim = all[pick.index(all.len())].clone();
                c.remove(&victim);
            }
            c
        })
}

fn arb_table() -> impl Strategy<Value = (ProbabilityTable, u32)> {
    (
        4u32..=7,
        0.0f64..=1.0,
        proptest::collection::vec((any::<prop::sample::Index>(), 0.0f64..=1.0), 0..8),
    )
        .prop_map(|(n, default_p, raw)| {
            let mut table = ProbabilityTable::new(2, default_p).unwrap();
            let mut pairs = Vec::new();
            for a in 0..n {
                for b in (a + 1)..n {
                    pairs.push([a, b]);
                }
            }
            for (pick, p) in raw {
                // duplicate picks are fine, the second insert is rejected
                let _ = table.insert_entry(&pairs[pick.index(pairs.len())], p);
            }
            (table, n)
        })
}

fn reversed(c: &SimplicialComplex) -> SimplicialComplex {
    let top = c.max_vertex_id().map(|v| v.id()).unwrap_or(0);
    let mut out = SimplicialComplex::new();
    for s in c.simplexes() {
        let mut ids: Vec<u32> = s.vertices().iter().map(|v| top - v.id()).collect();
        ids.sort_unstable();
        out.insert(Simplex::from_ids(ids).unwrap());
    }
    out
}

fn even_count(factors: &[BigUint]) -> usize {
    let two = BigUint::from(2u8);
    factors.iter().filter(|f| *f % &two == BigUint::ZERO).count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn generated_and_mutated_complexes_stay_closed(c in arb_mutated_complex()) {
        prop_assert!(is_closed(&c));
    }

    #[test]
    fn insert_then_remove_restores(c in arb_complex(), pick in any::<prop::sample::Index>()) {
        let candidates: Vec<Simplex> = (1..=3).flat_map(|k| c.candidate_simplexes(k)).collect();
        prop_assume!(!candidates.is_empty());
        let s = candidates[pick.index(candidates.len())].clone();
        let mut mutated = c.clone();
        mutated.insert(s.clone());
        prop_assert!(mutated.contains(&s));
        prop_assert!(is_closed(&mutated));
        mutated.remove(&s);
        prop_assert_eq!(mutated, c);
    }

    #[test]
    fn candidates_are_absent_with_complete_boundaries(c in arb_mutated_complex(), k in 1usize..=3) {
        let candidates = c.candidate_simplexes(k);
        let distinct: BTreeSet<&Simplex> = candidates.iter().collect();
        prop_assert_eq!(distinct.len(), candidates.len());
        for cand in &candidates {
            prop_assert_eq!(cand.dimension(), k);
            prop_assert!(!c.contains(cand));
            for face in cand.faces() {
                prop_assert!(c.contains(&face));
            }
        }
    }

    #[test]
    fn boundary_composition_vanishes(c in arb_mutated_complex(), k in 1usize..=3) {
        for mode in [CoefficientMode::Gf2, CoefficientMode::Integer] {
            let d_k = boundary_matrix(&c, k, mode);
            let d_next = boundary_matrix(&c, k + 1, mode);
            prop_assert!(d_k.multiply(&d_next).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn alternating_betti_sum_is_the_euler_characteristic(c in arb_mutated_complex()) {
        for mode in [CoefficientMode::Gf2, CoefficientMode::Integer] {
            let bv = betti_numbers(&c, mode);
            prop_assert_eq!(bv.alternating_sum(), c.euler_characteristic());
            prop_assert_eq!(bv.betti.len() as i32, c.dimension() + 1);
        }
    }

    #[test]
    fn betti_is_invariant_under_relabeling(c in arb_mutated_complex()) {
        let r = reversed(&c);
        for mode in [CoefficientMode::Gf2, CoefficientMode::Integer] {
            prop_assert_eq!(betti_numbers(&c, mode).betti, betti_numbers(&r, mode).betti);
        }
    }

    #[test]
    fn gf2_betti_counts_integer_betti_plus_two_torsion(c in arb_mutated_complex()) {
        let gf2 = betti_numbers(&c, CoefficientMode::Gf2);
        let int = betti_numbers(&c, CoefficientMode::Integer);
        let torsion = int.torsion.as_ref().unwrap();
        for k in 0..gf2.betti.len() {
            let here = even_count(&torsion[k]);
            let below = if k == 0 { 0 } else { even_count(&torsion[k - 1]) };
            prop_assert_eq!(gf2.get(k), int.get(k) + here + below);
        }
    }

    #[test]
    fn b0_counts_components(c in arb_mutated_complex()) {
        let b0 = betti_numbers(&c, CoefficientMode::Gf2).get(0);
        let census = dimension_census(&c);
        prop_assert_eq!(b0, if c.is_empty() { 0 } else { census.len() });
        prop_assert_eq!(census.len(), c.vertex_components().len());
        prop_assert_eq!(census.len(), q_components(&c, 0).classes.len());
        let total: usize = census.iter().map(|r| r.vertex_count).collect::<Vec<_>>().iter().sum();
        prop_assert_eq!(total, c.vertex_count());
    }

    #[test]
    fn q_classes_partition_the_eligible_simplexes(c in arb_mutated_complex(), q in 0usize..=3) {
        let qc = q_components(&c, q);
        let listed: usize = qc.classes.iter().map(Vec::len).sum();
        let eligible = c.simplexes().filter(|s| s.dimension() >= q).count();
        prop_assert_eq!(listed, eligible);
        let mut seen = BTreeSet::new();
        for class in &qc.classes {
            prop_assert!(!class.is_empty());
            for s in class {
                prop_assert!(seen.insert(s.clone()));
            }
        }
    }

    #[test]
    fn zero_skeleton_betti_counts_vertices(n in 0u32..=30) {
        let c = SimplicialComplex::with_vertices(n);
        let bv = betti_numbers(&c, CoefficientMode::Integer);
        if n == 0 {
            prop_assert!(bv.betti.is_empty());
        } else {
            prop_assert_eq!(bv.betti, vec![n as usize]);
        }
    }

    #[test]
    fn documents_round_trip(c in arb_mutated_complex()) {
        let text = write_complex(&c);
        let back = read_complex(&text).unwrap();
        prop_assert_eq!(&back, &c);
        prop_assert_eq!(write_complex(&back), text);
    }

    #[test]
    fn generation_couples_monotonically_in_p(
        n in 0u32..=7,
        max_dim in 0usize..=3,
        lo in 0.0f64..=1.0,
        hi in 0.0f64..=1.0,
        seed in any::<u64>(),
    ) {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        let small = generate(&RandomComplexConfig::new(n, max_dim, lo, seed).unwrap()).unwrap();
        let large = generate(&RandomComplexConfig::new(n, max_dim, hi, seed).unwrap()).unwrap();
        prop_assert!(small.simplexes().all(|s| large.contains(s)));
    }

    #[test]
    fn hub_reports_are_exact_and_monotone(
        (table, n) in arb_table(),
        vertex in 0u32..=3,
        t in 0u8..=99,
    ) {
        let universe: Vec<VertexId> = (0..n).map(VertexId).collect();
        let query = HubQuery { vertex: VertexId(vertex), k: 1, t };
        let report = is_hub(&table, &universe, &query).unwrap();
        prop_assert_eq!(report.subsets_per_rival, (n - 2) as u64);
        prop_assert_eq!(report.rival_counts.len(), n as usize - 1);

        // hub status can only be lost as the threshold rises
        if report.is_hub {
            for lower in 0..t {
                let weaker = is_hub(&table, &universe, &HubQuery { t: lower, ..query }).unwrap();
                prop_assert!(weaker.is_hub);
            }
        }

        // the profile names the exact largest workable threshold
        let profile = hub_profile(&table, &universe, 1).unwrap();
        let (_, t_max) = profile.iter().find(|(v, _)| *v == VertexId(vertex)).unwrap();
        match t_max {
            Some(best) => {
                let at = is_hub(&table, &universe, &HubQuery { t: *best, ..query }).unwrap();
                prop_assert!(at.is_hub);
                if *best < 100 {
                    let past = is_hub(&table, &universe, &HubQuery { t: best + 1, ..query }).unwrap();
                    prop_assert!(!past.is_hub);
                }
            }
            None => {
                let floor = is_hub(&table, &universe, &HubQuery { t: 0, ..query }).unwrap();
                prop_assert!(!floor.is_hub);
            }
        }
    }

    #[test]
    fn hub_analysis_is_equivariant_under_relabeling((table, n) in arb_table(), vertex in 0u32..=3) {
        let universe: Vec<VertexId> = (0..n).map(VertexId).collect();
        let top = n - 1;
        let mut mirrored = ProbabilityTable::new(table.max_dim(), table.default_p()).unwrap();
        for (tuple, p) in table.entries() {
            let ids: Vec<u32> = tuple.iter().map(|v| top - v.id()).collect();
            mirrored.insert_entry(&ids, p).unwrap();
        }
        let query = HubQuery { vertex: VertexId(vertex), k: 1, t: 0 };
        let mirrored_query = HubQuery { vertex: VertexId(top - vertex), k: 1, t: 0 };
        let a = is_hub(&table, &universe, &query).unwrap();
        let b = is_hub(&mirrored, &universe, &mirrored_query).unwrap();
        prop_assert_eq!(a.is_hub, b.is_hub);
        let mut counts: Vec<u64> = a.rival_counts.iter().map(|&(_, w)| w).collect();
        let mut mirrored_counts: Vec<u64> = b.rival_counts.iter().map(|&(_, w)| w).collect();
        counts.sort_unstable();
        mirrored_counts.sort_unstable();
        prop_assert_eq!(counts, mirrored_counts);
    }

    #[test]
    fn evolution_bookkeeping_is_consistent(
        horizon in 0u32..=4,
        max_dim in 1usize..=3,
        seed in any::<u64>(),
        p_add in 0.0f64..=1.0,
        p_del in 0.0f64..=1.0,
        arrivals in proptest::collection::btree_map(0u32..=4, 0u32..=4, 0..4),
    ) {
        let mut sched = EvolutionSchedule::new(horizon, max_dim);
        sched.seed = seed;
        sched.default_p_add = p_add;
        sched.default_p_del = p_del;
        sched.vertex_arrivals = arrivals;
        let trace = run(&sched).unwrap();
        prop_assert_eq!(trace.states.len(), horizon as usize + 1);
        prop_assert_eq!(trace.events.len(), horizon as usize + 1);

        let expected_vertices: u32 = (0..=horizon).map(|t| sched.arrivals(t)).sum();
        prop_assert_eq!(trace.final_state().vertex_count(), expected_vertices as usize);
        for state in &trace.states {
            prop_assert!(is_closed(state));
        }
        prop_assert_eq!(&replay(&trace.events), trace.final_state());
        let again = run(&sched).unwrap();
        prop_assert_eq!(&again, &trace);
    }

    #[test]
    fn probe_distances_are_symmetric(c in arb_mutated_complex()) {
        prop_assume!(c.vertex_count() > 0);
        let vertices: Vec<VertexId> = c.vertices().collect();
        let matrix = probe_matrix(&c, &vertices, &vertices).unwrap();
        for i in 0..vertices.len() {
            prop_assert_eq!(matrix[i][i], Some(0));
            for j in 0..vertices.len() {
                prop_assert_eq!(matrix[i][j], matrix[j][i]);
            }
        }
    }

    #[test]
    fn diffusion_floods_exactly_the_component(c in arb_mutated_complex(), pick in any::<prop::sample::Index>(), other in any::<prop::sample::Index>()) {
        prop_assume!(c.vertex_count() > 0);
        let vertices: Vec<VertexId> = c.vertices().collect();
        let source = vertices[pick.index(vertices.len())];
        let target = vertices[other.index(vertices.len())];
        let report = diffusion(&c, source, target).unwrap();
        let component = c
            .vertex_components()
            .into_iter()
            .find(|class| class.contains(&source))
            .unwrap();
        let flooded: usize = report.rounds.iter().sum();
        prop_assert_eq!(flooded, component.len());
        prop_assert_eq!(report.hop_count.is_some(), component.contains(&target));
        if source == target {
            prop_assert_eq!(report.hop_count, Some(0));
        }
    }
}
