//! Discrete-time evolution: at each step t, vertices arrive, existing
//! simplexes are deleted with cofaces cascading, and new simplexes are
//! recruited level by level.
//!
//! Every step runs its phases in the fixed order recorded by
//! [`PHASE_ORDER`]. The two random phases draw from independent,
//! per-step seeds, so the same schedule and seed reproduce the same trace
//! on every platform and thread count.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::complex::{Limits, Simplex, SimplicialComplex, VertexId};
use crate::error::{Error, Result};
use crate::random::run_level_process;
use crate::rng;

/// The within-step phase convention, recorded verbatim in trace files.
pub const PHASE_ORDER: &str = "add-vertices,delete,add-simplexes";

/// Phase tags mixed into the per-step seeds. Distinct values keep the
/// delete draws and the add draws statistically independent.
const ADD_PHASE: u64 = 0x616464;
const DEL_PHASE: u64 = 0x64656c;

/// A time-indexed description of one evolution: the horizon, dimension cap,
/// seed, vertex arrivals per step, and addition/deletion probabilities with
/// per-(time, dimension) overrides falling back to the defaults.
#[derive(Clone, Debug, PartialEq)]
pub struct EvolutionSchedule {
    pub horizon: u32,
    pub max_dim: usize,
    pub seed: u64,
    pub default_p_add: f64,
    pub default_p_del: f64,
    pub vertex_arrivals: BTreeMap<u32, u32>,
    pub p_add_overrides: BTreeMap<(u32, usize), f64>,
    pub p_del_overrides: BTreeMap<(u32, usize), f64>,
}

impl EvolutionSchedule {
    pub fn new(horizon: u32, max_dim: usize) -> Self {
        Self {
            horizon,
            max_dim,
            seed: 0,
            default_p_add: 0.0,
            default_p_del: 0.0,
            vertex_arrivals: BTreeMap::new(),
            p_add_overrides: BTreeMap::new(),
            p_del_overrides: BTreeMap::new(),
        }
    }

    /// Number of vertices arriving at step t.
    pub fn arrivals(&self, t: u32) -> u32 {
        self.vertex_arrivals.get(&t).copied().unwrap_or(0)
    }

    /// Acceptance probability for a new simplex of dimension `dim` at step t.
    pub fn p_add(&self, t: u32, dim: usize) -> f64 {
        self.p_add_overrides
            .get(&(t, dim))
            .copied()
            .unwrap_or(self.default_p_add)
    }

    /// Deletion probability for an existing simplex of dimension `dim` at
    /// step t.
    pub fn p_del(&self, t: u32, dim: usize) -> f64 {
        self.p_del_overrides
            .get(&(t, dim))
            .copied()
            .unwrap_or(self.default_p_del)
    }

    pub fn validate(&self) -> Result<()> {
        let limits = Limits::default();
        limits.check_dimension(self.max_dim)?;
        let check = |label: String, p: f64| {
            if !p.is_finite() || !(0.0..=1.0).contains(&p) {
                Err(Error::InvalidSchedule(format!(
                    "{label}: probability {p} is outside [0, 1]"
                )))
            } else {
                Ok(())
            }
        };
        check("default_p_add".into(), self.default_p_add)?;
        check("default_p_del".into(), self.default_p_del)?;
        for (&(t, dim), &p) in &self.p_add_overrides {
            check(format!("p_add at (t {t}, dim {dim})"), p)?;
        }
        for (&(t, dim), &p) in &self.p_del_overrides {
            check(format!("p_del at (t {t}, dim {dim})"), p)?;
        }
        let total: u64 = self.vertex_arrivals.values().map(|&c| c as u64).sum();
        limits.check_vertex_count(total as usize)?;
        Ok(())
    }
}

/// What one step did: the fresh vertices, every simplex removed (marked or
/// cascaded), and every simplex accepted, all in canonical order of their
/// respective phases.
#[derive(Clone, Debug, PartialEq)]
pub struct StepEvents {
    pub t: u32,
    pub added_vertices: Vec<VertexId>,
    pub removed_simplexes: Vec<Simplex>,
    pub added_simplexes: Vec<Simplex>,
}

/// A full run: `states[t]` is the complex after step t, `events[t]` is what
/// step t did. Both have `horizon + 1` entries.
#[derive(Clone, Debug, PartialEq)]
pub struct EvolutionTrace {
    pub states: Vec<SimplicialComplex>,
    pub events: Vec<StepEvents>,
}

impl EvolutionTrace {
    pub fn final_state(&self) -> &SimplicialComplex {
        self.states.last().expect("a run always has a state per step")
    }
}

/// Executes step t on a copy of `c`: arrivals, then simultaneous deletion
/// marks resolved in one cascade, then level-by-level addition.
pub fn step(c: &SimplicialComplex, t: u32, sched: &EvolutionSchedule) -> (SimplicialComplex, StepEvents) {
    let mut next = c.clone();

    let fresh_base = next.max_vertex_id().map(|v| v.id() + 1).unwrap_or(0);
    let added_vertices: Vec<VertexId> = (0..sched.arrivals(t))
        .map(|i| VertexId(fresh_base + i))
        .collect();
    for &v in &added_vertices {
        next.insert(Simplex::vertex(v));
    }

    // marks are decided against the pre-deletion state, then resolved in a
    // single cascade, so deleting a face and its coface in the same step
    // never double-counts
    let del_seed = rng::phase_seed(sched.seed, t, DEL_PHASE);
    let mut marked: BTreeSet<Simplex> = BTreeSet::new();
    let top = next.dimension();
    for dim in 1..=top.max(0) as usize {
        let p = sched.p_del(t, dim);
        if p <= 0.0 {
            continue;
        }
        for s in next.simplexes_of_dim(dim) {
            if rng::candidate_draw(del_seed, dim, s.vertices()) < p {
                marked.insert(s.clone());
            }
        }
    }
    let removed_simplexes = next.remove_all(&marked);

    let add_seed = rng::phase_seed(sched.seed, t, ADD_PHASE);
    let added_simplexes =
        run_level_process(&mut next, sched.max_dim, add_seed, |k, _| sched.p_add(t, k));

    (
        next,
        StepEvents {
            t,
            added_vertices,
            removed_simplexes,
            added_simplexes,
        },
    )
}

/// Runs the schedule from the empty complex through steps t = 0..=horizon.
pub fn run(sched: &EvolutionSchedule) -> Result<EvolutionTrace> {
    sched.validate()?;
    let mut states = Vec::with_capacity(sched.horizon as usize + 1);
    let mut events = Vec::with_capacity(sched.horizon as usize + 1);
    let mut current = SimplicialComplex::new();
    for t in 0..=sched.horizon {
        let (next, ev) = step(&current, t, sched);
        current = next;
        states.push(current.clone());
        events.push(ev);
    }
    Ok(EvolutionTrace { states, events })
}

/// Rebuilds the final state from recorded events alone, without redrawing
/// any randomness. `replay(&trace.events) == *trace.final_state()` for
/// every trace produced by [`run`].
pub fn replay(events: &[StepEvents]) -> SimplicialComplex {
    let mut c = SimplicialComplex::new();
    for ev in events {
        for &v in &ev.added_vertices {
            c.insert(Simplex::vertex(v));
        }
        // the removal list is closed under cofaces, so element order is
        // irrelevant: later entries become no-ops once a face is gone
        for s in &ev.removed_simplexes {
            c.remove(s);
        }
        for s in &ev.added_simplexes {
            c.insert(s.clone());
        }
    }
    c
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

    #[test]
    fn certain_deletion_strips_everything_above_the_vertices() {
        let c = complex_of(&[&[0, 1, 2]]);
        let mut sched = EvolutionSchedule::new(0, 2);
        sched.default_p_del = 1.0;
        let (next, ev) = step(&c, 0, &sched);
        assert_eq!(next.f_vector(), vec![3]);
        assert_eq!(ev.removed_simplexes.len(), 4);
        assert!(ev.added_vertices.is_empty());
        assert!(ev.added_simplexes.is_empty());
    }

    #[test]
    fn certain_addition_builds_the_full_triangle() {
        let mut sched = EvolutionSchedule::new(1, 2);
        sched.default_p_add = 1.0;
        sched.vertex_arrivals.insert(1, 3);
        let trace = run(&sched).unwrap();
        assert_eq!(trace.states.len(), 2);
        assert!(trace.states[0].is_empty());
        assert_eq!(trace.states[1].f_vector(), vec![3, 3, 1]);
        let ev = &trace.events[1];
        assert_eq!(ev.added_vertices, vec![VertexId(0), VertexId(1), VertexId(2)]);
        assert_eq!(ev.added_simplexes.len(), 4);
    }

    #[test]
    fn dimension_override_fills_a_hollow_triangle() {
        let hollow = complex_of(&[&[0, 1], &[0, 2], &[1, 2]]);
        let mut sched = EvolutionSchedule::new(0, 2);
        sched.p_add_overrides.insert((0, 2), 1.0);
        let (next, ev) = step(&hollow, 0, &sched);
        assert_eq!(next.f_vector(), vec![3, 3, 1]);
        assert_eq!(ev.added_simplexes, vec![sx(&[0, 1, 2])]);
        // the override is scoped to its step
        assert_eq!(sched.p_add(1, 2), 0.0);
    }

    #[test]
    fn arrivals_only_run() {
        let mut sched = EvolutionSchedule::new(0, 2);
        sched.vertex_arrivals.insert(0, 5);
        let trace = run(&sched).unwrap();
        assert_eq!(trace.states.len(), 1);
        assert_eq!(trace.final_state().f_vector(), vec![5]);
        assert_eq!(trace.events[0].added_vertices.len(), 5);
    }

    #[test]
    fn fresh_ids_continue_above_the_maximum() {
        let c = complex_of(&[&[0, 1], &[5]]);
        let mut sched = EvolutionSchedule::new(0, 1);
        sched.vertex_arrivals.insert(0, 2);
        let (next, ev) = step(&c, 0, &sched);
        assert_eq!(ev.added_vertices, vec![VertexId(6), VertexId(7)]);
        assert_eq!(next.vertex_count(), 5);
    }

    #[test]
    fn replay_rebuilds_the_final_state() {
        let mut sched = EvolutionSchedule::new(4, 2);
        sched.seed = 11;
        sched.default_p_add = 0.5;
        sched.default_p_del = 0.3;
        sched.vertex_arrivals.insert(0, 4);
        sched.vertex_arrivals.insert(2, 2);
        let trace = run(&sched).unwrap();
        assert_eq!(replay(&trace.events), *trace.final_state());
        // intermediate prefixes replay too
        for t in 0..trace.states.len() {
            assert_eq!(replay(&trace.events[..=t]), trace.states[t]);
        }
    }

    #[test]
    fn runs_are_deterministic_in_the_seed() {
        let mut sched = EvolutionSchedule::new(3, 2);
        sched.seed = 7;
        sched.default_p_add = 0.4;
        sched.default_p_del = 0.2;
        sched.vertex_arrivals.insert(0, 5);
        let a = run(&sched).unwrap();
        let b = run(&sched).unwrap();
        assert_eq!(a, b);
        sched.seed = 8;
        let c = run(&sched).unwrap();
        assert_ne!(a.final_state(), c.final_state());
    }

    #[test]
    fn deletion_and_addition_draws_are_independent() {
        // with p_del = 1 every step, the surviving structure is exactly what
        // the addition phase of the last step built
        let mut sched = EvolutionSchedule::new(2, 1);
        sched.seed = 3;
        sched.default_p_add = 0.6;
        sched.default_p_del = 1.0;
        sched.vertex_arrivals.insert(0, 6);
        let trace = run(&sched).unwrap();
        let last = &trace.events[2];
        let survivors: Vec<&Simplex> = trace
            .final_state()
            .simplexes()
            .filter(|s| s.dimension() >= 1)
            .collect();
        assert_eq!(survivors.len(), last.added_simplexes.len());
    }

    #[test]
    fn validation_rejects_bad_probabilities() {
        let mut sched = EvolutionSchedule::new(1, 2);
        sched.default_p_add = 1.5;
        assert!(sched.validate().is_err());
        sched.default_p_add = 0.5;
        sched.p_del_overrides.insert((0, 1), -0.25);
        let err = run(&sched).unwrap_err().to_string();
        assert!(err.contains("p_del"), "got {err}");
    }

    #[test]
    fn validation_rejects_oversized_dimensions() {
        let sched = EvolutionSchedule::new(1, 64);
        assert!(sched.validate().is_err());
    }
}
