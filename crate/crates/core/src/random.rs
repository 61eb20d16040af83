//! The level-by-level random complex S(n, max_dim, p): seeded sampling, an
//! exact rational enumeration of every realization, and empirical
//! frequency tables for Monte-Carlo validation.
//!
//! Batch entry points fan trials out across a thread pool when the
//! `parallel` feature is on. Each trial derives its own seed from the base
//! seed and the trial index, so results never depend on scheduling.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::complex::{accept_candidate, Limits, Simplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::io;
use crate::rng;

/// Parameters of one random complex: n vertices, levels up to `max_dim`,
/// constant acceptance probability, and the seed.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomComplexConfig {
    pub n: u32,
    pub max_dim: usize,
    pub p: f64,
    pub seed: u64,
}

impl RandomComplexConfig {
    pub fn new(n: u32, max_dim: usize, p: f64, seed: u64) -> Result<Self> {
        let cfg = Self { n, max_dim, p, seed };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.p.is_finite() || !(0.0..=1.0).contains(&self.p) {
            return Err(Error::InvalidProbability(self.p));
        }
        let limits = Limits::default();
        limits.check_vertex_count(self.n as usize)?;
        limits.check_dimension(self.max_dim)?;
        Ok(())
    }
}

/// Runs the level process on an existing complex: for k = 1..=max_dim the
/// candidate set is computed once against the current state, then each
/// candidate is accepted independently, consuming the uniform draw keyed by
/// (ctx_seed, k, candidate). Acceptances at level k cannot create new
/// level-k candidates because candidacy depends only on the level below.
/// Returns the accepted simplexes in acceptance order.
pub(crate) fn run_level_process<F>(
    c: &mut SimplicialComplex,
    max_dim: usize,
    ctx_seed: u64,
    p_of: F,
) -> Vec<Simplex>
where
    F: Fn(usize, &Simplex) -> f64,
{
    let mut accepted = Vec::new();
    for k in 1..=max_dim {
        for cand in c.candidate_simplexes(k) {
            let u = rng::candidate_draw(ctx_seed, k, cand.vertices());
            if u < p_of(k, &cand) {
                accept_candidate(c, cand.clone());
                accepted.push(cand);
            }
        }
    }
    accepted
}

fn generate_with_seed(cfg: &RandomComplexConfig, seed: u64) -> SimplicialComplex {
    let mut c = SimplicialComplex::with_vertices(cfg.n);
    run_level_process(&mut c, cfg.max_dim, seed, |_, _| cfg.p);
    c
}

/// Samples one realization. Deterministic in the config on every platform.
pub fn generate(cfg: &RandomComplexConfig) -> Result<SimplicialComplex> {
    cfg.validate()?;
    Ok(generate_with_seed(cfg, cfg.seed))
}

/// Applies `f` to `trials` independently seeded realizations, trial index
/// ascending. Parallel when the `parallel` feature is on; the output is
/// identical either way.
pub fn map_trials<T, F>(cfg: &RandomComplexConfig, trials: u64, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64, &SimplicialComplex) -> T + Sync,
{
    cfg.validate()?;
    let one = |i: u64| {
        let c = generate_with_seed(cfg, rng::trial_seed(cfg.seed, i));
        f(i, &c)
    };
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        Ok((0..trials).into_par_iter().map(one).collect())
    }
    #[cfg(not(feature = "parallel"))]
    {
        Ok((0..trials).map(one).collect())
    }
}

/// Frequency table over `trials` realizations, keyed by the canonical
/// complex encoding. Counts sum to `trials`.
pub fn empirical_distribution(
    cfg: &RandomComplexConfig,
    trials: u64,
) -> Result<BTreeMap<String, u64>> {
    if trials == 0 {
        return Err(Error::InvalidConfig("trials must be at least 1".into()));
    }
    cfg.validate()?;
    let key_of = |i: u64| io::canonical_key(&generate_with_seed(cfg, rng::trial_seed(cfg.seed, i)));
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        // per-worker tables merged by summing counts; the merge is
        // commutative, so scheduling cannot change the result
        Ok((0..trials)
            .into_par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<String, u64>, i| {
                *acc.entry(key_of(i)).or_insert(0) += 1;
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            }))
    }
    #[cfg(not(feature = "parallel"))]
    {
        let mut acc: BTreeMap<String, u64> = BTreeMap::new();
        for i in 0..trials {
            *acc.entry(key_of(i)).or_insert(0) += 1;
        }
        Ok(acc)
    }
}

/// Cap on the total number of binary accept/reject choices the exact
/// enumeration will branch over before refusing.
pub const DEFAULT_CHOICE_CAP: usize = 30;

/// The exact distribution over all realizations: pairwise distinct
/// complexes with positive rational probabilities summing to one.
#[derive(Clone, Debug, PartialEq)]
pub struct RealizationDistribution {
    pub entries: Vec<(SimplicialComplex, BigRational)>,
    pub total: BigRational,
}

impl RealizationDistribution {
    /// The probability of one complex, zero if it is not a realization.
    pub fn probability_of(&self, c: &SimplicialComplex) -> BigRational {
        self.entries
            .iter()
            .find(|(e, _)| e == c)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(BigRational::zero)
    }
}

/// Exhaustive enumeration of the level process with the default choice cap.
pub fn enumerate_distribution(
    n: u32,
    max_dim: usize,
    p: &BigRational,
) -> Result<RealizationDistribution> {
    enumerate_distribution_with_cap(n, max_dim, p, DEFAULT_CHOICE_CAP)
}

/// Exhaustive enumeration of the level process. Every accept/reject path is
/// walked with exact rational probabilities; realizations reached more than
/// once are merged by summing. Errs when a path would exceed `cap` binary
/// choices, naming the offending choice count.
pub fn enumerate_distribution_with_cap(
    n: u32,
    max_dim: usize,
    p: &BigRational,
    cap: usize,
) -> Result<RealizationDistribution> {
    if p.is_negative() || *p > BigRational::one() {
        return Err(Error::InvalidConfig(format!(
            "probability {p} is outside [0, 1]"
        )));
    }
    // the per-level branch mask lives in a u64, and caps anywhere near that
    // width are uncomputable anyway
    if cap > 62 {
        return Err(Error::InvalidConfig(format!(
            "choice cap {cap} is above the enumerable limit of 62"
        )));
    }
    let limits = Limits::default();
    limits.check_vertex_count(n as usize)?;
    limits.check_dimension(max_dim)?;

    let mut acc: BTreeMap<String, (SimplicialComplex, BigRational)> = BTreeMap::new();
    let base = SimplicialComplex::with_vertices(n);
    branch(base, 1, 0, max_dim, p, cap, BigRational::one(), &mut acc)?;
    let entries: Vec<(SimplicialComplex, BigRational)> = acc.into_values().collect();
    let total = entries.iter().map(|(_, prob)| prob.clone()).sum();
    Ok(RealizationDistribution { entries, total })
}

#[allow(clippy::too_many_arguments)]
fn branch(
    c: SimplicialComplex,
    k: usize,
    choices_used: usize,
    max_dim: usize,
    p: &BigRational,
    cap: usize,
    prob: BigRational,
    acc: &mut BTreeMap<String, (SimplicialComplex, BigRational)>,
) -> Result<()> {
    if k > max_dim {
        let key = io::canonical_key(&c);
        let entry = acc
            .entry(key)
            .or_insert_with(|| (c, BigRational::zero()));
        entry.1 += prob;
        return Ok(());
    }
    let candidates = c.candidate_simplexes(k);
    let choices = choices_used + candidates.len();
    if choices > cap {
        return Err(Error::TooManyChoices { choices, cap });
    }
    let q = BigRational::one() - p;
    for mask in 0u64..(1u64 << candidates.len()) {
        let mut next = c.clone();
        let mut next_prob = prob.clone();
        for (bit, cand) in candidates.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                accept_candidate(&mut next, cand.clone());
                next_prob *= p;
            } else {
                next_prob *= q.clone();
            }
        }
        branch(next, k + 1, choices, max_dim, p, cap, next_prob, acc)?;
    }
    Ok(())
}
