//! Counter-based uniform draws.
//!
//! Every stochastic decision in this crate is a pure function of a 64-bit
//! seed and the identity of the object being decided (level and vertex
//! tuple, or step and phase). This gives three guarantees at once:
//! byte-identical output for equal seeds on every platform, scheduling
//! independence when trials fan out across threads, and the coupling
//! property that the same candidate sees the same uniform draw in two runs
//! that differ only in acceptance probability.

use crate::complex::VertexId;

/// splitmix64 finalizer. Full-avalanche mix of one 64-bit word.
fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Absorbs a sequence of words into one hash, mixing after every word.
pub(crate) fn mix(seed: u64, words: &[u64]) -> u64 {
    let mut h = splitmix64(seed);
    for &w in words {
        h = splitmix64(h ^ w);
    }
    h
}

/// Maps a hash to a uniform f64 in [0, 1) using the top 53 bits.
pub(crate) fn unit_uniform(h: u64) -> f64 {
    (h >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// The uniform draw consumed by one candidate simplex of a level process.
/// Keyed by (context seed, level, tuple length, vertex ids) so distinct
/// candidates never share a draw and equal candidates always do.
pub(crate) fn candidate_draw(ctx_seed: u64, level: usize, vertices: &[VertexId]) -> f64 {
    let mut h = splitmix64(ctx_seed);
    h = splitmix64(h ^ level as u64);
    h = splitmix64(h ^ vertices.len() as u64);
    for v in vertices {
        h = splitmix64(h ^ u64::from(v.0));
    }
    unit_uniform(h)
}

/// Derives the seed for one trial of a batch from (base seed, trial index).
pub(crate) fn trial_seed(base: u64, index: u64) -> u64 {
    mix(base, &[0x7472_6961, index])
}

/// Derives the seed for one phase of one evolution step.
pub(crate) fn phase_seed(base: u64, t: u32, phase_tag: u64) -> u64 {
    mix(base, &[phase_tag, u64::from(t)])
}
