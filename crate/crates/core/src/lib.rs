//! Simplicial complexes as a model of group structure: closure-maintaining
//! storage, homology over GF(2) and the integers, seeded level-by-level
//! random generation with exact enumeration, discrete-time evolution,
//! per-tuple acceptance tables with hub detection, and connectivity
//! analysis (q-overlap classes, diffusion rounds, probe matrices).
//!
//! Everything randomized is keyed by explicit seeds through a counter-based
//! generator, so results are identical across platforms, runs, and thread
//! counts. The `parallel` feature (on by default) fans batch work out with
//! rayon; disabling it changes throughput, never output.

pub mod analysis;
pub mod complex;
pub mod dynamics;
mod error;
pub mod homology;
pub mod io;
pub mod leadership;
pub mod random;
mod rng;

pub use error::{Error, Result};
