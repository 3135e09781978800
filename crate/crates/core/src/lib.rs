//! Graph energy of C4-free bounded-degree graphs.
//!
//! The crate is `no_std` and only needs `alloc`. It provides:
//!
//! * [`graph`]: a bit-packed simple graph with the structural predicates the
//!   energy bounds are stated in terms of (connectivity, bipartiteness,
//!   4-cycle counts), canonical codes for small graphs and graph6 I/O.
//! * [`spectra`]: an in-crate dense symmetric eigensolver (Householder
//!   tridiagonalization + implicit QL), graph energy and spectral moments.
//! * [`bounds`]: the edge-density threshold `alpha(d)`, the degree-square
//!   bound, moment-based energy lower bounds and theorem verdicts.
//! * [`enumerate`]: isomorph-free streams of bounded-degree free trees and of
//!   small connected C4-free graphs.
//! * [`constructions`]: closed-form families (paths, cycles, stars, complete
//!   bipartite graphs, balanced binary trees and the three-branch trees).

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod constructions;
pub mod enumerate;
pub mod graph;
pub mod spectra;

pub use bounds::{alpha, AlphaResult, TheoremVerdict};
pub use graph::{canonical_code, CanonicalCode, Graph, GraphError};
pub use spectra::{energy, spectrum, EnergyReport, Spectrum, SpectrumError};

/// Absolute comparison tolerance for the strict energy inequalities.
///
/// Values of `E - n` closer than this to zero are treated as borderline and
/// need a recomputation before they are classified.
pub const MARGIN: f64 = 1e-9;
