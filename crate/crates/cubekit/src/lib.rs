//! Metric theory of partial cubes.
//!
//! A *partial cube* is a connected graph that embeds isometrically into a
//! hypercube. The toolkit computes the Djokovic-Winkler relation Θ and its
//! equivalence classes, builds and self-certifies hypercube labelings,
//! enumerates convex cycles two independent ways, evaluates the class chain
//! hypercube ⊂ median ⊂ almost-median ⊂ semi-median ⊂ partial cube (with
//! tiled graphs wedged between almost-median and semi-median), and decides
//! which regular partial cubes have all convex cycles of one length: the
//! hypercubes (length 4), the doubled odd graphs (length 6), and the even
//! cycles C_2n, n ≥ 4 (length 2n).
//!
//! Everything is exact, deterministic, and sized for desk-scale graphs
//! (up to a few thousand vertices). Distance matrices are computed once and
//! passed explicitly; no function recomputes distances behind the caller's
//! back.

pub mod bits;
pub mod classes;
pub mod classify;
pub mod convexity;
pub mod families;
pub mod graph;
pub mod io;
pub mod report;
pub mod suite;
pub mod theta;

pub use graph::{DistanceMatrix, Graph, VertexSet};

/// Largest vertex count the dense-distance-matrix algorithms accept.
pub const DESK_SCALE_BOUND: usize = 2048;
