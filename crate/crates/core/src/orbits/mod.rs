//! Sampling `C_n`, classifying sampled points into subgroup orbits, the
//! orbit graphs, and reduction of points to the base point.

pub mod graph;
pub mod reduce;
pub mod sample;
pub mod signature;

pub use graph::{build_from_classified, build_orbit_graph, classify, Classified, OrbitEdge, OrbitGraph, OrbitRecord};
pub use reduce::{reduce_to_basepoint, Reduction, DEFAULT_BUDGET};
pub use sample::{sample_letter, sample_points, sample_words, SampleSet};
pub use signature::{centralizer_dim, orbit_signature, pairing, pencil_pattern, Invariant, Signature};
