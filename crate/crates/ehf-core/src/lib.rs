//! Structure detection and decomposition for even-hole-free graphs.
//!
//! The crate is organised in layers. [`graph`] holds the bitset graph
//! representation and primitive operations (induced subgraphs, components,
//! induced-path enumeration). [`detect`] finds holes, thetas, pyramids,
//! near-prisms and wheels, and emits re-checkable certificates.
//! [`bisimplicial`] and [`cutsets`] cover vertex-local structure (bisimplicial
//! vertices, star cutsets, splendid vertices). [`strips`] implements strip
//! systems: tree-shaped systems with a cross-edge, pyramid strip systems, and
//! completed strips. [`harness`] enumerates graph families and runs the
//! verification suites; [`oracle`] holds the independent brute-force reference
//! implementations those suites compare against. [`format`] parses and writes
//! the supported graph encodings.

pub mod bisimplicial;
pub mod cutsets;
pub mod detect;
pub mod format;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod par;
pub mod strips;

pub use graph::{AdjacencyKind, Graph, Path, Tree, VertexSet};
