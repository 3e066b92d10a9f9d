//! Cyclic-orientability testing and chordless cycle enumeration for
//! finite undirected simple graphs.
//!
//! A graph is cyclically orientable when its edges can be directed so
//! that every chordless (induced) cycle becomes a directed cycle. Such
//! graphs have at most 2n - 3 edges and their chordless cycles can be
//! listed in polynomial time; [`reducer::enumerate_chordless_cycles`]
//! decides the property and lists every chordless cycle exactly once.
//! The [`oracle`] module holds independent brute-force ground truth, and
//! [`generator`] produces seeded positive and negative test graphs.

pub mod biconnected;
pub mod cli;
pub mod generator;
pub mod graph;
pub mod oracle;
pub mod reducer;

pub use graph::{canonicalize, is_chordless_cycle, CanonicalCycle, Cycle, CycleSet, Graph, VertexId};
pub use reducer::{enumerate_chordless_cycles, NotCoReason, Verdict};
