//! Bounded search in the move graph of monodromy tuples.
//!
//! Tuples are identified by a [`CanonicalKey`] (degree plus entrywise
//! normal forms), moves are single Hurwitz swaps, generator conjugations,
//! and (de)stabilizations, and [`search_equivalence`] runs an invariant
//! screen followed by a bidirectional breadth-first search. Everything is
//! bounded and deterministic; `Unknown` is an honest third verdict, not a
//! refutation.

mod bfs;
mod enumerate;
mod key;
mod moves;

pub use bfs::{
    census, reachable_keys, search_equivalence, search_equivalence_filtered, Census, Reachability,
    Verdict,
};
pub use enumerate::enumerate_tuples;
pub use key::{canonical_key, CanonicalKey};
pub use moves::{
    apply_move, neighbors, neighbors_filtered, verify_trace, Move, MoveFilter, SearchBounds,
};
