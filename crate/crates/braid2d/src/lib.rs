//! Calculus of 2-dimensional braids.
//!
//! A 2-dimensional braid of degree m with k branch points is encoded by its
//! braid monodromy: a tuple of band generators w σ_i^{±1} w^{-1} in the
//! braid group B_m whose ordered product is the identity. This crate
//! provides:
//!
//! - exact braid-group arithmetic with a Garside normal form and the
//!   faithful Artin action ([`braid`]);
//! - monodromy tuples with the moves that generate equivalence of the
//!   braided surfaces they present: braid sum, conjugation, stabilization
//!   and destabilization, and Hurwitz moves, plus computable invariants of
//!   the closure surface and its complement ([`surface`]);
//! - a deterministic bidirectional search that decides bounded-move
//!   equivalence of tuples and replays its certificates ([`search`]).

pub mod braid;
pub mod error;
pub mod search;
pub mod surface;

pub use error::{Error, Result};
