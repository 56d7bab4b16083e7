//! 2-dimensional braids as braid monodromy tuples.
//!
//! A degree-m braided surface with k simple branch points is presented by
//! an ordered tuple of band generators whose product is the identity braid.
//! This module provides the tuple calculus (braid sum, conjugation, ι_a^b,
//! stabilization, Hurwitz moves) and invariants of the closure: Euler
//! characteristic, components, per-component genus, and the meridian
//! presentation of the complement group with its abelianization rank and
//! finite-quotient counts.

mod band;
mod group;
mod invariants;
mod tuple;

pub use band::BandEntry;
pub use group::{abelianization_rank, count_homs, GroupPresentation, HOM_COUNT_STEP_CAP};
pub use invariants::{
    complement_group, components, euler_characteristic_closure, genus_list, genus_multiset,
};
pub use tuple::{HurwitzDirection, MonodromyTuple};
