//! Exact arithmetic in the classical braid group B_m.
//!
//! Words are sequences of signed generator letters (letter `i` is
//! σ_{|i|}^{sign(i)}), read left to right with the first letter acting
//! first, in both the symmetric-group projection and the Artin action.
//! Equality is decided by the Garside normal form and independently
//! checkable through the faithful Artin action on the free group.

mod free;
mod normal;
mod perm;
mod word;

pub use free::{artin_act, FreeWord};
pub use normal::{equal, is_identity, normal_form, perm_braid_word, NormalForm};
pub use perm::Permutation;
pub use word::BraidWord;
