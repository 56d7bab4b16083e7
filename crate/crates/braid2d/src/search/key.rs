use std::fmt;

use crate::braid::{normal_form, NormalForm};
use crate::surface::MonodromyTuple;

/// Identity certificate for a tuple: the degree together with the Garside
/// normal form of every expanded entry, in order. Two tuples get the same
/// key exactly when they agree entrywise as braid elements, however their
/// conjugators are spelled.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey {
    degree: usize,
    entries: Vec<NormalForm>,
}

impl CanonicalKey {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[NormalForm] {
        &self.entries
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}", self.degree)?;
        for nf in &self.entries {
            write!(f, "\n{}", nf)?;
        }
        Ok(())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey(degree={}, entries={:?})", self.degree, self.entries)
    }
}

pub fn canonical_key(t: &MonodromyTuple) -> CanonicalKey {
    CanonicalKey {
        degree: t.degree(),
        entries: t.entries().iter().map(|e| normal_form(&e.expand())).collect(),
    }
}
