use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1..m}`, stored as a 0-indexed image table.
///
/// Composition reads left to right: `a.then(&b)` applies `a` first. This is
/// the one composition convention used everywhere in the crate, matching how
/// braid words act (first letter first).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation { images: (0..m).collect() }
    }

    /// Build from 1-based images, rejecting anything that is not a bijection.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &v in images {
            if v < 1 || v > m || seen[v - 1] {
                return Err(Error::IndexOutOfRange { index: v, degree: m });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&v| v - 1).collect() })
    }

    /// The transposition swapping positions `i` and `i+1` (1-based `i`),
    /// the image of the braid generator σ_i.
    pub fn transposition(m: usize, i: usize) -> Result<Self> {
        if i < 1 || i >= m {
            return Err(Error::IndexOutOfRange { index: i, degree: m });
        }
        let mut p = Self::identity(m);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// The half-twist permutation `p -> m + 1 - p`.
    pub fn half_twist(m: usize) -> Self {
        Permutation { images: (0..m).rev().collect() }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(p, &v)| p == v)
    }

    /// Image of a 0-based position.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p]
    }

    /// Image of a 1-based point.
    pub fn apply_one_based(&self, p: usize) -> usize {
        self.images[p - 1] + 1
    }

    /// 1-based image table.
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v + 1).collect()
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation { images: self.images.iter().map(|&v| other.images[v]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (p, &v) in self.images.iter().enumerate() {
            inv[v] = p;
        }
        Permutation { images: inv }
    }

    /// Number of inversions; the letter count of the permutation braid.
    pub fn inversions(&self) -> usize {
        let n = self.images.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Descent positions (1-based `i` with `π(i) > π(i+1)`). For a
    /// permutation braid this is its starting set.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.images.len())
            .filter(|&i| self.images[i - 1] > self.images[i])
            .collect()
    }

    pub fn is_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images_one_based())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.images_one_based().iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", strs.join(" "))
    }
}
