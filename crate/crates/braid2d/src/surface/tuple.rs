use std::fmt;

use crate::braid::{is_identity, BraidWord};
use crate::error::{Error, Result};
use crate::surface::band::BandEntry;

/// Direction of a Hurwitz move on adjacent entries.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum HurwitzDirection {
    Forward,
    Backward,
}

/// The braid monodromy of a 2-dimensional braid of degree m: an ordered
/// tuple of band generators. The tuple presents a braided surface exactly
/// when the ordered product of the expanded entries is the identity braid;
/// construction checks well-formedness only, [`MonodromyTuple::validate`]
/// checks the boundary condition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonodromyTuple {
    degree: usize,
    entries: Vec<BandEntry>,
}

impl MonodromyTuple {
    pub fn new(degree: usize, entries: Vec<BandEntry>) -> Result<Self> {
        if degree < 1 {
            return Err(Error::IndexOutOfRange { index: 0, degree });
        }
        for e in &entries {
            if e.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: e.degree() });
            }
        }
        Ok(MonodromyTuple { degree, entries })
    }

    /// The tuple with no branch points: a trivial unbranched covering.
    pub fn empty(degree: usize) -> Result<Self> {
        Self::new(degree, Vec::new())
    }

    /// B*: the unique degree-2 braid with two branch points.
    pub fn b_star() -> Self {
        let w = BraidWord::identity(2);
        let entries = vec![
            BandEntry::new(w.clone(), 1, 1).expect("valid entry"),
            BandEntry::new(w, 1, -1).expect("valid entry"),
        ];
        MonodromyTuple { degree: 2, entries }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn entries(&self) -> &[BandEntry] {
        &self.entries
    }

    /// Branch point count k.
    pub fn branch_count(&self) -> usize {
        self.entries.len()
    }

    /// Ordered product of the expanded entries, freely reduced.
    pub fn total_product(&self) -> BraidWord {
        let mut acc = BraidWord::identity(self.degree);
        for e in &self.entries {
            acc = acc.multiply(&e.expand()).expect("entry degrees match the tuple");
        }
        acc
    }

    /// Checks the boundary condition: the total product must be the
    /// identity braid (the closure caps off with trivial disks).
    pub fn validate(&self) -> Result<()> {
        if !is_identity(&self.total_product()) {
            return Err(Error::BoundaryNotTrivial);
        }
        Ok(())
    }

    /// Braid sum: concatenation of tuples of equal degree.
    pub fn braid_sum(&self, other: &MonodromyTuple) -> Result<MonodromyTuple> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Ok(MonodromyTuple { degree: self.degree, entries })
    }

    /// Global conjugation by b: every entry conjugator w becomes b·w.
    pub fn conjugate(&self, b: &BraidWord) -> Result<MonodromyTuple> {
        if b.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: b.degree() });
        }
        let entries = self
            .entries
            .iter()
            .map(|e| BandEntry::new(b.multiply(e.conjugator())?, e.index(), e.exponent()))
            .collect::<Result<Vec<_>>>()?;
        Ok(MonodromyTuple { degree: self.degree, entries })
    }

    /// ι_a^b: adds a untouched strands below and b above, giving degree
    /// m+a+b; every letter and band index shifts by a.
    pub fn iota(&self, a: usize, b: usize) -> MonodromyTuple {
        let degree = self.degree + a + b;
        let shift = a as i32;
        let entries = self
            .entries
            .iter()
            .map(|e| {
                let letters: Vec<i32> = e
                    .conjugator()
                    .letters()
                    .iter()
                    .map(|&l| if l > 0 { l + shift } else { l - shift })
                    .collect();
                let w = BraidWord::new(degree, letters).expect("shifted letters stay in range");
                BandEntry::new(w, e.index() + a, e.exponent()).expect("shifted index stays in range")
            })
            .collect();
        MonodromyTuple { degree, entries }
    }

    /// Stabilization: the braid sum of ι_0^1(T) with a copy of B* on the
    /// top two strands, i.e. two new branch points (σ_m, +1), (σ_m, −1)
    /// joining the new sheet m+1 to sheet m.
    pub fn stabilize(&self) -> MonodromyTuple {
        let m = self.degree;
        let mut out = self.iota(0, 1);
        let w = BraidWord::identity(m + 1);
        out.entries.push(BandEntry::new(w.clone(), m, 1).expect("index m is valid in B_{m+1}"));
        out.entries.push(BandEntry::new(w, m, -1).expect("index m is valid in B_{m+1}"));
        out
    }

    /// Syntactic inverse of stabilization. Fires when the last two entries
    /// are (σ_{m-1}, +1) and (σ_{m-1}, −1) in either order with trivial
    /// conjugators, and no other entry's expansion touches the top strand;
    /// returns the tuple with those two entries removed, one degree down.
    pub fn destabilize(&self) -> Option<MonodromyTuple> {
        let d = self.degree;
        if d < 2 || self.entries.len() < 2 {
            return None;
        }
        let top = d - 1;
        let last = &self.entries[self.entries.len() - 1];
        let prev = &self.entries[self.entries.len() - 2];
        let tail_ok = prev.conjugator().is_empty()
            && last.conjugator().is_empty()
            && prev.index() == top
            && last.index() == top
            && prev.exponent() + last.exponent() == 0;
        if !tail_ok {
            return None;
        }
        let body = &self.entries[..self.entries.len() - 2];
        let top_letter = top as i32;
        for e in body {
            if e.expand().letters().iter().any(|&l| l.abs() == top_letter) {
                return None;
            }
        }
        let entries = body
            .iter()
            .map(|e| {
                let w = BraidWord::new(d - 1, e.conjugator().letters().to_vec())
                    .expect("letters avoid the top strand");
                BandEntry::new(w, e.index(), e.exponent()).expect("index avoids the top strand")
            })
            .collect();
        Some(MonodromyTuple { degree: d - 1, entries })
    }

    /// Hurwitz move at position i (1 ≤ i < k). Forward replaces
    /// (a_i, a_{i+1}) by (a_i a_{i+1} a_i^{-1}, a_i); backward is its
    /// inverse. The total product is unchanged.
    pub fn hurwitz(&self, i: usize, dir: HurwitzDirection) -> Result<MonodromyTuple> {
        let k = self.entries.len();
        if i < 1 || i >= k {
            return Err(Error::PositionOutOfRange { position: i, count: k });
        }
        let a = &self.entries[i - 1];
        let b = &self.entries[i];
        let mut entries = self.entries.clone();
        match dir {
            HurwitzDirection::Forward => {
                let w = a.expand().multiply(b.conjugator())?;
                entries[i - 1] = BandEntry::new(w, b.index(), b.exponent())?;
                entries[i] = a.clone();
            }
            HurwitzDirection::Backward => {
                let w = b.expand().inverse().multiply(a.conjugator())?;
                entries[i - 1] = b.clone();
                entries[i] = BandEntry::new(w, a.index(), a.exponent())?;
            }
        }
        Ok(MonodromyTuple { degree: self.degree, entries })
    }
}

impl fmt::Display for MonodromyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "degree {}", self.degree)?;
        for e in &self.entries {
            write!(f, "\n{}", e)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonodromyTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonodromyTuple(degree={}, entries={:?})", self.degree, self.entries)
    }
}
