use std::fmt;

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};

/// One branch point of a 2-dimensional braid: the band generator
/// w σ_i^e w^{-1} with a simple exponent e = ±1.
///
/// Entries are kept in core form: the stored conjugator is the prefix u of
/// the freely reduced expansion u σ_i^e u^{-1}, so two entries are equal as
/// words exactly when their fields coincide. The reduced expansion of a
/// conjugate of a single letter always has that letter in the middle, which
/// makes the core form well defined and leaves index and exponent intact.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BandEntry {
    conjugator: BraidWord,
    index: usize,
    exponent: i8,
}

impl BandEntry {
    pub fn new(conjugator: BraidWord, index: usize, exponent: i8) -> Result<Self> {
        if exponent != 1 && exponent != -1 {
            return Err(Error::NonSimpleEntry(exponent as i64));
        }
        let degree = conjugator.degree();
        if index < 1 || index + 1 > degree {
            return Err(Error::IndexOutOfRange { index, degree });
        }
        let expansion = BraidWord::band_generator(&conjugator, index, exponent)?;
        let letters = expansion.letters();
        debug_assert_eq!(letters.len() % 2, 1);
        let half = letters.len() / 2;
        let middle = letters[half];
        debug_assert_eq!(middle, index as i32 * exponent as i32);
        let core = BraidWord::new(degree, letters[..half].to_vec())
            .expect("prefix of a valid word is valid");
        Ok(BandEntry { conjugator: core, index, exponent })
    }

    pub fn degree(&self) -> usize {
        self.conjugator.degree()
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn exponent(&self) -> i8 {
        self.exponent
    }

    /// The freely reduced word w σ_i^e w^{-1}.
    pub fn expand(&self) -> BraidWord {
        BraidWord::band_generator(&self.conjugator, self.index, self.exponent)
            .expect("fields are validated at construction")
    }

    /// Symmetric-group image of the expansion; always a transposition.
    pub fn permutation(&self) -> Permutation {
        self.expand().permutation()
    }

    /// The pair of sheets swapped at this branch point.
    pub fn sheet_pair(&self) -> (usize, usize) {
        let inv = self.conjugator.permutation().inverse();
        let a = inv.apply_one_based(self.index);
        let b = inv.apply_one_based(self.index + 1);
        (a.min(b), a.max(b))
    }
}

impl fmt::Display for BandEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> =
            self.conjugator.letters().iter().map(|l| l.to_string()).collect();
        write!(f, "band ({}) {} {:+}", letters.join(","), self.index, self.exponent)
    }
}

impl fmt::Debug for BandEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(degree: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(degree, letters.to_vec()).unwrap()
    }

    #[test]
    fn rejects_non_simple_and_out_of_range() {
        assert!(matches!(
            BandEntry::new(bw(3, &[]), 1, 2),
            Err(Error::NonSimpleEntry(2))
        ));
        assert!(matches!(
            BandEntry::new(bw(3, &[]), 3, 1),
            Err(Error::IndexOutOfRange { index: 3, degree: 3 })
        ));
        assert!(matches!(
            BandEntry::new(bw(3, &[]), 0, 1),
            Err(Error::IndexOutOfRange { index: 0, degree: 3 })
        ));
    }

    #[test]
    fn core_normalization() {
        // In B_2 the conjugator [1] cancels entirely.
        let e = BandEntry::new(bw(2, &[1]), 1, -1).unwrap();
        assert!(e.conjugator().is_empty());
        assert_eq!(e.expand().letters(), &[-1]);
        // A conjugator ending with the band letter is absorbed.
        let e = BandEntry::new(bw(3, &[1, 2]), 2, 1).unwrap();
        assert_eq!(e.expand().letters(), &[1, 2, -1]);
        assert_eq!(e.conjugator().letters(), &[1]);
        let e = BandEntry::new(bw(3, &[2, 1]), 1, 1).unwrap();
        assert_eq!(e.conjugator().letters(), &[2]);
        assert_eq!(e.index(), 1);
        assert_eq!(e.exponent(), 1);
    }

    #[test]
    fn sheet_pair_matches_permutation() {
        let e = BandEntry::new(bw(3, &[2]), 1, 1).unwrap();
        let p = e.permutation();
        let (a, b) = e.sheet_pair();
        assert_eq!(p.apply_one_based(a), b);
        assert_eq!(p.apply_one_based(b), a);
        assert_eq!((a, b), (1, 3));
    }
}
