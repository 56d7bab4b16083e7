use std::fmt;

use crate::braid::perm::Permutation;
use crate::error::{Error, Result};

/// A word in the braid group B_m. Letter `i` with `1 <= |i| <= m-1` denotes
/// the generator σ_|i| to the power sign(i); the empty word is the identity.
///
/// Words are kept as given: construction validates letter bounds but never
/// reduces. Use [`BraidWord::free_reduce`] or the arithmetic operations
/// (which reduce their output) when a reduced word is wanted.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidWord {
    degree: usize,
    letters: Vec<i32>,
}

/// Push a letter onto a reduced word, cancelling an adjacent inverse pair.
pub(crate) fn push_reduced(stack: &mut Vec<i32>, letter: i32) {
    if let Some(&top) = stack.last() {
        if top == -letter {
            stack.pop();
            return;
        }
    }
    stack.push(letter);
}

impl BraidWord {
    /// Validates every letter against the degree; malformed input is
    /// rejected, never normalized silently.
    pub fn new(degree: usize, letters: Vec<i32>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::IndexOutOfRange { index: 0, degree });
        }
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx >= degree {
                return Err(Error::IndexOutOfRange { index: idx, degree });
            }
        }
        Ok(BraidWord { degree, letters })
    }

    pub fn identity(degree: usize) -> Self {
        BraidWord { degree, letters: Vec::new() }
    }

    /// Single generator σ_i^e, `e = ±1`.
    pub fn generator(degree: usize, i: usize, e: i8) -> Result<Self> {
        if i < 1 || i >= degree {
            return Err(Error::IndexOutOfRange { index: i, degree });
        }
        Ok(BraidWord { degree, letters: vec![i as i32 * e.signum() as i32] })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Freely reduced copy: no adjacent cancelling pair remains.
    pub fn free_reduce(&self) -> BraidWord {
        let mut stack = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            push_reduced(&mut stack, l);
        }
        BraidWord { degree: self.degree, letters: stack }
    }

    /// Concatenation, freely reduced.
    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: other.degree });
        }
        let mut stack = Vec::with_capacity(self.letters.len() + other.letters.len());
        for &l in self.letters.iter().chain(other.letters.iter()) {
            push_reduced(&mut stack, l);
        }
        Ok(BraidWord { degree: self.degree, letters: stack })
    }

    /// Reversed word with negated letters.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            degree: self.degree,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Image under the projection B_m -> S_m, σ_i -> (i i+1), first letter
    /// acting first.
    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.degree);
        for &l in &self.letters {
            let t = Permutation::transposition(self.degree, l.unsigned_abs() as usize)
                .expect("letters validated at construction");
            p = p.then(&t);
        }
        p
    }

    /// The band generator w σ_i^e w^{-1}, freely reduced.
    pub fn band_generator(w: &BraidWord, i: usize, e: i8) -> Result<BraidWord> {
        let g = BraidWord::generator(w.degree, i, e)?;
        w.multiply(&g)?.multiply(&w.inverse())
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "B{}[{}]", self.degree, strs.join(","))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(degree: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(degree, letters.to_vec()).unwrap()
    }

    #[test]
    fn construction_bounds() {
        assert!(BraidWord::new(3, vec![1, 2, -2]).is_ok());
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(1, vec![1]).is_err());
        assert!(BraidWord::new(1, vec![]).is_ok());
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w(2, &[1, -1]).free_reduce().letters(), &[] as &[i32]);
        assert_eq!(w(2, &[]).free_reduce().letters(), &[] as &[i32]);
        assert_eq!(w(3, &[1, 2, -2, -1]).free_reduce().letters(), &[] as &[i32]);
        // Construction does not reduce on its own.
        assert_eq!(w(2, &[1, -1]).letters(), &[1, -1]);
    }

    #[test]
    fn multiply_examples() {
        assert_eq!(w(2, &[1]).multiply(&w(2, &[-1])).unwrap().letters(), &[] as &[i32]);
        assert_eq!(w(3, &[1]).multiply(&w(3, &[2])).unwrap().letters(), &[1, 2]);
        assert_eq!(
            w(3, &[1, 2]).multiply(&w(3, &[-2, -1])).unwrap().letters(),
            &[] as &[i32]
        );
        assert!(w(3, &[1]).multiply(&w(4, &[1])).is_err());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(w(3, &[1, 2]).inverse().letters(), &[-2, -1]);
        assert_eq!(w(3, &[]).inverse().letters(), &[] as &[i32]);
        assert_eq!(w(4, &[-3]).inverse().letters(), &[3]);
        let u = w(4, &[1, -3, 2, 2]);
        assert!(u.multiply(&u.inverse()).unwrap().is_empty());
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(w(3, &[1]).permutation().images_one_based(), vec![2, 1, 3]);
        assert_eq!(w(3, &[1, 2, 1]).permutation().images_one_based(), vec![3, 2, 1]);
        assert!(w(3, &[]).permutation().is_identity());
    }

    #[test]
    fn permutation_is_homomorphism() {
        let u = w(4, &[1, -3, 2]);
        let v = w(4, &[2, 2, -1]);
        let uv = u.multiply(&v).unwrap();
        assert_eq!(uv.permutation(), u.permutation().then(&v.permutation()));
    }

    #[test]
    fn band_generator_examples() {
        assert_eq!(BraidWord::band_generator(&w(2, &[]), 1, 1).unwrap().letters(), &[1]);
        assert_eq!(
            BraidWord::band_generator(&w(3, &[2]), 1, 1).unwrap().letters(),
            &[2, 1, -2]
        );
        assert_eq!(
            BraidWord::band_generator(&w(2, &[1]), 1, -1).unwrap().letters(),
            &[-1]
        );
        assert!(BraidWord::band_generator(&w(2, &[]), 2, 1).is_err());
    }
}
