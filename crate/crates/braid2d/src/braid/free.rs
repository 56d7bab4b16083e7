use std::fmt;

use crate::braid::word::{push_reduced, BraidWord};
use crate::error::{Error, Result};

/// A freely reduced word in the free group of the given rank. Letter `j`
/// denotes x_|j| to the power sign(j).
///
/// The constructor reduces; a `FreeWord` never holds an adjacent cancelling
/// pair.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        for &l in &letters {
            let idx = l.unsigned_abs() as usize;
            if l == 0 || idx > rank {
                return Err(Error::IndexOutOfRange { index: idx, degree: rank });
            }
        }
        let mut stack = Vec::with_capacity(letters.len());
        for l in letters {
            push_reduced(&mut stack, l);
        }
        Ok(FreeWord { rank, letters: stack })
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    /// The generator x_j (1-based).
    pub fn generator(rank: usize, j: usize) -> Result<Self> {
        if j < 1 || j > rank {
            return Err(Error::IndexOutOfRange { index: j, degree: rank });
        }
        Ok(FreeWord { rank, letters: vec![j as i32] })
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn multiply(&self, other: &FreeWord) -> Result<FreeWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { rank: other.rank, degree: self.rank });
        }
        let mut stack = Vec::with_capacity(self.letters.len() + other.letters.len());
        for &l in self.letters.iter().chain(other.letters.iter()) {
            push_reduced(&mut stack, l);
        }
        Ok(FreeWord { rank: self.rank, letters: stack })
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&l| -l).collect(),
        }
    }

    /// Net exponent of each generator; the abelianized word.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for &l in &self.letters {
            let idx = l.unsigned_abs() as usize - 1;
            sums[idx] += l.signum() as i64;
        }
        sums
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("x{}", l)
                } else {
                    format!("x{}^-1", -l)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}{:?}", self.rank, self.letters)
    }
}

/// Image of one free-group letter under one braid letter, pushed reduced.
///
/// σ_i sends x_i -> x_i x_{i+1} x_i^{-1} and x_{i+1} -> x_i; its inverse
/// sends x_i -> x_{i+1} and x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}. All other
/// generators are fixed.
fn push_letter_image(out: &mut Vec<i32>, braid_letter: i32, free_letter: i32) {
    let i = braid_letter.unsigned_abs() as i32;
    let j = free_letter.unsigned_abs() as i32;
    let positive = free_letter > 0;
    if braid_letter > 0 {
        if j == i {
            if positive {
                for l in [i, i + 1, -i] {
                    push_reduced(out, l);
                }
            } else {
                for l in [i, -(i + 1), -i] {
                    push_reduced(out, l);
                }
            }
        } else if j == i + 1 {
            push_reduced(out, if positive { i } else { -i });
        } else {
            push_reduced(out, free_letter);
        }
    } else if j == i {
        push_reduced(out, if positive { i + 1 } else { -(i + 1) });
    } else if j == i + 1 {
        if positive {
            for l in [-(i + 1), i, i + 1] {
                push_reduced(out, l);
            }
        } else {
            for l in [-(i + 1), -i, i + 1] {
                push_reduced(out, l);
            }
        }
    } else {
        push_reduced(out, free_letter);
    }
}

/// The Artin action of a braid word on a free word, first braid letter
/// acting first. The action of `uv` is the action of `u` followed by the
/// action of `v`.
pub fn artin_act(u: &BraidWord, x: &FreeWord) -> Result<FreeWord> {
    if x.rank != u.degree() {
        return Err(Error::RankMismatch { rank: x.rank, degree: u.degree() });
    }
    let mut current = x.letters.clone();
    for &g in u.letters() {
        let mut next = Vec::with_capacity(current.len() * 2);
        for &l in &current {
            push_letter_image(&mut next, g, l);
        }
        current = next;
    }
    Ok(FreeWord { rank: x.rank, letters: current })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(degree: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(degree, letters.to_vec()).unwrap()
    }

    fn fw(rank: usize, letters: &[i32]) -> FreeWord {
        FreeWord::new(rank, letters.to_vec()).unwrap()
    }

    #[test]
    fn constructor_reduces() {
        assert_eq!(fw(2, &[1, -1]).letters(), &[] as &[i32]);
        assert_eq!(fw(3, &[1, 2, -2, 3]).letters(), &[1, 3]);
        assert!(FreeWord::new(2, vec![3]).is_err());
    }

    #[test]
    fn artin_generator_images() {
        let x1 = FreeWord::generator(2, 1).unwrap();
        let x2 = FreeWord::generator(2, 2).unwrap();
        let s1 = bw(2, &[1]);
        assert_eq!(artin_act(&s1, &x1).unwrap().letters(), &[1, 2, -1]);
        assert_eq!(artin_act(&s1, &x2).unwrap().letters(), &[1]);
        let twice = bw(2, &[1, 1]);
        assert_eq!(artin_act(&twice, &x2).unwrap().letters(), &[1, 2, -1]);
    }

    #[test]
    fn artin_inverse_undoes() {
        let u = bw(4, &[1, -3, 2, 2, -1]);
        for j in 1..=4 {
            let x = FreeWord::generator(4, j).unwrap();
            let img = artin_act(&u, &x).unwrap();
            let back = artin_act(&u.inverse(), &img).unwrap();
            assert_eq!(back, x);
        }
    }

    #[test]
    fn artin_is_right_action() {
        let u = bw(3, &[1, 2]);
        let v = bw(3, &[-1, 2, 1]);
        let uv = u.multiply(&v).unwrap();
        for j in 1..=3 {
            let x = FreeWord::generator(3, j).unwrap();
            let via_product = artin_act(&uv, &x).unwrap();
            let stepwise = artin_act(&v, &artin_act(&u, &x).unwrap()).unwrap();
            assert_eq!(via_product, stepwise);
        }
    }

    #[test]
    fn artin_fixes_full_product() {
        // x_1 x_2 ... x_m is fixed by every braid.
        let u = bw(4, &[3, -1, 2, 1, 1, -3, 2]);
        let product = fw(4, &[1, 2, 3, 4]);
        assert_eq!(artin_act(&u, &product).unwrap(), product);
    }

    #[test]
    fn rank_mismatch_rejected() {
        let u = bw(3, &[1]);
        let x = FreeWord::generator(4, 1).unwrap();
        assert!(matches!(artin_act(&u, &x), Err(Error::RankMismatch { .. })));
    }
}
