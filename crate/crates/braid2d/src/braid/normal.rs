use std::fmt;

use crate::braid::perm::Permutation;
use crate::braid::word::BraidWord;
use crate::error::{Error, Result};

/// Garside left-greedy normal form Δ^p A_1 ⋯ A_k of a braid in B_m.
///
/// Invariants: no factor is the identity or the half-twist permutation, and
/// each adjacent pair is left-weighted (the starting set of factor t+1 is
/// contained in the finishing set of factor t). Two words represent the same
/// element of B_m iff their normal forms are identical.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    degree: usize,
    infimum: i64,
    factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// The power of the half twist Δ_m in front of the positive factors.
    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    /// Permutation-braid factors, left to right.
    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    /// A word representing the same braid: Δ^p followed by the canonical
    /// word of each factor.
    pub fn to_word(&self) -> BraidWord {
        let m = self.degree;
        let delta_word = perm_braid_word(&Permutation::half_twist(m));
        let mut letters: Vec<i32> = Vec::new();
        if self.infimum >= 0 {
            for _ in 0..self.infimum {
                letters.extend_from_slice(&delta_word);
            }
        } else {
            let inv: Vec<i32> = delta_word.iter().rev().map(|&l| -l).collect();
            for _ in 0..self.infimum.unsigned_abs() {
                letters.extend_from_slice(&inv);
            }
        }
        for f in &self.factors {
            letters.extend_from_slice(&perm_braid_word(f));
        }
        BraidWord::new(m, letters).expect("factor letters are bounded by the degree")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.infimum)?;
        for factor in &self.factors {
            write!(f, " {}", factor)?;
        }
        Ok(())
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NF(deg={}, inf={}, factors={:?})", self.degree, self.infimum, self.factors)
    }
}

/// The canonical positive word of the permutation braid for `p`: repeatedly
/// emit the smallest descent. Length equals the inversion count.
pub fn perm_braid_word(p: &Permutation) -> Vec<i32> {
    let m = p.len();
    let mut current = p.clone();
    let mut out = Vec::with_capacity(current.inversions());
    loop {
        let descents = current.descents();
        let Some(&i) = descents.first() else { break };
        out.push(i as i32);
        let tau = Permutation::transposition(m, i).expect("descent index is in range");
        current = tau.then(&current);
    }
    out
}

/// Slides crossings leftward until the pair is left-weighted or `b` is
/// exhausted. Returns true if anything moved.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation, m: usize) -> bool {
    let mut changed = false;
    loop {
        let finishing = a.inverse().descents();
        let candidate = b
            .descents()
            .into_iter()
            .find(|i| !finishing.contains(i));
        let Some(i) = candidate else { break };
        let tau = Permutation::transposition(m, i).expect("descent index is in range");
        *a = a.then(&tau);
        *b = tau.then(b);
        changed = true;
        if b.is_identity() {
            break;
        }
    }
    changed
}

/// Garside left-greedy normal form. Ingests letters one at a time (a
/// negative letter σ_i^{-1} enters as Δ^{-1}(Δσ_i^{-1}), conjugating the
/// factors already present), then left-weights adjacent factors to a
/// fixpoint and absorbs leading half twists into the infimum.
pub fn normal_form(u: &BraidWord) -> NormalForm {
    let m = u.degree();
    if m == 1 {
        return NormalForm { degree: 1, infimum: 0, factors: Vec::new() };
    }
    let delta = Permutation::half_twist(m);
    let mut infimum: i64 = 0;
    let mut factors: Vec<Permutation> = Vec::new();
    for &l in u.letters() {
        let i = l.unsigned_abs() as usize;
        let tau = Permutation::transposition(m, i).expect("letters are bounded by the degree");
        if l > 0 {
            factors.push(tau);
        } else {
            infimum -= 1;
            for f in factors.iter_mut() {
                *f = delta.then(f).then(&delta);
            }
            factors.push(delta.then(&tau));
        }
    }
    // In B_2 the ingested factor delta.then(tau) is the identity; the pair
    // sweep below only prunes identities sitting right of a pair.
    factors.retain(|f| !f.is_identity());
    loop {
        let mut changed = false;
        let mut t = 0;
        while t + 1 < factors.len() {
            let (left, right) = factors.split_at_mut(t + 1);
            let a = &mut left[t];
            let b = &mut right[0];
            if make_left_weighted(a, b, m) {
                changed = true;
            }
            if factors[t + 1].is_identity() {
                factors.remove(t + 1);
            } else {
                t += 1;
            }
        }
        if !changed {
            break;
        }
    }
    while factors.first() == Some(&delta) {
        factors.remove(0);
        infimum += 1;
    }
    NormalForm { degree: m, infimum, factors }
}

/// Whether two words represent the same element of B_m.
pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.degree() != v.degree() {
        return Err(Error::DegreeMismatch { left: u.degree(), right: v.degree() });
    }
    Ok(normal_form(u) == normal_form(v))
}

/// Whether the word represents the identity braid.
pub fn is_identity(u: &BraidWord) -> bool {
    normal_form(u).is_trivial()
}
