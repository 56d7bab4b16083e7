use crate::braid::{is_identity, BraidWord, Permutation};
use crate::surface::{BandEntry, MonodromyTuple};

fn cycle_count(p: &Permutation) -> usize {
    let n = p.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut at = start;
        while !seen[at] {
            seen[at] = true;
            at = p.apply(at);
        }
    }
    cycles
}

/// All band entries of the degree whose core conjugator has at most the
/// given length, each exactly once, in a fixed order: conjugator words by
/// length then lexicographically, then band index, then exponent +1, -1.
fn core_candidates(degree: usize, max_len: usize) -> Vec<BandEntry> {
    let letters: Vec<i32> = (1 - degree as i32..0).chain(1..degree as i32).collect();
    let mut out = Vec::new();
    let mut level: Vec<Vec<i32>> = vec![Vec::new()];
    for len in 0..=max_len {
        for word in &level {
            for i in 1..degree {
                for e in [1i8, -1] {
                    let w = BraidWord::new(degree, word.clone()).expect("letters in range");
                    let entry = BandEntry::new(w, i, e).expect("index in range");
                    if entry.conjugator().letters() == word.as_slice() {
                        out.push(entry);
                    }
                }
            }
        }
        if len < max_len {
            let mut next = Vec::with_capacity(level.len() * letters.len());
            for word in &level {
                for &l in &letters {
                    let mut longer = word.clone();
                    longer.push(l);
                    next.push(longer);
                }
            }
            level = next;
        }
    }
    out
}

struct Enumerator {
    degree: usize,
    branch_count: usize,
    candidates: Vec<BandEntry>,
    out: Vec<MonodromyTuple>,
}

impl Enumerator {
    fn dfs(
        &mut self,
        chosen: &mut Vec<BandEntry>,
        product: &BraidWord,
        perm: &Permutation,
        sign: i64,
    ) {
        let remaining = self.branch_count - chosen.len();
        if remaining == 0 {
            if is_identity(product) {
                let t = MonodromyTuple::new(self.degree, chosen.clone())
                    .expect("entries share the degree");
                self.out.push(t);
            }
            return;
        }
        // The rest must supply `remaining` transpositions multiplying to
        // the inverse permutation, and exponents summing to -sign.
        let needed = self.degree - cycle_count(perm);
        if needed > remaining || (remaining - needed) % 2 != 0 {
            return;
        }
        if sign.unsigned_abs() as usize > remaining
            || (sign + remaining as i64) % 2 != 0
        {
            return;
        }
        for idx in 0..self.candidates.len() {
            let cand = self.candidates[idx].clone();
            let next_product = product
                .multiply(&cand.expand())
                .expect("candidates share the degree");
            let next_perm = perm.then(&cand.permutation());
            let next_sign = sign + i64::from(cand.exponent());
            chosen.push(cand);
            self.dfs(chosen, &next_product, &next_perm, next_sign);
            chosen.pop();
        }
    }
}

/// Every valid tuple of the given degree and branch count whose core
/// conjugators are at most `max_conjugator_length` long, exactly once up
/// to entrywise word equality, in a fixed deterministic order.
pub fn enumerate_tuples(
    degree: usize,
    branch_count: usize,
    max_conjugator_length: usize,
) -> Vec<MonodromyTuple> {
    if degree == 0 {
        return Vec::new();
    }
    let mut e = Enumerator {
        degree,
        branch_count,
        candidates: core_candidates(degree, max_conjugator_length),
        out: Vec::new(),
    };
    e.dfs(
        &mut Vec::with_capacity(branch_count),
        &BraidWord::identity(degree),
        &Permutation::identity(degree),
        0,
    );
    e.out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn exponents(t: &MonodromyTuple) -> Vec<i8> {
        t.entries().iter().map(|e| e.exponent()).collect()
    }

    #[test]
    fn degree_one_has_only_the_empty_tuple() {
        let ts = enumerate_tuples(1, 0, 5);
        assert_eq!(ts.len(), 1);
        assert_eq!(ts[0].branch_count(), 0);
        assert!(enumerate_tuples(1, 2, 5).is_empty());
    }

    #[test]
    fn degree_two_pairs() {
        let ts = enumerate_tuples(2, 2, 0);
        assert_eq!(ts.len(), 2);
        assert_eq!(exponents(&ts[0]), [1, -1]);
        assert_eq!(exponents(&ts[1]), [-1, 1]);
    }

    #[test]
    fn degree_two_counts_match_sign_sequences() {
        assert_eq!(enumerate_tuples(2, 4, 0).len(), 6);
        assert_eq!(enumerate_tuples(2, 6, 0).len(), 20);
        assert!(enumerate_tuples(2, 3, 0).is_empty());
    }

    #[test]
    fn outputs_are_valid_and_distinct() {
        let ts = enumerate_tuples(3, 2, 1);
        for t in &ts {
            t.validate().unwrap();
        }
        let distinct: BTreeSet<Vec<BandEntry>> =
            ts.iter().map(|t| t.entries().to_vec()).collect();
        assert_eq!(distinct.len(), ts.len());
        // Entries that invert each other only up to a braid relation count
        // as a valid pair, so the enumeration is not merely syntactic.
        let cross = ts.iter().any(|t| {
            let a = t.entries()[0].clone();
            let b = t.entries()[1].clone();
            (a.conjugator().letters(), a.index()) != (b.conjugator().letters(), b.index())
        });
        assert!(cross);
    }
}
