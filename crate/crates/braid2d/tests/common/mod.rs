#![allow(dead_code)]

use braid2d::braid::BraidWord;
use braid2d::surface::{BandEntry, HurwitzDirection, MonodromyTuple};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_letter<R: Rng>(r: &mut R, degree: usize) -> i32 {
    let magnitude = r.gen_range(1..degree) as i32;
    if r.gen_bool(0.5) {
        magnitude
    } else {
        -magnitude
    }
}

pub fn random_word<R: Rng>(r: &mut R, degree: usize, max_len: usize) -> BraidWord {
    if degree < 2 {
        return BraidWord::identity(degree);
    }
    let len = r.gen_range(0..=max_len);
    let letters = (0..len).map(|_| random_letter(r, degree)).collect();
    BraidWord::new(degree, letters).expect("letters in range")
}

/// A valid tuple: cancelling band pairs, scrambled by Hurwitz moves and
/// conjugations. Scramble steps that would push any core conjugator past
/// `max_conj` letters are skipped, so entry growth stays bounded.
pub fn random_valid_tuple<R: Rng>(
    r: &mut R,
    max_degree: usize,
    max_branch: usize,
    max_conj: usize,
) -> MonodromyTuple {
    let degree = r.gen_range(2..=max_degree);
    let mut entries = Vec::new();
    for _ in 0..r.gen_range(0..=max_branch / 2) {
        let w = random_word(r, degree, max_conj);
        let i = r.gen_range(1..degree);
        let e: i8 = if r.gen_bool(0.5) { 1 } else { -1 };
        entries.push(BandEntry::new(w.clone(), i, e).expect("valid entry"));
        entries.push(BandEntry::new(w, i, -e).expect("valid entry"));
    }
    let mut t = MonodromyTuple::new(degree, entries).expect("consistent degrees");
    for _ in 0..r.gen_range(0..=12) {
        let k = t.branch_count();
        let candidate = match r.gen_range(0..3u8) {
            0 | 1 if k >= 2 => {
                let i = r.gen_range(1..k);
                let dir = if r.gen_bool(0.5) {
                    HurwitzDirection::Forward
                } else {
                    HurwitzDirection::Backward
                };
                t.hurwitz(i, dir).expect("position in range")
            }
            2 => {
                let b = BraidWord::new(degree, vec![random_letter(r, degree)]).unwrap();
                t.conjugate(&b).expect("same degree")
            }
            _ => continue,
        };
        if candidate
            .entries()
            .iter()
            .all(|e| e.conjugator().len() <= max_conj)
        {
            t = candidate;
        }
    }
    t
}
