use crate::braid::FreeWord;
use crate::error::{Error, Result};

/// A finite presentation ⟨x_1..x_rank | relators⟩.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupPresentation {
    rank: usize,
    relators: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(rank: usize, relators: Vec<FreeWord>) -> Result<Self> {
        for r in &relators {
            if r.rank() != rank {
                return Err(Error::RankMismatch { rank: r.rank(), degree: rank });
            }
        }
        Ok(GroupPresentation { rank, relators })
    }

    pub fn free(rank: usize) -> Self {
        GroupPresentation { rank, relators: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }
}

/// Rank of the abelianization: generator count minus the rank of the
/// integer exponent-sum matrix of the relators. Torsion cannot hide rank
/// here, and rational rank equals integer rank, so fraction-free
/// elimination suffices.
pub fn abelianization_rank(p: &GroupPresentation) -> usize {
    let rows: Vec<Vec<i128>> = p
        .relators
        .iter()
        .map(|r| r.exponent_sums().into_iter().map(i128::from).collect())
        .collect();
    p.rank - matrix_rank(rows, p.rank)
}

fn matrix_rank(mut rows: Vec<Vec<i128>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let pivot = rows[rank][col];
        for r in rank + 1..rows.len() {
            let factor = rows[r][col];
            if factor == 0 {
                continue;
            }
            for c in col..cols {
                rows[r][c] = rows[r][c] * pivot - rows[rank][c] * factor;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Step cap for [`count_homs`]: every relator evaluation and branch node
/// spends one step; exceeding the cap aborts with BudgetExceeded.
pub const HOM_COUNT_STEP_CAP: u64 = 100_000_000;

struct SymmetricTable {
    order: usize,
    mult: Vec<u16>,
    inv: Vec<u16>,
    identity: u16,
}

impl SymmetricTable {
    fn new(n: usize) -> Self {
        let mut perms: Vec<Vec<u8>> = vec![(0..n as u8).collect()];
        // Lexicographic enumeration by repeated next-permutation.
        loop {
            let last = perms.last().unwrap();
            let mut p = last.clone();
            let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            perms.push(p);
        }
        let order = perms.len();
        let index_of = |p: &[u8]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap() as u16;
        let mut mult = vec![0u16; order * order];
        let mut inv = vec![0u16; order];
        let mut buf = vec![0u8; n];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                for x in 0..n {
                    buf[x] = pb[pa[x] as usize];
                }
                mult[a * order + b] = index_of(&buf);
            }
            for x in 0..n {
                buf[pa[x] as usize] = x as u8;
            }
            inv[a] = index_of(&buf);
        }
        let identity = index_of(&(0..n as u8).collect::<Vec<_>>());
        SymmetricTable { order, mult, inv, identity }
    }

    fn mul(&self, a: u16, b: u16) -> u16 {
        self.mult[a as usize * self.order + b as usize]
    }

    fn letter(&self, image: u16, sign_positive: bool) -> u16 {
        if sign_positive {
            image
        } else {
            self.inv[image as usize]
        }
    }
}

struct HomCounter<'a> {
    table: &'a SymmetricTable,
    relators: Vec<&'a [i32]>,
    steps: u64,
}

impl<'a> HomCounter<'a> {
    fn spend(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > HOM_COUNT_STEP_CAP {
            return Err(Error::BudgetExceeded(HOM_COUNT_STEP_CAP));
        }
        Ok(())
    }

    /// Splits a relator around the single occurrence of `gen` and solves
    /// for its image: P g^s S = 1 gives g^s = P^{-1} S^{-1}.
    fn solve_single(&mut self, relator: &[i32], gen: usize, assign: &[Option<u16>]) -> Result<u16> {
        self.spend()?;
        let pos = relator
            .iter()
            .position(|&l| l.unsigned_abs() as usize == gen)
            .expect("gen occurs in relator");
        let t = self.table;
        let mut prefix = t.identity;
        for &l in &relator[..pos] {
            let img = assign[l.unsigned_abs() as usize].expect("prefix fully assigned");
            prefix = t.mul(prefix, t.letter(img, l > 0));
        }
        let mut suffix = t.identity;
        for &l in &relator[pos + 1..] {
            let img = assign[l.unsigned_abs() as usize].expect("suffix fully assigned");
            suffix = t.mul(suffix, t.letter(img, l > 0));
        }
        let value = t.mul(t.inv[prefix as usize], t.inv[suffix as usize]);
        Ok(if relator[pos] > 0 { value } else { t.inv[value as usize] })
    }

    fn evaluate(&mut self, relator: &[i32], assign: &[Option<u16>]) -> Result<u16> {
        self.spend()?;
        let t = self.table;
        let mut acc = t.identity;
        for &l in relator {
            let img = assign[l.unsigned_abs() as usize].expect("relator fully assigned");
            acc = t.mul(acc, t.letter(img, l > 0));
        }
        Ok(acc)
    }

    /// Propagates forced assignments. Returns false on contradiction.
    fn propagate(
        &mut self,
        assign: &mut Vec<Option<u16>>,
        trail: &mut Vec<usize>,
    ) -> Result<bool> {
        loop {
            let mut progressed = false;
            for ri in 0..self.relators.len() {
                let relator = self.relators[ri];
                let mut unassigned: Option<usize> = None;
                let mut multiple = false;
                for &l in relator {
                    let g = l.unsigned_abs() as usize;
                    if assign[g].is_none() {
                        match unassigned {
                            None => unassigned = Some(g),
                            Some(prev) if prev == g => {}
                            Some(_) => {
                                multiple = true;
                                break;
                            }
                        }
                    }
                }
                if multiple {
                    continue;
                }
                match unassigned {
                    None => {
                        if self.evaluate(relator, assign)? != self.table.identity {
                            return Ok(false);
                        }
                    }
                    Some(g) => {
                        let occurrences = relator
                            .iter()
                            .filter(|&&l| l.unsigned_abs() as usize == g)
                            .count();
                        if occurrences == 1 {
                            let value = self.solve_single(relator, g, assign)?;
                            assign[g] = Some(value);
                            trail.push(g);
                            progressed = true;
                        }
                    }
                }
            }
            if !progressed {
                return Ok(true);
            }
        }
    }

    fn search(&mut self, gens: &[usize], assign: &mut Vec<Option<u16>>) -> Result<u64> {
        self.spend()?;
        let mut trail = Vec::new();
        let ok = self.propagate(assign, &mut trail)?;
        let mut total = 0;
        if ok {
            match gens.iter().find(|&&g| assign[g].is_none()) {
                None => total = 1,
                Some(&g) => {
                    for value in 0..self.table.order as u16 {
                        assign[g] = Some(value);
                        total += self.search(gens, assign)?;
                        assign[g] = None;
                    }
                }
            }
        }
        for g in trail {
            assign[g] = None;
        }
        Ok(total)
    }
}

/// Number of homomorphisms from the presented group to the symmetric group
/// S_n, for n between 2 and 5: generator-image assignments satisfying every
/// relator, counted by backtracking with single-occurrence propagation.
/// Generators untouched by any relator contribute a free factor of (n!)^f.
/// Work is capped at [`HOM_COUNT_STEP_CAP`] steps.
pub fn count_homs(p: &GroupPresentation, n: usize) -> Result<u64> {
    if !(2..=5).contains(&n) {
        return Err(Error::IndexOutOfRange { index: n, degree: 5 });
    }
    let table = SymmetricTable::new(n);
    let factorial = table.order as u64;

    let mut constrained = vec![false; p.rank + 1];
    for r in &p.relators {
        for &l in r.letters() {
            constrained[l.unsigned_abs() as usize] = true;
        }
    }
    let gens: Vec<usize> = (1..=p.rank).filter(|&g| constrained[g]).collect();
    let free = p.rank - gens.len();

    let relators: Vec<&[i32]> = p.relators.iter().map(|r| r.letters()).collect();
    let mut counter = HomCounter { table: &table, relators, steps: 0 };
    let mut assign: Vec<Option<u16>> = vec![None; p.rank + 1];
    let constrained_count = counter.search(&gens, &mut assign)?;

    Ok(constrained_count * factorial.pow(free as u32))
}
