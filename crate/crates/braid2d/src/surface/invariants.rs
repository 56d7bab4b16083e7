use crate::braid::{artin_act, FreeWord};
use crate::error::{Error, Result};
use crate::surface::group::GroupPresentation;
use crate::surface::tuple::MonodromyTuple;

/// Euler characteristic of the closure: a degree-m cover of the 2-sphere
/// with k simple branch points has χ = 2m − k.
pub fn euler_characteristic_closure(t: &MonodromyTuple) -> i64 {
    2 * t.degree() as i64 - t.branch_count() as i64
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Sheet orbits under the entry permutations, as sorted sheet lists ordered
/// by their smallest sheet.
fn sheet_orbits(t: &MonodromyTuple) -> Vec<Vec<usize>> {
    let m = t.degree();
    let mut uf = UnionFind::new(m + 1);
    for e in t.entries() {
        let (a, b) = e.sheet_pair();
        uf.union(a, b);
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut root_slot = vec![usize::MAX; m + 1];
    for sheet in 1..=m {
        let r = uf.find(sheet);
        if root_slot[r] == usize::MAX {
            root_slot[r] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[root_slot[r]].push(sheet);
    }
    orbits
}

/// Number of connected components of the closure surface: orbits of the
/// subgroup of S_m generated by the entry permutations.
pub fn components(t: &MonodromyTuple) -> usize {
    sheet_orbits(t).len()
}

/// Genus of each component, ordered by the component's smallest sheet.
/// Component c with m_c sheets and k_c in-component branch points has
/// χ_c = 2m_c − k_c and g_c = (2 − χ_c)/2.
///
/// A valid tuple always has every k_c even and every g_c ≥ 0; either
/// failing signals that the tuple never passed validation.
pub fn genus_list(t: &MonodromyTuple) -> Result<Vec<u64>> {
    let orbits = sheet_orbits(t);
    let mut genus = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let smallest = orbit[0];
        let k_c = t
            .entries()
            .iter()
            .filter(|e| orbit.binary_search(&e.sheet_pair().0).is_ok())
            .count();
        if k_c % 2 != 0 {
            return Err(Error::InternalParityViolation { sheet: smallest });
        }
        let g = 1 - orbit.len() as i64 + (k_c as i64) / 2;
        if g < 0 {
            return Err(Error::InternalParityViolation { sheet: smallest });
        }
        genus.push(g as u64);
    }
    Ok(genus)
}

/// Genus multiset: the sorted genus list, the form compared across moves
/// (components may be relabeled by a move, their genera may not).
pub fn genus_multiset(t: &MonodromyTuple) -> Result<Vec<u64>> {
    let mut g = genus_list(t)?;
    g.sort_unstable();
    Ok(g)
}

fn meridian_relators(t: &MonodromyTuple, invert_conjugator: bool) -> Vec<FreeWord> {
    let m = t.degree();
    t.entries()
        .iter()
        .map(|e| {
            let w = if invert_conjugator {
                e.conjugator().inverse()
            } else {
                e.conjugator().clone()
            };
            let xi = FreeWord::generator(m, e.index()).expect("index < degree");
            let xj = FreeWord::generator(m, e.index() + 1).expect("index + 1 <= degree");
            let a = artin_act(&w, &xi).expect("rank equals degree");
            let b = artin_act(&w, &xj).expect("rank equals degree");
            a.multiply(&b.inverse()).expect("equal ranks")
        })
        .collect()
}

/// Meridian presentation of the complement group of the closure:
/// generators x_1..x_m, one relator per branch point identifying the two
/// meridians merged there, transported back along the band. The entry
/// (w, i, e) yields artin_act(w^{-1}, x_i) · artin_act(w^{-1}, x_{i+1})^{-1};
/// with a trivial conjugator this is x_i x_{i+1}^{-1}.
pub fn complement_group(t: &MonodromyTuple) -> GroupPresentation {
    GroupPresentation::new(t.degree(), meridian_relators(t, true))
        .expect("relators are built over rank m")
}
