use std::collections::BTreeMap;

use crate::surface::{
    abelianization_rank, complement_group, components, count_homs, euler_characteristic_closure,
    genus_multiset, MonodromyTuple,
};

use super::key::{canonical_key, CanonicalKey};
use super::moves::{inverse_moves, neighbors_filtered, Move, MoveFilter, SearchBounds};

/// Outcome of a bounded equivalence search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    /// A move sequence carrying the left tuple onto the right one's key.
    Equivalent { trace: Vec<Move> },
    /// A move-invariant quantity separates the two tuples.
    Distinct {
        invariant: &'static str,
        left: String,
        right: String,
    },
    /// Search exhausted its bounds without an answer; never a refutation.
    Unknown { explored: u64 },
}

struct Node {
    tuple: MonodromyTuple,
    parent: Option<(CanonicalKey, Move)>,
    depth: usize,
}

struct Side {
    nodes: BTreeMap<CanonicalKey, Node>,
    frontier: Vec<CanonicalKey>,
    depth: usize,
}

impl Side {
    fn rooted(t: &MonodromyTuple, key: CanonicalKey) -> Side {
        let mut nodes = BTreeMap::new();
        nodes.insert(
            key.clone(),
            Node {
                tuple: t.clone(),
                parent: None,
                depth: 0,
            },
        );
        Side {
            nodes,
            frontier: vec![key],
            depth: 0,
        }
    }
}

fn screen(a: &MonodromyTuple, b: &MonodromyTuple) -> Option<Verdict> {
    let distinct = |invariant: &'static str, left: String, right: String| {
        Some(Verdict::Distinct {
            invariant,
            left,
            right,
        })
    };
    let (xl, xr) = (
        euler_characteristic_closure(a),
        euler_characteristic_closure(b),
    );
    if xl != xr {
        return distinct("euler_characteristic", xl.to_string(), xr.to_string());
    }
    let (cl, cr) = (components(a), components(b));
    if cl != cr {
        return distinct("components", cl.to_string(), cr.to_string());
    }
    let gl = genus_multiset(a).expect("valid tuple has even branch counts per component");
    let gr = genus_multiset(b).expect("valid tuple has even branch counts per component");
    if gl != gr {
        return distinct("genus_multiset", format!("{:?}", gl), format!("{:?}", gr));
    }
    let (pa, pb) = (complement_group(a), complement_group(b));
    let (rl, rr) = (abelianization_rank(&pa), abelianization_rank(&pb));
    if rl != rr {
        return distinct("abelianization_rank", rl.to_string(), rr.to_string());
    }
    if let (Ok(hl), Ok(hr)) = (count_homs(&pa, 3), count_homs(&pb, 3)) {
        if hl != hr {
            return distinct("hom_count_s3", hl.to_string(), hr.to_string());
        }
    }
    None
}

/// Edges (move, parent tuple context) along the tree path from `meet` up to
/// the side's root, in meet-to-root order.
fn climb<'a>(side: &'a Side, meet: &CanonicalKey) -> Vec<(Move, &'a MonodromyTuple)> {
    let mut edges = Vec::new();
    let mut key = meet.clone();
    while let Some((parent, mv)) = side.nodes[&key].parent.clone() {
        edges.push((mv, &side.nodes[&parent].tuple));
        key = parent;
    }
    edges
}

fn compose_trace(side_a: &Side, side_b: &Side, meet: &CanonicalKey) -> Vec<Move> {
    let mut trace: Vec<Move> = climb(side_a, meet)
        .into_iter()
        .rev()
        .map(|(mv, _)| mv)
        .collect();
    for (mv, pre) in climb(side_b, meet) {
        trace.extend(inverse_moves(mv, pre));
    }
    trace
}

/// Bounded bidirectional breadth-first equivalence prover.
///
/// Screens the move-invariant quantities first, then searches the move
/// graph on canonical keys. An `Equivalent` trace is replayable and of
/// minimal length among the paths the bounded search discovered; budget
/// exhaustion (including in the screen's hom count) folds into `Unknown`.
///
/// Panics if either tuple fails `validate`.
pub fn search_equivalence(
    left: &MonodromyTuple,
    right: &MonodromyTuple,
    bounds: &SearchBounds,
) -> Verdict {
    search_equivalence_filtered(left, right, bounds, MoveFilter::All)
}

/// [`search_equivalence`] restricted to a subset of the move kinds. The
/// screen stays sound: its invariants are unchanged by every move kind.
pub fn search_equivalence_filtered(
    left: &MonodromyTuple,
    right: &MonodromyTuple,
    bounds: &SearchBounds,
    filter: MoveFilter,
) -> Verdict {
    left.validate().expect("left tuple must be valid");
    right.validate().expect("right tuple must be valid");
    if let Some(verdict) = screen(left, right) {
        return verdict;
    }

    let key_l = canonical_key(left);
    let key_r = canonical_key(right);
    if key_l == key_r {
        return Verdict::Equivalent { trace: Vec::new() };
    }

    let mut side_a = Side::rooted(left, key_l.clone());
    let mut side_b = Side::rooted(right, key_r.clone());
    let mut explored: u64 = 2;
    // Meet keys with the total depth at which they were discovered.
    let mut candidates: Vec<(usize, CanonicalKey)> = Vec::new();

    'rounds: loop {
        if side_a.depth + side_b.depth >= bounds.max_depth {
            break;
        }
        if side_a.frontier.is_empty() && side_b.frontier.is_empty() {
            break;
        }
        let expand_a = if side_a.frontier.is_empty() {
            false
        } else if side_b.frontier.is_empty() {
            true
        } else if side_a.frontier.len() != side_b.frontier.len() {
            side_a.frontier.len() < side_b.frontier.len()
        } else {
            // Swapping the inputs swaps the sides; comparing root keys keeps
            // the expansion schedule, and so the verdict, symmetric.
            key_l < key_r
        };
        let (this, other) = if expand_a {
            (&mut side_a, &side_b)
        } else {
            (&mut side_b, &side_a)
        };

        let frontier = std::mem::take(&mut this.frontier);
        let mut next = Vec::new();
        for key in frontier {
            let tuple = this.nodes[&key].tuple.clone();
            for (mv, succ) in neighbors_filtered(&tuple, bounds, filter) {
                let succ_key = canonical_key(&succ);
                if this.nodes.contains_key(&succ_key) {
                    continue;
                }
                if explored >= bounds.node_budget {
                    break 'rounds;
                }
                explored += 1;
                if let Some(theirs) = other.nodes.get(&succ_key) {
                    candidates.push((this.depth + 1 + theirs.depth, succ_key.clone()));
                }
                this.nodes.insert(
                    succ_key.clone(),
                    Node {
                        tuple: succ,
                        parent: Some((key.clone(), mv)),
                        depth: this.depth + 1,
                    },
                );
                next.push(succ_key);
            }
        }
        next.sort();
        this.frontier = next;
        this.depth += 1;

        if let Some(min_total) = candidates.iter().map(|c| c.0).min() {
            // Any meet not yet discovered costs more than the completed
            // layers, so this one is already of minimal total depth.
            if min_total <= side_a.depth + side_b.depth {
                break;
            }
        }
    }

    let min_total = match candidates.iter().map(|c| c.0).min() {
        Some(t) => t,
        None => return Verdict::Unknown { explored },
    };
    let trace = candidates
        .iter()
        .filter(|c| c.0 == min_total)
        .map(|c| compose_trace(&side_a, &side_b, &c.1))
        .min()
        .expect("candidate set is nonempty");
    Verdict::Equivalent { trace }
}

/// Keys reachable from `t` within the bounds, each with its discovery depth.
#[derive(Clone, Debug)]
pub struct Reachability {
    pub keys: BTreeMap<CanonicalKey, usize>,
    /// True when the depth or node budget cut the sweep short, in which
    /// case the set may be a strict subset of the component.
    pub truncated: bool,
}

pub fn reachable_keys(
    t: &MonodromyTuple,
    bounds: &SearchBounds,
    filter: MoveFilter,
) -> Reachability {
    let root = canonical_key(t);
    let mut keys = BTreeMap::new();
    keys.insert(root.clone(), 0usize);
    let mut tuples: BTreeMap<CanonicalKey, MonodromyTuple> = BTreeMap::new();
    tuples.insert(root.clone(), t.clone());
    let mut frontier = vec![root];
    let mut depth = 0usize;
    let mut truncated = false;
    'sweep: while !frontier.is_empty() {
        if depth >= bounds.max_depth {
            truncated = true;
            break;
        }
        let mut next = Vec::new();
        for key in std::mem::take(&mut frontier) {
            let tuple = tuples[&key].clone();
            for (_, succ) in neighbors_filtered(&tuple, bounds, filter) {
                let succ_key = canonical_key(&succ);
                if keys.contains_key(&succ_key) {
                    continue;
                }
                if keys.len() as u64 >= bounds.node_budget {
                    truncated = true;
                    break 'sweep;
                }
                keys.insert(succ_key.clone(), depth + 1);
                tuples.insert(succ_key.clone(), succ);
                next.push(succ_key);
            }
        }
        next.sort();
        frontier = next;
        depth += 1;
    }
    Reachability { keys, truncated }
}

/// Partition of a list of tuples into bounded-reachability classes.
#[derive(Clone, Debug)]
pub struct Census {
    /// Classes as sorted index lists into the input slice, ordered by
    /// their smallest member.
    pub classes: Vec<Vec<usize>>,
    /// True when any sweep was cut short; classes may then be finer than
    /// true move-equivalence classes.
    pub truncated: bool,
}

pub fn census(tuples: &[MonodromyTuple], bounds: &SearchBounds, filter: MoveFilter) -> Census {
    let keys: Vec<CanonicalKey> = tuples.iter().map(canonical_key).collect();
    let mut class_of: Vec<Option<usize>> = vec![None; tuples.len()];
    let mut classes = Vec::new();
    let mut truncated = false;
    for i in 0..tuples.len() {
        if class_of[i].is_some() {
            continue;
        }
        let reach = reachable_keys(&tuples[i], bounds, filter);
        truncated |= reach.truncated;
        let id = classes.len();
        let mut members = Vec::new();
        for j in i..tuples.len() {
            if class_of[j].is_none() && reach.keys.contains_key(&keys[j]) {
                class_of[j] = Some(id);
                members.push(j);
            }
        }
        classes.push(members);
    }
    Census { classes, truncated }
}
