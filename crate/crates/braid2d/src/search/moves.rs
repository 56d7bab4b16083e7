use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::surface::{HurwitzDirection, MonodromyTuple};

/// One elementary step of the equivalence calculus.
///
/// The derived ordering (variant order, then parameter) is the order in
/// which `neighbors` emits successors, so searches are deterministic.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Move {
    /// Hurwitz move at position i (1-based), sliding entry i over entry i+1.
    HurwitzForward(usize),
    /// Inverse Hurwitz move at position i.
    HurwitzBackward(usize),
    /// Simultaneous conjugation of every entry by the generator with this
    /// signed index.
    Conjugate(i32),
    /// Degree m -> m+1 stabilization.
    Stabilize,
    /// Removal of a trailing stabilization pair, degree m -> m-1.
    Destabilize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Move::HurwitzForward(i) => write!(f, "H{}", i),
            Move::HurwitzBackward(i) => write!(f, "H{}'", i),
            Move::Conjugate(l) => {
                if l > 0 {
                    write!(f, "C+{}", l)
                } else {
                    write!(f, "C{}", l)
                }
            }
            Move::Stabilize => write!(f, "S"),
            Move::Destabilize => write!(f, "D"),
        }
    }
}

/// Resource limits for move enumeration and search.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SearchBounds {
    /// Maximum total trace length considered.
    pub max_depth: usize,
    /// Stabilization is only offered while the degree is below this.
    pub max_degree: usize,
    /// Successors whose entries carry longer core conjugators are pruned.
    /// This bounds the state space; it limits completeness, never soundness.
    pub max_conjugator_length: usize,
    /// Maximum number of distinct keys a search may store.
    pub node_budget: u64,
}

impl SearchBounds {
    pub fn default_for_degree(degree: usize) -> SearchBounds {
        SearchBounds {
            max_depth: 8,
            max_degree: degree + 2,
            max_conjugator_length: 8,
            node_budget: 1_000_000,
        }
    }
}

/// Which move kinds a reachability sweep may use.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MoveFilter {
    All,
    HurwitzOnly,
}

/// Applies one move to a tuple.
///
/// Errors mirror the underlying operation; `Destabilize` on a tuple whose
/// tail is not a stabilization pair reports `InapplicableMove`.
pub fn apply_move(t: &MonodromyTuple, mv: Move) -> Result<MonodromyTuple> {
    match mv {
        Move::HurwitzForward(i) => t.hurwitz(i, HurwitzDirection::Forward),
        Move::HurwitzBackward(i) => t.hurwitz(i, HurwitzDirection::Backward),
        Move::Conjugate(l) => {
            let b = BraidWord::new(t.degree(), vec![l])?;
            t.conjugate(&b)
        }
        Move::Stabilize => Ok(t.stabilize()),
        Move::Destabilize => t.destabilize().ok_or(Error::InapplicableMove {
            index: 0,
            reason: "tail is not a stabilization pair".into(),
        }),
    }
}

/// Replays a trace, failing with the position of the first move that does
/// not apply. Returns the final tuple.
pub fn verify_trace(start: &MonodromyTuple, trace: &[Move]) -> Result<MonodromyTuple> {
    let mut current = start.clone();
    for (pos, &mv) in trace.iter().enumerate() {
        current = apply_move(&current, mv).map_err(|e| {
            let reason = match e {
                Error::InapplicableMove { reason, .. } => reason,
                other => other.to_string(),
            };
            Error::InapplicableMove { index: pos, reason }
        })?;
    }
    Ok(current)
}

fn within_conjugator_bound(t: &MonodromyTuple, bound: usize) -> bool {
    t.entries().iter().all(|e| e.conjugator().len() <= bound)
}

/// Enumerates the successors of `t` permitted by `bounds`, in `Move` order.
///
/// Hurwitz moves and conjugations whose result would exceed the conjugator
/// length bound are dropped; stabilization is offered below the degree cap;
/// destabilization is offered whenever it applies.
pub fn neighbors_filtered(
    t: &MonodromyTuple,
    bounds: &SearchBounds,
    filter: MoveFilter,
) -> Vec<(Move, MonodromyTuple)> {
    let mut out = Vec::new();
    let k = t.branch_count();
    for i in 1..k {
        if let Ok(next) = t.hurwitz(i, HurwitzDirection::Forward) {
            if within_conjugator_bound(&next, bounds.max_conjugator_length) {
                out.push((Move::HurwitzForward(i), next));
            }
        }
    }
    for i in 1..k {
        if let Ok(next) = t.hurwitz(i, HurwitzDirection::Backward) {
            if within_conjugator_bound(&next, bounds.max_conjugator_length) {
                out.push((Move::HurwitzBackward(i), next));
            }
        }
    }
    if filter == MoveFilter::HurwitzOnly {
        return out;
    }
    let m = t.degree() as i32;
    for l in (1 - m..0).chain(1..m) {
        let b = BraidWord::new(t.degree(), vec![l]).expect("generator letter");
        if let Ok(next) = t.conjugate(&b) {
            if within_conjugator_bound(&next, bounds.max_conjugator_length) {
                out.push((Move::Conjugate(l), next));
            }
        }
    }
    if t.degree() < bounds.max_degree {
        out.push((Move::Stabilize, t.stabilize()));
    }
    if let Some(next) = t.destabilize() {
        out.push((Move::Destabilize, next));
    }
    out
}

pub fn neighbors(t: &MonodromyTuple, bounds: &SearchBounds) -> Vec<(Move, MonodromyTuple)> {
    neighbors_filtered(t, bounds, MoveFilter::All)
}

/// Moves that undo `mv` when `pre` was the tuple the move was applied to.
///
/// Every move except a destabilization inverts in one step. Undoing a
/// destabilization re-stabilizes, which always appends the pair (+1, -1);
/// if the removed pair was ordered (-1, +1) a final Hurwitz move at the
/// tail restores that order exactly.
pub(crate) fn inverse_moves(mv: Move, pre: &MonodromyTuple) -> Vec<Move> {
    match mv {
        Move::HurwitzForward(i) => vec![Move::HurwitzBackward(i)],
        Move::HurwitzBackward(i) => vec![Move::HurwitzForward(i)],
        Move::Conjugate(l) => vec![Move::Conjugate(-l)],
        Move::Stabilize => vec![Move::Destabilize],
        Move::Destabilize => {
            let k = pre.branch_count();
            let last = &pre.entries()[k - 1];
            if last.exponent() == -1 {
                vec![Move::Stabilize]
            } else {
                vec![Move::Stabilize, Move::HurwitzForward(k - 1)]
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::canonical_key;
    use crate::surface::BandEntry;

    fn bw(degree: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(degree, letters.to_vec()).unwrap()
    }

    #[test]
    fn move_order_is_kind_then_parameter() {
        let mut moves = vec![
            Move::Destabilize,
            Move::Conjugate(1),
            Move::HurwitzBackward(2),
            Move::Stabilize,
            Move::Conjugate(-2),
            Move::HurwitzForward(3),
            Move::HurwitzForward(1),
        ];
        moves.sort();
        assert_eq!(
            moves,
            vec![
                Move::HurwitzForward(1),
                Move::HurwitzForward(3),
                Move::HurwitzBackward(2),
                Move::Conjugate(-2),
                Move::Conjugate(1),
                Move::Stabilize,
                Move::Destabilize,
            ]
        );
    }

    #[test]
    fn neighbors_of_b_star_at_degree_cap() {
        let bounds = SearchBounds {
            max_depth: 8,
            max_degree: 2,
            max_conjugator_length: 8,
            node_budget: 1_000_000,
        };
        let b = MonodromyTuple::b_star();
        let succ = neighbors(&b, &bounds);
        let moves: Vec<Move> = succ.iter().map(|(m, _)| *m).collect();
        assert_eq!(
            moves,
            vec![
                Move::HurwitzForward(1),
                Move::HurwitzBackward(1),
                Move::Conjugate(-1),
                Move::Conjugate(1),
                Move::Destabilize,
            ]
        );
    }

    #[test]
    fn neighbors_of_empty_degree_one() {
        let bounds = SearchBounds::default_for_degree(1);
        let t = MonodromyTuple::empty(1).unwrap();
        let succ = neighbors(&t, &bounds);
        let moves: Vec<Move> = succ.iter().map(|(m, _)| *m).collect();
        assert_eq!(moves, vec![Move::Stabilize]);
    }

    #[test]
    fn hurwitz_only_filter_drops_the_rest() {
        let bounds = SearchBounds::default_for_degree(2);
        let b = MonodromyTuple::b_star();
        let succ = neighbors_filtered(&b, &bounds, MoveFilter::HurwitzOnly);
        assert!(succ.iter().all(|(m, _)| matches!(
            m,
            Move::HurwitzForward(_) | Move::HurwitzBackward(_)
        )));
        assert_eq!(succ.len(), 2);
    }

    #[test]
    fn conjugator_growth_is_pruned() {
        let bounds = SearchBounds {
            max_depth: 8,
            max_degree: 4,
            max_conjugator_length: 0,
            node_budget: 1_000_000,
        };
        let t = MonodromyTuple::new(
            3,
            vec![
                BandEntry::new(bw(3, &[]), 1, 1).unwrap(),
                BandEntry::new(bw(3, &[]), 2, 1).unwrap(),
                BandEntry::new(bw(3, &[]), 2, -1).unwrap(),
                BandEntry::new(bw(3, &[]), 1, -1).unwrap(),
            ],
        )
        .unwrap();
        for (mv, next) in neighbors(&t, &bounds) {
            assert!(
                next.entries().iter().all(|e| e.conjugator().is_empty()),
                "move {} leaked a conjugator",
                mv
            );
        }
    }

    #[test]
    fn verify_trace_replays_and_reports_position() {
        let b = MonodromyTuple::b_star();
        let trace = vec![Move::Stabilize, Move::HurwitzForward(3), Move::HurwitzBackward(3)];
        let end = verify_trace(&b, &trace).unwrap();
        assert_eq!(canonical_key(&end), canonical_key(&b.stabilize()));

        let bad = vec![Move::Stabilize, Move::HurwitzForward(9)];
        match verify_trace(&b, &bad) {
            Err(Error::InapplicableMove { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected InapplicableMove, got {:?}", other),
        }
        // Tail (-1, -1) does not sum to zero, so destabilize cannot fire.
        let unsorted = MonodromyTuple::new(
            2,
            vec![
                BandEntry::new(bw(2, &[]), 1, 1).unwrap(),
                BandEntry::new(bw(2, &[]), 1, 1).unwrap(),
                BandEntry::new(bw(2, &[]), 1, -1).unwrap(),
                BandEntry::new(bw(2, &[]), 1, -1).unwrap(),
            ],
        )
        .unwrap();
        match verify_trace(&unsorted, &[Move::HurwitzForward(1), Move::Destabilize]) {
            Err(Error::InapplicableMove { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected InapplicableMove, got {:?}", other),
        }
    }

    #[test]
    fn inverse_moves_undo_every_kind() {
        let p = MonodromyTuple::new(
            3,
            vec![
                BandEntry::new(bw(3, &[2]), 1, 1).unwrap(),
                BandEntry::new(bw(3, &[]), 1, -1).unwrap(),
                BandEntry::new(bw(3, &[]), 2, 1).unwrap(),
                BandEntry::new(bw(3, &[]), 2, -1).unwrap(),
            ],
        )
        .unwrap();
        let reversed = p.hurwitz(3, HurwitzDirection::Forward).unwrap();
        assert_eq!(
            reversed.entries()[2].exponent(),
            -1,
            "tail should now be (-1, +1)"
        );
        // Destabilizable with the pair in (-1, +1) order.
        let swapped_tail = MonodromyTuple::new(
            3,
            vec![
                BandEntry::new(bw(3, &[]), 1, 1).unwrap(),
                BandEntry::new(bw(3, &[]), 1, -1).unwrap(),
                BandEntry::new(bw(3, &[]), 2, -1).unwrap(),
                BandEntry::new(bw(3, &[]), 2, 1).unwrap(),
            ],
        )
        .unwrap();
        assert!(swapped_tail.destabilize().is_some());
        for t in [
            MonodromyTuple::b_star(),
            MonodromyTuple::b_star().stabilize(),
            p,
            reversed,
            swapped_tail,
        ] {
            let bounds = SearchBounds::default_for_degree(t.degree());
            for (mv, next) in neighbors(&t, &bounds) {
                let back = verify_trace(&next, &inverse_moves(mv, &t)).unwrap();
                assert_eq!(
                    canonical_key(&back),
                    canonical_key(&t),
                    "move {} did not invert",
                    mv
                );
            }
        }
    }
}
