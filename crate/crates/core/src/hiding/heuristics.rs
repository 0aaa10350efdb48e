//! The Random, All-in-one, Fringe and Density heuristics.
//!
//! Contacts are processed in ascending id order and ties between layers go to
//! the lowest layer id. Contacts sharing no layer with the evader are skipped.

use rand::Rng;

use super::{EdgeAssignment, HidingProblem};
use crate::network::{LayerId, NodeId};

/// Connects every contact in a layer drawn uniformly from the layers it
/// shares with the evader.
pub fn heuristic_random<R: Rng + ?Sized>(problem: &HidingProblem<'_>, rng: &mut R) -> EdgeAssignment {
    let mut out = EdgeAssignment::new();
    for &v in problem.contacts() {
        let shared = problem.shared_layers(v);
        match shared.len() {
            0 => {}
            1 => {
                out.insert(v, shared[0]);
            }
            n => {
                out.insert(v, shared[rng.random_range(0..n)]);
            }
        }
    }
    out
}

/// Repeatedly picks the evader layer holding the most unconnected contacts
/// and connects all of them there.
pub fn heuristic_all_in_one(problem: &HidingProblem<'_>) -> EdgeAssignment {
    let m = problem.network;
    let layers = problem.evader_layers();
    let mut remaining: Vec<NodeId> = problem.contacts().to_vec();
    let mut out = EdgeAssignment::new();
    while !remaining.is_empty() {
        let mut best: Option<(LayerId, usize)> = None;
        for &a in &layers {
            let count = remaining.iter().filter(|&&v| m.occurs(v, a)).count();
            if best.is_none_or(|(_, c)| count > c) {
                best = Some((a, count));
            }
        }
        let Some((chosen, count)) = best else { break };
        if count == 0 {
            break;
        }
        remaining.retain(|&v| {
            if m.occurs(v, chosen) {
                out.insert(v, chosen);
                false
            } else {
                true
            }
        });
    }
    out
}

/// For each contact, picks the shared layer where it has the fewest
/// neighbours outside the contact set.
pub fn heuristic_fringe(problem: &HidingProblem<'_>) -> EdgeAssignment {
    let m = problem.network;
    let mut out = EdgeAssignment::new();
    for &v in problem.contacts() {
        let best = problem
            .shared_layers(v)
            .into_iter()
            .map(|a| {
                let outside = m
                    .layer_neighbors(v, a)
                    .expect("shared layer")
                    .iter()
                    .filter(|&&w| !problem.is_contact(w))
                    .count();
                (outside, a)
            })
            .min();
        if let Some((_, a)) = best {
            out.insert(v, a);
        }
    }
    out
}

/// For each contact, picks the shared layer maximising
/// `(|C_α ∩ N^α(v)| + |F ∩ N^α(v)|) / max(1, |C_α|)`, where `C_α` holds the
/// contacts already assigned to `α`.
pub fn heuristic_density(problem: &HidingProblem<'_>) -> EdgeAssignment {
    let m = problem.network;
    let mut out = EdgeAssignment::new();
    let mut assigned: Vec<Vec<NodeId>> = vec![Vec::new(); m.layer_count()];
    for &v in problem.contacts() {
        // (numerator, denominator) compared exactly by cross-multiplication
        let mut best: Option<(usize, usize, LayerId)> = None;
        for a in problem.shared_layers(v) {
            let nbrs = m.layer_neighbors(v, a).expect("shared layer");
            let placed = &assigned[a.index()];
            let near_placed = placed.iter().filter(|w| nbrs.binary_search(w).is_ok()).count();
            let near_contacts = nbrs.iter().filter(|&&w| problem.is_contact(w)).count();
            let num = near_placed + near_contacts;
            let den = placed.len().max(1);
            let better = match best {
                None => true,
                Some((bn, bd, _)) => num * bd > bn * den,
            };
            if better {
                best = Some((num, den, a));
            }
        }
        if let Some((_, _, a)) = best {
            out.insert(v, a);
            assigned[a.index()].push(v);
        }
    }
    out
}
