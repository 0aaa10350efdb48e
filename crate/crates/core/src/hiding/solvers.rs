//! The exact solver for maximum global hiding under degree and the greedy
//! 2-approximation for maximum local hiding under degree.

use std::collections::BTreeSet;

use super::{is_hidden_global, is_hidden_local, local_degree_or_zero, EdgeAssignment, SolverOutcome};
use super::{GlobalHidingInstance, LocalHidingInstance};
use crate::centrality::MeasureKind;
use crate::error::{Error, Result};
use crate::network::NodeId;

/// Connecting `k` contacts that are not yet neighbours raises the evader's
/// degree to `δ0 + k` and each chosen contact's degree by one. The evader
/// stays hidden iff
/// `min(k, |{v ∈ F : deg(v) = k + δ0}|) + |{v : deg(v) > k + δ0}| ≥ d`.
/// Contacts that already neighbour the evader are connected for free.
pub fn solve_global_degree_max(instance: &GlobalHidingInstance<'_>) -> Result<SolverOutcome> {
    if instance.kind != MeasureKind::Degree {
        return Err(Error::InvalidParameter(
            "the exact global solver needs the degree measure".into(),
        ));
    }
    let problem = &instance.problem;
    let m = problem.network;
    let evader = problem.evader;
    let d = instance.safety_margin;
    let base = m.global_degree(evader)?;
    let neighbours: BTreeSet<NodeId> = m.neighbors(evader)?.into_iter().collect();

    let mut free = Vec::new();
    let mut fresh = Vec::new();
    for v in problem.connectable() {
        if neighbours.contains(&v) {
            free.push(v);
        } else {
            fresh.push((v, m.global_degree(v)?));
        }
    }
    let others: Vec<usize> = m
        .nodes()
        .filter(|&v| v != evader)
        .map(|v| m.global_degree(v).expect("node from network"))
        .collect();

    let above_after = |k: usize| {
        let target = base + k;
        let exact = fresh.iter().filter(|&&(_, deg)| deg == target).count();
        let higher = others.iter().filter(|&&deg| deg > target).count();
        k.min(exact) + higher
    };
    let Some(k) = (0..=fresh.len()).rev().find(|&k| above_after(k) >= d) else {
        return Ok(SolverOutcome::infeasible());
    };

    let target = base + k;
    let mut order: Vec<NodeId> = fresh.iter().filter(|e| e.1 == target).map(|e| e.0).collect();
    order.extend(fresh.iter().filter(|e| e.1 != target).map(|e| e.0));
    let mut assignment = EdgeAssignment::new();
    for &v in order.iter().take(k) {
        assignment.insert(v, problem.shared_layers(v)[0]);
    }
    for &v in &free {
        let shared = problem.shared_layers(v);
        let layer = shared
            .iter()
            .copied()
            .find(|&a| m.has_edge(a, evader, v))
            .unwrap_or(shared[0]);
        assignment.insert(v, layer);
    }

    let after = super::apply_assignment(m, evader, &assignment)?;
    let hidden = is_hidden_global(&after, evader, MeasureKind::Degree, d);
    Ok(SolverOutcome::new(assignment, hidden, Default::default()))
}

/// Visits the evader's layers in ascending order and, in each, connects as
/// many not yet connected contacts as the layer's capacity allows.
///
/// With `δ` the degree of the `d`-th node of the layer (evader included) and
/// `δ0` the evader's degree there, the evader may gain `k = δ − 1 − δ0`
/// neighbours freely, or `k + 1` if enough of them have degree exactly `δ`
/// to lift past it. A negative `k` in any layer makes the instance
/// infeasible.
pub fn greedy_local_degree(instance: &LocalHidingInstance<'_>) -> Result<SolverOutcome> {
    if instance.kind != MeasureKind::Degree {
        return Err(Error::InvalidParameter(
            "the greedy local solver needs the degree measure".into(),
        ));
    }
    let problem = &instance.problem;
    let m = problem.network;
    let evader = problem.evader;
    let evader_layers = problem.evader_layers();

    let mut connected: BTreeSet<NodeId> = BTreeSet::new();
    let mut assignment = EdgeAssignment::new();
    for &a in &evader_layers {
        let d = instance.margin(a);
        let in_layer: Vec<NodeId> = problem
            .contacts()
            .iter()
            .copied()
            .filter(|&v| !connected.contains(&v) && m.occurs(v, a))
            .collect();
        let (free, mut eligible): (Vec<NodeId>, Vec<NodeId>) =
            in_layer.into_iter().partition(|&v| m.has_edge(a, evader, v));

        let mut take: Vec<NodeId> = free;
        if d == 0 {
            take.append(&mut eligible);
        } else {
            let layer_nodes = m.nodes_in_layer(a);
            if d > layer_nodes.len() {
                return Ok(SolverOutcome::infeasible());
            }
            let mut degrees: Vec<usize> = layer_nodes
                .iter()
                .map(|&v| local_degree_or_zero(m, v, a))
                .collect();
            degrees.sort_unstable_by(|x, y| y.cmp(x));
            let delta = degrees[d - 1];
            let delta0 = local_degree_or_zero(m, evader, a);
            if delta < delta0 + 1 {
                return Ok(SolverOutcome::infeasible());
            }
            let k = delta - 1 - delta0;
            let higher = degrees.iter().filter(|&&x| x > delta).count();
            let need = d - higher;

            // fewest other evader layers first, then ascending id
            let rank = |v: &NodeId| {
                let others = problem.shared_layers(*v).len() - 1;
                (others, *v)
            };
            eligible.sort_by_key(rank);
            let (exact, rest): (Vec<NodeId>, Vec<NodeId>) = eligible
                .iter()
                .copied()
                .partition(|&v| local_degree_or_zero(m, v, a) == delta);

            if eligible.len() > k && need <= k + 1 && exact.len() >= need {
                let mut chosen: Vec<NodeId> = exact[..need].to_vec();
                let mut pool: Vec<NodeId> = exact[need..].iter().chain(rest.iter()).copied().collect();
                pool.sort_by_key(rank);
                chosen.extend(pool.into_iter().take(k + 1 - need));
                take.extend(chosen);
            } else {
                take.extend(eligible.into_iter().take(k));
            }
        }
        for v in take {
            assignment.insert(v, a);
            connected.insert(v);
        }
    }

    let after = super::apply_assignment(m, evader, &assignment)?;
    let verdict = is_hidden_local(&after, evader, MeasureKind::Degree, instance.safety_margins());
    Ok(SolverOutcome::new(assignment, verdict.all, verdict.layers))
}
