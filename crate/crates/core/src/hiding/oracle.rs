//! Exhaustive search for the maximum number of contacts the evader can
//! connect to while staying hidden.

use std::collections::BTreeMap;

use super::{is_hidden_global, is_hidden_local, EdgeAssignment, HidingProblem, SolverOutcome};
use crate::centrality::MeasureKind;
use crate::error::{Error, Result};
use crate::network::{LayerId, MultilayerNetwork, NodeId};

/// Default cap on the number of enumerated states.
pub const DEFAULT_STATE_BUDGET: u128 = 10_000_000;

/// The hidden-predicate an assignment must satisfy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HidingCheck {
    Global { kind: MeasureKind, margin: usize },
    /// One margin per layer.
    Local { kind: MeasureKind, margins: Vec<usize> },
}

impl HidingCheck {
    /// Evaluates the predicate on a network that already contains the new
    /// edges. The map is empty for global checks.
    pub fn evaluate(&self, m: &MultilayerNetwork, evader: NodeId) -> (bool, BTreeMap<LayerId, bool>) {
        match self {
            Self::Global { kind, margin } => (is_hidden_global(m, evader, *kind, *margin), BTreeMap::new()),
            Self::Local { kind, margins } => {
                let v = is_hidden_local(m, evader, *kind, margins);
                (v.all, v.layers)
            }
        }
    }
}

/// Tries, for every contact in ascending order, each shared layer or no edge
/// at all. Returns the hidden assignment with the most connected contacts;
/// among those, the one whose sorted pair list is lexicographically smallest.
///
/// If no assignment is hidden the outcome is empty with `hidden == false`.
pub fn brute_force_max_hiding(problem: &HidingProblem<'_>, check: &HidingCheck, budget: u128) -> Result<SolverOutcome> {
    let options: Vec<(NodeId, Vec<LayerId>)> = problem
        .connectable()
        .into_iter()
        .map(|v| (v, problem.shared_layers(v)))
        .collect();
    let states = options
        .iter()
        .try_fold(1u128, |acc, (_, ls)| acc.checked_mul(ls.len() as u128 + 1))
        .unwrap_or(u128::MAX);
    if states > budget {
        return Err(Error::BudgetExceeded { states, budget });
    }

    let mut search = Search {
        network: problem.network.clone(),
        evader: problem.evader,
        check,
        options: &options,
        chosen: Vec::new(),
        best: None,
    };
    search.descend(0);
    Ok(match search.best {
        Some((pairs, _)) => {
            let assignment: EdgeAssignment = pairs.into_iter().collect();
            let mut m = problem.network.clone();
            super::apply_in_place(&mut m, problem.evader, &assignment)?;
            let (hidden, layers) = check.evaluate(&m, problem.evader);
            debug_assert!(hidden);
            SolverOutcome::new(assignment, hidden, layers)
        }
        None => SolverOutcome::infeasible(),
    })
}

struct Search<'s> {
    network: MultilayerNetwork,
    evader: NodeId,
    check: &'s HidingCheck,
    options: &'s [(NodeId, Vec<LayerId>)],
    chosen: Vec<(NodeId, LayerId)>,
    best: Option<(Vec<(NodeId, LayerId)>, usize)>,
}

impl Search<'_> {
    fn descend(&mut self, i: usize) {
        let best_count = self.best.as_ref().map_or(0, |b| b.1);
        if self.best.is_some() && self.chosen.len() + (self.options.len() - i) < best_count {
            return;
        }
        if i == self.options.len() {
            self.leaf();
            return;
        }
        let (v, ref layers) = self.options[i];
        self.descend(i + 1);
        for &a in layers {
            let added = self.network.add_edge(a, self.evader, v).expect("shared layer");
            self.chosen.push((v, a));
            self.descend(i + 1);
            self.chosen.pop();
            if added {
                self.network.remove_edge(a, self.evader, v).expect("edge just added");
            }
        }
    }

    fn leaf(&mut self) {
        let count = self.chosen.len();
        // `chosen` is already sorted: contacts ascending, one layer each
        let better = match &self.best {
            None => true,
            Some((pairs, c)) => count > *c || (count == *c && self.chosen < *pairs),
        };
        if better && self.check.evaluate(&self.network, self.evader).0 {
            self.best = Some((self.chosen.clone(), count));
        }
    }
}
