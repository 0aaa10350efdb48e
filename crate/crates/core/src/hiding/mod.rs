//! Hiding problems: an evader must connect to a set of contacts and chooses
//! in which layer each new edge goes, so as to keep at least `d` nodes ranked
//! above itself.

mod heuristics;
mod oracle;
mod solvers;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use heuristics::{heuristic_all_in_one, heuristic_density, heuristic_fringe, heuristic_random};
pub use oracle::{brute_force_max_hiding, HidingCheck, DEFAULT_STATE_BUDGET};
pub use solvers::{greedy_local_degree, solve_global_degree_max};

use crate::centrality::{self, MeasureKind};
use crate::error::{Error, Result};
use crate::network::{LayerId, MultilayerNetwork, NodeId};

/// A network, an evader and the contacts it wants to reach.
#[derive(Clone, Debug)]
pub struct HidingProblem<'a> {
    pub network: &'a MultilayerNetwork,
    pub evader: NodeId,
    contacts: Vec<NodeId>,
}

impl<'a> HidingProblem<'a> {
    pub fn new<I>(network: &'a MultilayerNetwork, evader: NodeId, contacts: I) -> Result<Self>
    where
        I: IntoIterator<Item = NodeId>,
    {
        network.check_node(evader)?;
        let mut contacts: Vec<NodeId> = contacts.into_iter().collect();
        contacts.sort_unstable();
        contacts.dedup();
        for &v in &contacts {
            network.check_node(v)?;
            if v == evader {
                return Err(Error::InvalidParameter(format!(
                    "the evader {evader} cannot be its own contact"
                )));
            }
        }
        Ok(Self {
            network,
            evader,
            contacts,
        })
    }

    /// Contacts in ascending order.
    pub fn contacts(&self) -> &[NodeId] {
        &self.contacts
    }

    pub fn is_contact(&self, v: NodeId) -> bool {
        self.contacts.binary_search(&v).is_ok()
    }

    /// Layers in which the evader occurs.
    pub fn evader_layers(&self) -> Vec<LayerId> {
        self.network.layers_of(self.evader).collect()
    }

    /// Layers in which both the evader and `v` occur, ascending.
    pub fn shared_layers(&self, v: NodeId) -> Vec<LayerId> {
        self.network
            .layers_of(v)
            .filter(|&a| self.network.occurs(self.evader, a))
            .collect()
    }

    /// Contacts sharing at least one layer with the evader.
    pub fn connectable(&self) -> Vec<NodeId> {
        self.contacts
            .iter()
            .copied()
            .filter(|&v| !self.shared_layers(v).is_empty())
            .collect()
    }
}

#[derive(Clone, Debug)]
pub struct GlobalHidingInstance<'a> {
    pub problem: HidingProblem<'a>,
    pub kind: MeasureKind,
    pub safety_margin: usize,
}

impl<'a> GlobalHidingInstance<'a> {
    pub fn new(problem: HidingProblem<'a>, kind: MeasureKind, safety_margin: usize) -> Self {
        Self {
            problem,
            kind,
            safety_margin,
        }
    }

    pub fn check(&self) -> HidingCheck {
        HidingCheck::Global {
            kind: self.kind,
            margin: self.safety_margin,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LocalHidingInstance<'a> {
    pub problem: HidingProblem<'a>,
    pub kind: MeasureKind,
    safety_margins: Vec<usize>,
}

impl<'a> LocalHidingInstance<'a> {
    /// `safety_margins[a]` is the margin of layer `a`; one per layer.
    pub fn new(problem: HidingProblem<'a>, kind: MeasureKind, safety_margins: Vec<usize>) -> Result<Self> {
        if safety_margins.len() != problem.network.layer_count() {
            return Err(Error::InvalidParameter(format!(
                "expected {} safety margins, got {}",
                problem.network.layer_count(),
                safety_margins.len()
            )));
        }
        Ok(Self {
            problem,
            kind,
            safety_margins,
        })
    }

    pub fn uniform(problem: HidingProblem<'a>, kind: MeasureKind, margin: usize) -> Self {
        let margins = vec![margin; problem.network.layer_count()];
        Self {
            problem,
            kind,
            safety_margins: margins,
        }
    }

    pub fn margin(&self, a: LayerId) -> usize {
        self.safety_margins[a.index()]
    }

    pub fn safety_margins(&self) -> &[usize] {
        &self.safety_margins
    }

    pub fn check(&self) -> HidingCheck {
        HidingCheck::Local {
            kind: self.kind,
            margins: self.safety_margins.clone(),
        }
    }
}

/// The set A* of new (evader, contact) edges, as `(contact, layer)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeAssignment {
    pairs: BTreeSet<(NodeId, LayerId)>,
}

impl EdgeAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, contact: NodeId, layer: LayerId) -> bool {
        self.pairs.insert((contact, layer))
    }

    pub fn contains(&self, contact: NodeId, layer: LayerId) -> bool {
        self.pairs.contains(&(contact, layer))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, LayerId)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn contacts(&self) -> BTreeSet<NodeId> {
        self.pairs.iter().map(|&(v, _)| v).collect()
    }

    /// Contacts assigned to `layer`.
    pub fn in_layer(&self, layer: LayerId) -> impl Iterator<Item = NodeId> + '_ {
        self.pairs.iter().filter(move |p| p.1 == layer).map(|p| p.0)
    }

    /// Checks A* ⊆ {(v̂^α, v^α) : v ∈ F, v̂^α ∈ V_L, v^α ∈ V_L}.
    pub fn validate(&self, problem: &HidingProblem<'_>) -> Result<()> {
        for (contact, layer) in self.iter() {
            let fail = |reason: &str| {
                Err(Error::InvalidAssignment {
                    contact,
                    layer,
                    reason: reason.to_string(),
                })
            };
            if !problem.is_contact(contact) {
                return fail("not a contact");
            }
            if !problem.network.contains_layer(layer) {
                return fail("unknown layer");
            }
            if !problem.network.occurs(problem.evader, layer) {
                return fail("evader does not occur in the layer");
            }
            if !problem.network.occurs(contact, layer) {
                return fail("contact does not occur in the layer");
            }
        }
        Ok(())
    }
}

impl FromIterator<(NodeId, LayerId)> for EdgeAssignment {
    fn from_iter<I: IntoIterator<Item = (NodeId, LayerId)>>(iter: I) -> Self {
        Self {
            pairs: iter.into_iter().collect(),
        }
    }
}

/// Result of a solver: the assignment and whether the evader ends up hidden.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverOutcome {
    pub assignment: EdgeAssignment,
    pub connected_contacts: BTreeSet<NodeId>,
    pub hidden: bool,
    /// Per-layer verdicts; empty for global problems.
    pub layer_hidden: BTreeMap<LayerId, bool>,
}

impl SolverOutcome {
    pub(crate) fn new(assignment: EdgeAssignment, hidden: bool, layer_hidden: BTreeMap<LayerId, bool>) -> Self {
        Self {
            connected_contacts: assignment.contacts(),
            assignment,
            hidden,
            layer_hidden,
        }
    }

    pub(crate) fn infeasible() -> Self {
        Self::new(EdgeAssignment::new(), false, BTreeMap::new())
    }

    pub fn connected(&self) -> usize {
        self.connected_contacts.len()
    }
}

/// M̂ = (V_L, E_L ∪ A*, V, L), as a new network.
pub fn apply_assignment(m: &MultilayerNetwork, evader: NodeId, assignment: &EdgeAssignment) -> Result<MultilayerNetwork> {
    let mut out = m.clone();
    apply_in_place(&mut out, evader, assignment)?;
    Ok(out)
}

/// Adds the assignment's edges to `m`, returning those that were not already
/// present. On error `m` is left unchanged.
pub fn apply_in_place(m: &mut MultilayerNetwork, evader: NodeId, assignment: &EdgeAssignment) -> Result<Vec<(NodeId, LayerId)>> {
    m.check_node(evader)?;
    let mut added = Vec::new();
    for (contact, layer) in assignment.iter() {
        let reason = if !m.contains_node(contact) {
            Some("unknown contact")
        } else if contact == evader {
            Some("contact is the evader")
        } else if !m.contains_layer(layer) {
            Some("unknown layer")
        } else if !m.occurs(evader, layer) {
            Some("evader does not occur in the layer")
        } else if !m.occurs(contact, layer) {
            Some("contact does not occur in the layer")
        } else {
            None
        };
        if let Some(reason) = reason {
            revert_in_place(m, evader, &added);
            return Err(Error::InvalidAssignment {
                contact,
                layer,
                reason: reason.to_string(),
            });
        }
        if m.add_edge(layer, evader, contact)? {
            added.push((contact, layer));
        }
    }
    Ok(added)
}

/// Removes edges previously reported as added by [`apply_in_place`].
pub fn revert_in_place(m: &mut MultilayerNetwork, evader: NodeId, added: &[(NodeId, LayerId)]) {
    for &(contact, layer) in added {
        m.remove_edge(layer, evader, contact)
            .expect("reverting an edge that was applied");
    }
}

/// At least `d` nodes score strictly above the evader.
pub fn is_hidden_global(m: &MultilayerNetwork, evader: NodeId, kind: MeasureKind, d: usize) -> bool {
    if d == 0 {
        return true;
    }
    if kind == MeasureKind::Degree {
        let own = m.global_degree(evader).expect("evader in network") as f64;
        let above = m
            .nodes()
            .filter(|&v| centrality::outranks(m.global_degree(v).unwrap() as f64, own))
            .count();
        return above >= d;
    }
    let report = centrality::global_report(m, kind);
    report.outranking(evader).expect("evader in network") >= d
}

/// Per-layer verdicts of the local hidden-predicate and their conjunction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalVerdict {
    pub layers: BTreeMap<LayerId, bool>,
    pub all: bool,
}

/// In every layer α, at least `margins[α]` nodes of V^α score strictly above
/// the evader. Layers without the evader are satisfied vacuously.
pub fn is_hidden_local(m: &MultilayerNetwork, evader: NodeId, kind: MeasureKind, margins: &[usize]) -> LocalVerdict {
    let mut layers = BTreeMap::new();
    for a in m.layers() {
        let d = margins.get(a.index()).copied().unwrap_or(0);
        let ok = if d == 0 || !m.occurs(evader, a) {
            true
        } else if kind == MeasureKind::Degree {
            let own = m.local_degree(evader, a).unwrap() as f64;
            let above = m
                .nodes_in_layer(a)
                .iter()
                .filter(|&&v| centrality::outranks(m.local_degree(v, a).unwrap() as f64, own))
                .count();
            above >= d
        } else {
            let report = centrality::layer_report(m, kind, a).expect("layer from network");
            report.outranking(evader).expect("evader occurs in layer") >= d
        };
        layers.insert(a, ok);
    }
    let all = layers.values().all(|&x| x);
    LocalVerdict { layers, all }
}

pub(crate) fn local_degree_or_zero(m: &MultilayerNetwork, v: NodeId, a: LayerId) -> usize {
    m.local_degree(v, a).unwrap_or(0)
}

/// The four hiding heuristics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Heuristic {
    Random,
    AllInOne,
    Fringe,
    Density,
}

impl Heuristic {
    pub const ALL: [Heuristic; 4] = [Self::Random, Self::AllInOne, Self::Fringe, Self::Density];

    pub fn name(self) -> &'static str {
        match self {
            Self::Random => "random",
            Self::AllInOne => "all-in-one",
            Self::Fringe => "fringe",
            Self::Density => "density",
        }
    }

    pub fn run<R: rand::Rng + ?Sized>(self, problem: &HidingProblem<'_>, rng: &mut R) -> EdgeAssignment {
        match self {
            Self::Random => heuristic_random(problem, rng),
            Self::AllInOne => heuristic_all_in_one(problem),
            Self::Fringe => heuristic_fringe(problem),
            Self::Density => heuristic_density(problem),
        }
    }
}

impl Heuristic {
    /// [`Heuristic::run`] with a ChaCha8 stream seeded by `seed`.
    pub fn run_seeded(self, problem: &HidingProblem<'_>, seed: u64) -> EdgeAssignment {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        self.run(problem, &mut rng)
    }
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Heuristic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|h| h.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown heuristic {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::fixtures::{m1, single_layer};

    #[test]
    fn global_predicate_examples() {
        let m = m1();
        assert!(is_hidden_global(&m, NodeId(0), MeasureKind::Degree, 0));
        assert!(!is_hidden_global(&m, NodeId(0), MeasureKind::Degree, 1));
        assert!(is_hidden_global(&m, NodeId(1), MeasureKind::Degree, 1));
        assert!(is_hidden_global(&m, NodeId(1), MeasureKind::Betweenness, 1));
    }

    #[test]
    fn local_predicate_examples() {
        let star = single_layer(4, &[(0, 1), (0, 2), (0, 3)]);
        let v = is_hidden_local(&star, NodeId(0), MeasureKind::Degree, &[0]);
        assert!(v.all);
        let v = is_hidden_local(&star, NodeId(0), MeasureKind::Degree, &[1]);
        assert!(!v.all);
        // node 2 of M1 does not occur in layer b
        let m = m1();
        let v = is_hidden_local(&m, NodeId(1), MeasureKind::Degree, &[0, 5]);
        assert_eq!(v.layers[&LayerId(1)], true);
        assert!(v.all);
    }

    #[test]
    fn apply_assignment_examples() {
        let m = m1();
        let e = EdgeAssignment::new();
        assert_eq!(apply_assignment(&m, NodeId(1), &e).unwrap(), m);

        let mut m = MultilayerNetwork::with_size(3, 2, [
            (NodeId(0), LayerId(0)),
            (NodeId(1), LayerId(0)),
            (NodeId(2), LayerId(1)),
            (NodeId(0), LayerId(1)),
        ])
        .unwrap();
        m.add_edge(LayerId(1), NodeId(0), NodeId(2)).unwrap();
        let a: EdgeAssignment = [(NodeId(1), LayerId(0))].into_iter().collect();
        let out = apply_assignment(&m, NodeId(0), &a).unwrap();
        assert_eq!(out.local_degree(NodeId(0), LayerId(0)).unwrap(), 1);
        assert_eq!(m.local_degree(NodeId(0), LayerId(0)).unwrap(), 0);

        let bad: EdgeAssignment = [(NodeId(1), LayerId(1))].into_iter().collect();
        let err = apply_assignment(&m, NodeId(0), &bad).unwrap_err();
        assert!(matches!(err, Error::InvalidAssignment { contact: NodeId(1), layer: LayerId(1), .. }));
    }

    #[test]
    fn failed_application_leaves_network_untouched() {
        let mut m = MultilayerNetwork::with_size(3, 1, (0..3).map(|v| (NodeId(v), LayerId(0)))).unwrap();
        let before = m.clone();
        let a: EdgeAssignment = [(NodeId(1), LayerId(0)), (NodeId(2), LayerId(4))].into_iter().collect();
        assert!(apply_in_place(&mut m, NodeId(0), &a).is_err());
        assert_eq!(m, before);
    }

    #[test]
    fn assignment_validation() {
        let m = m1();
        let p = HidingProblem::new(&m, NodeId(0), [NodeId(1), NodeId(2)]).unwrap();
        let ok: EdgeAssignment = [(NodeId(1), LayerId(0)), (NodeId(2), LayerId(1))].into_iter().collect();
        ok.validate(&p).unwrap();
        let bad: EdgeAssignment = [(NodeId(1), LayerId(1))].into_iter().collect();
        assert!(bad.validate(&p).is_err());
        assert!(HidingProblem::new(&m, NodeId(0), [NodeId(0)]).is_err());
        assert!(HidingProblem::new(&m, NodeId(0), [NodeId(7)]).is_err());
    }

    #[test]
    fn heuristic_names_round_trip() {
        for h in Heuristic::ALL {
            assert_eq!(h.name().parse::<Heuristic>().unwrap(), h);
        }
        assert!("greedy".parse::<Heuristic>().is_err());
    }
}
