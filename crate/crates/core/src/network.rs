//! Multilayer networks with diagonal couplings.
//!
//! A network has a fixed set of nodes, layers and node occurrences. Intra-layer
//! edges join two occurrences in the same layer; couplings join two occurrences
//! of the same node in different layers. Only edges and couplings are mutable.
//!
//! Identifiers are dense: nodes are `0..node_count()`, layers are
//! `0..layer_count()`, and occurrences are numbered node-major (all occurrences
//! of node 0 in ascending layer order, then node 1, ...).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NodeId(pub u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LayerId(pub u32);

impl NodeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl LayerId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

impl fmt::Display for LayerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "@{}", self.0)
    }
}

/// The presence of a node in a layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Occurrence {
    pub node: NodeId,
    pub layer: LayerId,
}

const ABSENT: u32 = u32::MAX;

/// Zero-padded decimal labels, so that lexicographic and numeric order agree.
pub fn padded_labels(count: usize, prefix: &str) -> Vec<String> {
    let width = count.saturating_sub(1).to_string().len();
    (0..count)
        .map(|i| format!("{prefix}{i:0width$}"))
        .collect()
}

pub(crate) fn validate_label(label: &str) -> Result<()> {
    if label.is_empty() || label.chars().any(|c| c.is_whitespace() || c == ',') {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilayerNetwork {
    node_labels: Vec<String>,
    layer_labels: Vec<String>,
    occurrences: Vec<Occurrence>,
    /// `node_start[v]..node_start[v + 1]` are the occurrences of `v`.
    node_start: Vec<usize>,
    /// `node * layer_count + layer` to occurrence id, or `ABSENT`.
    occ_index: Vec<u32>,
    layer_nodes: Vec<Vec<NodeId>>,
    /// Sorted intra-layer neighbours per occurrence.
    adjacency: Vec<Vec<NodeId>>,
    /// Sorted coupled layers per occurrence.
    coupled: Vec<Vec<LayerId>>,
    edge_count: usize,
    coupling_count: usize,
}

impl MultilayerNetwork {
    /// Builds an edgeless network. Duplicate occurrences are merged; every node
    /// must occur in at least one layer.
    pub fn new<I>(node_labels: Vec<String>, layer_labels: Vec<String>, occurrences: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, LayerId)>,
    {
        check_labels(&node_labels)?;
        check_labels(&layer_labels)?;
        let n = node_labels.len();
        let l = layer_labels.len();
        if n >= ABSENT as usize || l >= ABSENT as usize {
            return Err(Error::InvalidParameter("too many nodes or layers".into()));
        }

        let mut present = vec![false; n * l];
        for (node, layer) in occurrences {
            if node.index() >= n {
                return Err(Error::UnknownNode(node));
            }
            if layer.index() >= l {
                return Err(Error::UnknownLayer(layer));
            }
            present[node.index() * l + layer.index()] = true;
        }

        let mut occ = Vec::new();
        let mut node_start = Vec::with_capacity(n + 1);
        let mut occ_index = vec![ABSENT; n * l];
        let mut layer_nodes = vec![Vec::new(); l];
        for v in 0..n {
            node_start.push(occ.len());
            for a in 0..l {
                if present[v * l + a] {
                    occ_index[v * l + a] = occ.len() as u32;
                    occ.push(Occurrence {
                        node: NodeId(v as u32),
                        layer: LayerId(a as u32),
                    });
                    layer_nodes[a].push(NodeId(v as u32));
                }
            }
            if occ.len() == node_start[v] {
                return Err(Error::NodeWithoutOccurrence(NodeId(v as u32)));
            }
        }
        node_start.push(occ.len());

        let count = occ.len();
        Ok(Self {
            node_labels,
            layer_labels,
            occurrences: occ,
            node_start,
            occ_index,
            layer_nodes,
            adjacency: vec![Vec::new(); count],
            coupled: vec![Vec::new(); count],
            edge_count: 0,
            coupling_count: 0,
        })
    }

    /// Like [`MultilayerNetwork::new`] with zero-padded numeric labels for
    /// nodes and `L`-prefixed labels for layers.
    pub fn with_size<I>(nodes: usize, layers: usize, occurrences: I) -> Result<Self>
    where
        I: IntoIterator<Item = (NodeId, LayerId)>,
    {
        Self::new(padded_labels(nodes, ""), padded_labels(layers, "L"), occurrences)
    }

    pub fn node_count(&self) -> usize {
        self.node_labels.len()
    }

    pub fn layer_count(&self) -> usize {
        self.layer_labels.len()
    }

    pub fn occurrence_count(&self) -> usize {
        self.occurrences.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn coupling_count(&self) -> usize {
        self.coupling_count
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        (0..self.node_count() as u32).map(NodeId)
    }

    pub fn layers(&self) -> impl ExactSizeIterator<Item = LayerId> + '_ {
        (0..self.layer_count() as u32).map(LayerId)
    }

    pub fn occurrences(&self) -> &[Occurrence] {
        &self.occurrences
    }

    pub fn node_label(&self, v: NodeId) -> &str {
        &self.node_labels[v.index()]
    }

    pub fn layer_label(&self, a: LayerId) -> &str {
        &self.layer_labels[a.index()]
    }

    pub fn find_node(&self, label: &str) -> Option<NodeId> {
        self.node_labels
            .iter()
            .position(|s| s == label)
            .map(|i| NodeId(i as u32))
    }

    pub fn find_layer(&self, label: &str) -> Option<LayerId> {
        self.layer_labels
            .iter()
            .position(|s| s == label)
            .map(|i| LayerId(i as u32))
    }

    pub fn contains_node(&self, v: NodeId) -> bool {
        v.index() < self.node_count()
    }

    pub fn contains_layer(&self, a: LayerId) -> bool {
        a.index() < self.layer_count()
    }

    pub(crate) fn check_node(&self, v: NodeId) -> Result<()> {
        if self.contains_node(v) {
            Ok(())
        } else {
            Err(Error::UnknownNode(v))
        }
    }

    pub(crate) fn check_layer(&self, a: LayerId) -> Result<()> {
        if self.contains_layer(a) {
            Ok(())
        } else {
            Err(Error::UnknownLayer(a))
        }
    }

    /// Occurrence id of `v` in `a`, if `v` occurs there.
    pub fn occurrence_id(&self, v: NodeId, a: LayerId) -> Option<usize> {
        if !self.contains_node(v) || !self.contains_layer(a) {
            return None;
        }
        match self.occ_index[v.index() * self.layer_count() + a.index()] {
            ABSENT => None,
            i => Some(i as usize),
        }
    }

    pub fn occurs(&self, v: NodeId, a: LayerId) -> bool {
        self.occurrence_id(v, a).is_some()
    }

    fn require_occurrence(&self, v: NodeId, a: LayerId) -> Result<usize> {
        self.check_node(v)?;
        self.check_layer(a)?;
        self.occurrence_id(v, a)
            .ok_or(Error::MissingOccurrence { node: v, layer: a })
    }

    /// Occurrence ids of `v`, in ascending layer order.
    pub fn occurrence_range(&self, v: NodeId) -> std::ops::Range<usize> {
        self.node_start[v.index()]..self.node_start[v.index() + 1]
    }

    /// Layers in which `v` occurs, ascending.
    pub fn layers_of(&self, v: NodeId) -> impl ExactSizeIterator<Item = LayerId> + '_ {
        self.occurrences[self.occurrence_range(v)].iter().map(|o| o.layer)
    }

    /// The nodes occurring in `a` (the set V^α), ascending.
    pub fn nodes_in_layer(&self, a: LayerId) -> &[NodeId] {
        &self.layer_nodes[a.index()]
    }

    /// Intra-layer neighbours of occurrence `occ`.
    pub fn occurrence_neighbors(&self, occ: usize) -> &[NodeId] {
        &self.adjacency[occ]
    }

    /// Layers coupled to occurrence `occ`.
    pub fn occurrence_couplings(&self, occ: usize) -> &[LayerId] {
        &self.coupled[occ]
    }

    /// N^α(v): neighbours of `v` inside layer `a`.
    pub fn layer_neighbors(&self, v: NodeId, a: LayerId) -> Result<&[NodeId]> {
        let occ = self.require_occurrence(v, a)?;
        Ok(&self.adjacency[occ])
    }

    /// N_M(v): nodes joined to some occurrence of `v` by an intra-layer edge.
    /// Couplings never make `v` its own neighbour.
    pub fn neighbors(&self, v: NodeId) -> Result<Vec<NodeId>> {
        self.check_node(v)?;
        let mut out: Vec<NodeId> = self
            .occurrence_range(v)
            .flat_map(|o| self.adjacency[o].iter().copied())
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    /// |N_M(v)|.
    pub fn global_degree(&self, v: NodeId) -> Result<usize> {
        let range = self.occurrence_range_checked(v)?;
        if range.len() == 1 {
            return Ok(self.adjacency[range.start].len());
        }
        Ok(self.neighbors(v)?.len())
    }

    /// |N^α(v)|.
    pub fn local_degree(&self, v: NodeId, a: LayerId) -> Result<usize> {
        Ok(self.layer_neighbors(v, a)?.len())
    }

    fn occurrence_range_checked(&self, v: NodeId) -> Result<std::ops::Range<usize>> {
        self.check_node(v)?;
        Ok(self.occurrence_range(v))
    }

    pub fn has_edge(&self, a: LayerId, u: NodeId, v: NodeId) -> bool {
        match self.occurrence_id(u, a) {
            Some(o) => self.adjacency[o].binary_search(&v).is_ok(),
            None => false,
        }
    }

    pub fn has_coupling(&self, v: NodeId, a: LayerId, b: LayerId) -> bool {
        match self.occurrence_id(v, a) {
            Some(o) => self.coupled[o].binary_search(&b).is_ok(),
            None => false,
        }
    }

    /// Adds the edge (u^a, v^a). Returns `false` when it was already present.
    pub fn add_edge(&mut self, a: LayerId, u: NodeId, v: NodeId) -> Result<bool> {
        let ou = self.require_occurrence(u, a)?;
        let ov = self.require_occurrence(v, a)?;
        if u == v {
            return Err(Error::SelfLoop { node: u, layer: a });
        }
        let Err(pos) = self.adjacency[ou].binary_search(&v) else {
            return Ok(false);
        };
        self.adjacency[ou].insert(pos, v);
        let pos = self.adjacency[ov]
            .binary_search(&u)
            .expect_err("adjacency out of sync");
        self.adjacency[ov].insert(pos, u);
        self.edge_count += 1;
        Ok(true)
    }

    /// Removes the edge (u^a, v^a). Returns `false` when it was absent.
    pub fn remove_edge(&mut self, a: LayerId, u: NodeId, v: NodeId) -> Result<bool> {
        let ou = self.require_occurrence(u, a)?;
        let ov = self.require_occurrence(v, a)?;
        let Ok(pos) = self.adjacency[ou].binary_search(&v) else {
            return Ok(false);
        };
        self.adjacency[ou].remove(pos);
        let pos = self.adjacency[ov]
            .binary_search(&u)
            .expect("adjacency out of sync");
        self.adjacency[ov].remove(pos);
        self.edge_count -= 1;
        Ok(true)
    }

    /// Adds the coupling (v^a, v^b). Returns `false` when it was already present.
    pub fn add_coupling(&mut self, v: NodeId, a: LayerId, b: LayerId) -> Result<bool> {
        let oa = self.require_occurrence(v, a)?;
        let ob = self.require_occurrence(v, b)?;
        if a == b {
            return Err(Error::DegenerateCoupling(v));
        }
        let Err(pos) = self.coupled[oa].binary_search(&b) else {
            return Ok(false);
        };
        self.coupled[oa].insert(pos, b);
        let pos = self.coupled[ob]
            .binary_search(&a)
            .expect_err("couplings out of sync");
        self.coupled[ob].insert(pos, a);
        self.coupling_count += 1;
        Ok(true)
    }

    pub fn remove_coupling(&mut self, v: NodeId, a: LayerId, b: LayerId) -> Result<bool> {
        let oa = self.require_occurrence(v, a)?;
        let ob = self.require_occurrence(v, b)?;
        let Ok(pos) = self.coupled[oa].binary_search(&b) else {
            return Ok(false);
        };
        self.coupled[oa].remove(pos);
        let pos = self.coupled[ob]
            .binary_search(&a)
            .expect("couplings out of sync");
        self.coupled[ob].remove(pos);
        self.coupling_count -= 1;
        Ok(true)
    }

    /// All intra-layer edges as `(layer, u, v)` with `u < v`, sorted by
    /// layer, then `u`, then `v`.
    pub fn edges(&self) -> Vec<(LayerId, NodeId, NodeId)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for a in self.layers() {
            for &u in self.nodes_in_layer(a) {
                let o = self.occurrence_id(u, a).expect("layer index out of sync");
                out.extend(self.adjacency[o].iter().filter(|&&v| v > u).map(|&v| (a, u, v)));
            }
        }
        out
    }

    /// All couplings as `(node, a, b)` with `a < b`, sorted.
    pub fn couplings(&self) -> Vec<(NodeId, LayerId, LayerId)> {
        let mut out = Vec::with_capacity(self.coupling_count);
        for (o, occ) in self.occurrences.iter().enumerate() {
            out.extend(
                self.coupled[o]
                    .iter()
                    .filter(|&&b| b > occ.layer)
                    .map(|&b| (occ.node, occ.layer, b)),
            );
        }
        out
    }

    /// G^α: the simple network of one layer, couplings excluded.
    pub fn layer_graph(&self, a: LayerId) -> Result<LayerGraph> {
        self.check_layer(a)?;
        let nodes = self.layer_nodes[a.index()].clone();
        let adjacency = nodes
            .iter()
            .map(|&v| {
                let o = self.occurrence_id(v, a).expect("layer index out of sync");
                self.adjacency[o]
                    .iter()
                    .map(|w| nodes.binary_search(w).expect("edge endpoint outside layer"))
                    .collect()
            })
            .collect();
        Ok(LayerGraph {
            layer: a,
            nodes,
            adjacency,
        })
    }

    /// Checks every structural invariant of the data model.
    pub fn audit(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Invariant(msg));
        let l = self.layer_count();
        check_labels(&self.node_labels)?;
        check_labels(&self.layer_labels)?;
        if self.node_start.len() != self.node_count() + 1 {
            return bad("node index length".into());
        }
        let mut edge_ends = 0usize;
        let mut coupling_ends = 0usize;
        for v in self.nodes() {
            let range = self.occurrence_range(v);
            if range.is_empty() {
                return Err(Error::NodeWithoutOccurrence(v));
            }
            let mut last: Option<LayerId> = None;
            for o in range {
                let occ = self.occurrences[o];
                if occ.node != v || last.is_some_and(|p| p >= occ.layer) {
                    return bad(format!("occurrence order broken at {o}"));
                }
                last = Some(occ.layer);
                if self.occ_index[v.index() * l + occ.layer.index()] != o as u32 {
                    return bad(format!("occurrence index broken at {o}"));
                }
                if self.layer_nodes[occ.layer.index()].binary_search(&v).is_err() {
                    return bad(format!("{v} missing from layer list {}", occ.layer));
                }
                let adj = &self.adjacency[o];
                if adj.windows(2).any(|w| w[0] >= w[1]) {
                    return bad(format!("adjacency of occurrence {o} not strictly sorted"));
                }
                for &w in adj {
                    if w == v {
                        return Err(Error::SelfLoop { node: v, layer: occ.layer });
                    }
                    let Some(ow) = self.occurrence_id(w, occ.layer) else {
                        return bad(format!("edge {v}-{w} in {} lacks an endpoint", occ.layer));
                    };
                    if self.adjacency[ow].binary_search(&v).is_err() {
                        return bad(format!("edge {v}-{w} in {} is asymmetric", occ.layer));
                    }
                }
                edge_ends += adj.len();
                let cpl = &self.coupled[o];
                if cpl.windows(2).any(|w| w[0] >= w[1]) {
                    return bad(format!("couplings of occurrence {o} not strictly sorted"));
                }
                for &b in cpl {
                    if b == occ.layer {
                        return Err(Error::DegenerateCoupling(v));
                    }
                    let Some(ob) = self.occurrence_id(v, b) else {
                        return bad(format!("coupling of {v} to {b} lacks an endpoint"));
                    };
                    if self.coupled[ob].binary_search(&occ.layer).is_err() {
                        return bad(format!("coupling of {v} is asymmetric"));
                    }
                }
                coupling_ends += cpl.len();
            }
        }
        let listed: usize = self.layer_nodes.iter().map(Vec::len).sum();
        if listed != self.occurrences.len() {
            return bad("layer lists disagree with occurrences".into());
        }
        if edge_ends != 2 * self.edge_count || coupling_ends != 2 * self.coupling_count {
            return bad("edge or coupling counters out of sync".into());
        }
        Ok(())
    }
}

fn check_labels(labels: &[String]) -> Result<()> {
    let mut seen = std::collections::HashSet::with_capacity(labels.len());
    for s in labels {
        validate_label(s)?;
        if !seen.insert(s.as_str()) {
            return Err(Error::DuplicateLabel(s.clone()));
        }
    }
    Ok(())
}

/// A simple (single-layer) network with nodes re-indexed densely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerGraph {
    layer: LayerId,
    nodes: Vec<NodeId>,
    adjacency: Vec<Vec<usize>>,
}

impl LayerGraph {
    pub fn layer(&self) -> LayerId {
        self.layer
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn local_index(&self, v: NodeId) -> Option<usize> {
        self.nodes.binary_search(&v).ok()
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` node ids with `u < v`.
    pub fn edges(&self) -> Vec<(NodeId, NodeId)> {
        let mut out = Vec::new();
        for (i, adj) in self.adjacency.iter().enumerate() {
            for &j in adj {
                if j > i {
                    out.push((self.nodes[i], self.nodes[j]));
                }
            }
        }
        out
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::m1;
    use super::*;

    const A: LayerId = LayerId(0);
    const B: LayerId = LayerId(1);
    const N1: NodeId = NodeId(0);
    const N2: NodeId = NodeId(1);
    const N3: NodeId = NodeId(2);

    #[test]
    fn m1_neighborhoods() {
        let m = m1();
        assert_eq!(m.neighbors(N1).unwrap(), vec![N2, N3]);
        assert_eq!(m.neighbors(N2).unwrap(), vec![N1]);
        assert_eq!(m.layer_neighbors(N1, A).unwrap(), &[N2]);
        assert_eq!(m.layer_neighbors(N1, B).unwrap(), &[N3]);
        assert_eq!(m.layer_neighbors(N3, B).unwrap(), &[N1]);
        assert_eq!(m.global_degree(N1).unwrap(), 2);
        m.audit().unwrap();
    }

    #[test]
    fn single_layer_neighborhood() {
        let m = fixtures::single_layer(3, &[(0, 1), (0, 2)]);
        assert_eq!(m.neighbors(NodeId(0)).unwrap(), vec![NodeId(1), NodeId(2)]);
    }

    #[test]
    fn unknown_node_and_missing_occurrence() {
        let m = m1();
        assert_eq!(m.neighbors(NodeId(9)), Err(Error::UnknownNode(NodeId(9))));
        assert_eq!(
            m.layer_neighbors(N2, B),
            Err(Error::MissingOccurrence { node: N2, layer: B })
        );
    }

    #[test]
    fn layer_graph_projection() {
        let m = m1();
        let ga = m.layer_graph(A).unwrap();
        assert_eq!(ga.nodes(), &[N1, N2]);
        assert_eq!(ga.edges(), vec![(N1, N2)]);
        let gb = m.layer_graph(B).unwrap();
        assert_eq!(gb.nodes(), &[N1, N3]);
        assert_eq!(gb.edges(), vec![(N1, N3)]);
        assert!(m.layer_graph(LayerId(5)).is_err());
    }

    #[test]
    fn empty_layer_projects_to_empty_graph() {
        let m = MultilayerNetwork::with_size(2, 3, [(NodeId(0), LayerId(0)), (NodeId(1), LayerId(1))]).unwrap();
        let g = m.layer_graph(LayerId(2)).unwrap();
        assert!(g.is_empty());
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn edge_insertion_rules() {
        let mut m = MultilayerNetwork::with_size(
            3,
            2,
            [(N1, A), (N2, A), (N3, A), (N1, B)],
        )
        .unwrap();
        assert!(m.add_edge(A, N2, N3).unwrap());
        assert_eq!(m.layer_neighbors(N2, A).unwrap(), &[N3]);
        assert_eq!(m.layer_neighbors(N3, A).unwrap(), &[N2]);
        // idempotent
        assert!(!m.add_edge(A, N3, N2).unwrap());
        assert_eq!(m.edge_count(), 1);
        assert_eq!(m.add_edge(A, N1, N1), Err(Error::SelfLoop { node: N1, layer: A }));
        assert_eq!(
            m.add_edge(B, N1, N3),
            Err(Error::MissingOccurrence { node: N3, layer: B })
        );
        assert!(m.remove_edge(A, N2, N3).unwrap());
        assert!(!m.remove_edge(A, N2, N3).unwrap());
        m.audit().unwrap();
    }

    #[test]
    fn coupling_rules() {
        let mut m = m1();
        assert!(!m.add_coupling(N1, B, A).unwrap());
        assert_eq!(m.add_coupling(N1, A, A), Err(Error::DegenerateCoupling(N1)));
        assert!(m.add_coupling(N2, A, B).is_err());
        assert_eq!(m.couplings(), vec![(N1, A, B)]);
        // couplings never count towards neighbourhoods
        assert!(!m.neighbors(N1).unwrap().contains(&N1));
    }

    #[test]
    fn construction_rejects_uncovered_nodes_and_bad_labels() {
        assert_eq!(
            MultilayerNetwork::with_size(2, 1, [(N1, A)]).unwrap_err(),
            Error::NodeWithoutOccurrence(N2)
        );
        let err = MultilayerNetwork::new(vec!["x y".into()], vec!["a".into()], [(N1, A)]).unwrap_err();
        assert!(matches!(err, Error::InvalidLabel(_)));
        let err = MultilayerNetwork::new(vec!["x".into(), "x".into()], vec!["a".into()], [(N1, A), (N2, A)])
            .unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel(_)));
    }

    #[test]
    fn padded_labels_sort_numerically() {
        let labels = padded_labels(120, "");
        let mut sorted = labels.clone();
        sorted.sort();
        assert_eq!(labels, sorted);
        assert_eq!(labels[7], "007");
        assert_eq!(padded_labels(1, "L"), vec!["L0"]);
    }

    #[test]
    fn network_is_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<MultilayerNetwork>();
    }
}
