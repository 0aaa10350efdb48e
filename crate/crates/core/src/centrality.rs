//! Degree, harmonic closeness and betweenness, computed per layer (local) or
//! over the whole multilayer network (global), with competition rankings.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::{LayerId, MultilayerNetwork, NodeId};
use crate::paths::{betweenness_totals, closeness_totals, PathWeight, SearchGraph};

/// Relative tolerance under which two scores count as tied.
///
/// Betweenness sums the same fractions in different orders for different
/// nodes; scores closer than this are treated as equal when ranking.
pub const SCORE_TOLERANCE: f64 = 1e-9;

/// `a` beats `b` by more than the tie tolerance.
#[inline]
pub fn outranks(a: f64, b: f64) -> bool {
    a > b + SCORE_TOLERANCE * b.abs().max(1.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MeasureKind {
    Degree,
    Closeness,
    Betweenness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scope {
    Local,
    Global,
}

/// Written as `<scope>-<kind>`, e.g. `local-degree`, in text and serde.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct CentralityMeasure {
    pub kind: MeasureKind,
    pub scope: Scope,
}

impl CentralityMeasure {
    pub const LOCAL_DEGREE: Self = Self::new(MeasureKind::Degree, Scope::Local);
    pub const LOCAL_CLOSENESS: Self = Self::new(MeasureKind::Closeness, Scope::Local);
    pub const LOCAL_BETWEENNESS: Self = Self::new(MeasureKind::Betweenness, Scope::Local);
    pub const GLOBAL_DEGREE: Self = Self::new(MeasureKind::Degree, Scope::Global);
    pub const GLOBAL_CLOSENESS: Self = Self::new(MeasureKind::Closeness, Scope::Global);
    pub const GLOBAL_BETWEENNESS: Self = Self::new(MeasureKind::Betweenness, Scope::Global);

    /// The measures evaluated by the hiding experiments. Global degree is
    /// left out because its ranking ignores the choice of layers.
    pub const EXPERIMENT: [Self; 5] = [
        Self::GLOBAL_CLOSENESS,
        Self::GLOBAL_BETWEENNESS,
        Self::LOCAL_DEGREE,
        Self::LOCAL_CLOSENESS,
        Self::LOCAL_BETWEENNESS,
    ];

    pub const fn new(kind: MeasureKind, scope: Scope) -> Self {
        Self { kind, scope }
    }

    /// Global degree rankings do not depend on which layer carries each new
    /// edge, only on which contacts get connected.
    pub fn is_layer_choice_invariant(&self) -> bool {
        self.kind == MeasureKind::Degree && self.scope == Scope::Global
    }

    pub fn name(&self) -> &'static str {
        match (self.scope, self.kind) {
            (Scope::Local, MeasureKind::Degree) => "local-degree",
            (Scope::Local, MeasureKind::Closeness) => "local-closeness",
            (Scope::Local, MeasureKind::Betweenness) => "local-betweenness",
            (Scope::Global, MeasureKind::Degree) => "global-degree",
            (Scope::Global, MeasureKind::Closeness) => "global-closeness",
            (Scope::Global, MeasureKind::Betweenness) => "global-betweenness",
        }
    }
}

impl fmt::Display for CentralityMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CentralityMeasure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (scope, kind) = s
            .split_once('-')
            .ok_or_else(|| Error::InvalidParameter(format!("unknown measure {s:?}")))?;
        Ok(Self::new(kind.parse()?, scope.parse()?))
    }
}

impl TryFrom<String> for CentralityMeasure {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<CentralityMeasure> for String {
    fn from(m: CentralityMeasure) -> String {
        m.name().to_string()
    }
}

impl FromStr for MeasureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "degree" => Ok(Self::Degree),
            "closeness" => Ok(Self::Closeness),
            "betweenness" => Ok(Self::Betweenness),
            _ => Err(Error::InvalidParameter(format!("unknown measure kind {s:?}"))),
        }
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "local" => Ok(Self::Local),
            "global" => Ok(Self::Global),
            _ => Err(Error::InvalidParameter(format!("unknown scope {s:?}"))),
        }
    }
}

/// Where a computation looks: the whole network or a single layer graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum View {
    Global,
    Layer(LayerId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReportScope {
    Global,
    Layer(LayerId),
    /// Local rankings folded into one network-wide score `1 / min_α r^α(v)`.
    Aggregated,
}

/// Scores and competition ranks for the nodes in one scope.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralityReport {
    scope: ReportScope,
    nodes: Vec<NodeId>,
    scores: Vec<f64>,
    ranks: Vec<u32>,
}

impl CentralityReport {
    /// Builds a report from `(node, score)` pairs; nodes must be ascending.
    pub fn new(scope: ReportScope, entries: Vec<(NodeId, f64)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        let (nodes, scores): (Vec<_>, Vec<_>) = entries.into_iter().unzip();
        let ranks = competition_ranks(&scores);
        Self {
            scope,
            nodes,
            scores,
            ranks,
        }
    }

    pub fn scope(&self) -> ReportScope {
        self.scope
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    fn position(&self, v: NodeId) -> Option<usize> {
        self.nodes.binary_search(&v).ok()
    }

    pub fn score(&self, v: NodeId) -> Option<f64> {
        self.position(v).map(|i| self.scores[i])
    }

    pub fn rank(&self, v: NodeId) -> Option<u32> {
        self.position(v).map(|i| self.ranks[i])
    }

    /// Number of nodes in scope scoring strictly above `v`.
    pub fn outranking(&self, v: NodeId) -> Option<usize> {
        self.rank(v).map(|r| r as usize - 1)
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, f64, u32)> + '_ {
        (0..self.nodes.len()).map(|i| (self.nodes[i], self.scores[i], self.ranks[i]))
    }
}

/// rank(v) = 1 + number of scores that outrank v's.
pub fn competition_ranks(scores: &[f64]) -> Vec<u32> {
    let mut sorted = scores.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    scores
        .iter()
        .map(|&s| 1 + sorted.partition_point(|&x| outranks(x, s)) as u32)
        .collect()
}

fn layer_nodes_or_global(m: &MultilayerNetwork, view: View) -> Result<Vec<NodeId>> {
    match view {
        View::Global => Ok(m.nodes().collect()),
        View::Layer(a) => {
            m.check_layer(a)?;
            Ok(m.nodes_in_layer(a).to_vec())
        }
    }
}

fn search_graph(m: &MultilayerNetwork, view: View) -> Result<SearchGraph> {
    Ok(match view {
        View::Global => SearchGraph::occurrences(m),
        View::Layer(a) => SearchGraph::layer(&m.layer_graph(a)?),
    })
}

fn generic_scores<T: PathWeight>(m: &MultilayerNetwork, kind: MeasureKind, view: View) -> Result<Vec<T>> {
    match kind {
        MeasureKind::Degree => {
            let nodes = layer_nodes_or_global(m, view)?;
            nodes
                .into_iter()
                .map(|v| {
                    let deg = match view {
                        View::Global => m.global_degree(v)?,
                        View::Layer(a) => m.local_degree(v, a)?,
                    };
                    Ok(T::from_count(deg))
                })
                .collect()
        }
        MeasureKind::Closeness => Ok(closeness_totals(&search_graph(m, view)?)),
        MeasureKind::Betweenness => Ok(betweenness_totals(&search_graph(m, view)?)),
    }
}

/// Scores of every node in `view`, in ascending node order.
pub fn view_scores(m: &MultilayerNetwork, kind: MeasureKind, view: View) -> Result<Vec<(NodeId, f64)>> {
    let nodes = layer_nodes_or_global(m, view)?;
    let scores = generic_scores::<f64>(m, kind, view)?;
    Ok(nodes.into_iter().zip(scores).collect())
}

/// Global scores under exact rational arithmetic, indexed by node id.
pub fn global_scores_exact(m: &MultilayerNetwork, kind: MeasureKind) -> Vec<BigRational> {
    generic_scores::<BigRational>(m, kind, View::Global).expect("global view is always valid")
}

fn single_score(m: &MultilayerNetwork, kind: MeasureKind, view: View, v: NodeId) -> Result<f64> {
    m.check_node(v)?;
    if let View::Layer(a) = view {
        m.check_layer(a)?;
        if !m.occurs(v, a) {
            return Err(Error::MissingOccurrence { node: v, layer: a });
        }
    }
    if kind == MeasureKind::Degree {
        return Ok(match view {
            View::Global => m.global_degree(v)?,
            View::Layer(a) => m.local_degree(v, a)?,
        } as f64);
    }
    let scores = view_scores(m, kind, view)?;
    let i = scores.binary_search_by_key(&v, |e| e.0).expect("node in view");
    Ok(scores[i].1)
}

pub fn degree_centrality(m: &MultilayerNetwork, view: View, v: NodeId) -> Result<f64> {
    single_score(m, MeasureKind::Degree, view, v)
}

pub fn closeness_centrality(m: &MultilayerNetwork, view: View, v: NodeId) -> Result<f64> {
    single_score(m, MeasureKind::Closeness, view, v)
}

pub fn betweenness_centrality(m: &MultilayerNetwork, view: View, v: NodeId) -> Result<f64> {
    single_score(m, MeasureKind::Betweenness, view, v)
}

pub fn global_report(m: &MultilayerNetwork, kind: MeasureKind) -> CentralityReport {
    let entries = view_scores(m, kind, View::Global).expect("global view is always valid");
    CentralityReport::new(ReportScope::Global, entries)
}

pub fn layer_report(m: &MultilayerNetwork, kind: MeasureKind, a: LayerId) -> Result<CentralityReport> {
    Ok(CentralityReport::new(
        ReportScope::Layer(a),
        view_scores(m, kind, View::Layer(a))?,
    ))
}

/// One report for a global measure, or one report per layer for a local one.
pub fn full_report(m: &MultilayerNetwork, measure: CentralityMeasure) -> Vec<CentralityReport> {
    match measure.scope {
        Scope::Global => vec![global_report(m, measure.kind)],
        Scope::Local => m
            .layers()
            .map(|a| layer_report(m, measure.kind, a).expect("layer from network"))
            .collect(),
    }
}

/// Folds per-layer rankings into one score per node: `1 / min_α r^α(v)`.
pub fn aggregate_local_ranking(m: &MultilayerNetwork, kind: MeasureKind) -> CentralityReport {
    let mut best = vec![u32::MAX; m.node_count()];
    for report in full_report(m, CentralityMeasure::new(kind, Scope::Local)) {
        for (v, _, r) in report.iter() {
            best[v.index()] = best[v.index()].min(r);
        }
    }
    let entries = m
        .nodes()
        .map(|v| (v, 1.0 / f64::from(best[v.index()])))
        .collect();
    CentralityReport::new(ReportScope::Aggregated, entries)
}

/// A network-wide ranking for any measure: the global report, or the
/// aggregated local ranking.
pub fn network_ranking(m: &MultilayerNetwork, measure: CentralityMeasure) -> CentralityReport {
    match measure.scope {
        Scope::Global => global_report(m, measure.kind),
        Scope::Local => aggregate_local_ranking(m, measure.kind),
    }
}
