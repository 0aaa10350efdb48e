//! Shortest paths over layer graphs and over the occurrence graph of a
//! multilayer network.
//!
//! The occurrence graph has one vertex per node occurrence; intra-layer edges
//! and couplings both have length 1. A search from node `s` starts from every
//! occurrence of `s` at distance 0, and the distance to node `u` is the minimum
//! over the occurrences of `u`.
//!
//! Local (single-layer) and global measures run through the same kernel: a
//! layer graph is just a search graph whose node groups are singletons. This
//! keeps local and global scores bit-identical on single-layer networks.

use std::collections::{BTreeMap, VecDeque};
use std::ops::{Add, AddAssign, Div, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::network::{LayerGraph, MultilayerNetwork, NodeId};

/// A hop count, or no path at all.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Finite(u32),
    Unreachable,
}

impl Distance {
    pub fn finite(self) -> Option<u32> {
        match self {
            Distance::Finite(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

/// Arithmetic used for path counts and dependency accumulation.
pub trait PathWeight:
    Clone
    + Zero
    + One
    + AddAssign
    + Add<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_count(n: usize) -> Self;
}

impl PathWeight for f64 {
    fn from_count(n: usize) -> Self {
        n as f64
    }
}

impl PathWeight for BigRational {
    fn from_count(n: usize) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
}

const UNSEEN: u32 = u32::MAX;
const CHUNK: usize = 32;

/// Compressed adjacency over search vertices, with vertices partitioned into
/// contiguous groups (one group per network node).
#[derive(Clone, Debug)]
pub(crate) struct SearchGraph {
    offsets: Vec<usize>,
    targets: Vec<u32>,
    owner: Vec<u32>,
    group_start: Vec<usize>,
}

impl SearchGraph {
    pub(crate) fn occurrences(m: &MultilayerNetwork) -> Self {
        let count = m.occurrence_count();
        let mut offsets = Vec::with_capacity(count + 1);
        let mut targets = Vec::new();
        let mut owner = Vec::with_capacity(count);
        let mut scratch = Vec::new();
        offsets.push(0);
        for (o, occ) in m.occurrences().iter().enumerate() {
            scratch.clear();
            scratch.extend(m.occurrence_neighbors(o).iter().map(|&w| {
                m.occurrence_id(w, occ.layer).expect("edge endpoint without occurrence") as u32
            }));
            scratch.extend(
                m.occurrence_couplings(o)
                    .iter()
                    .map(|&b| m.occurrence_id(occ.node, b).expect("coupling without occurrence") as u32),
            );
            scratch.sort_unstable();
            targets.extend_from_slice(&scratch);
            offsets.push(targets.len());
            owner.push(occ.node.0);
        }
        let group_start = m
            .nodes()
            .map(|v| m.occurrence_range(v).start)
            .chain(std::iter::once(count))
            .collect();
        Self {
            offsets,
            targets,
            owner,
            group_start,
        }
    }

    pub(crate) fn layer(g: &LayerGraph) -> Self {
        let n = g.len();
        let mut offsets = Vec::with_capacity(n + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for i in 0..n {
            let mut adj: Vec<u32> = g.neighbors(i).iter().map(|&j| j as u32).collect();
            adj.sort_unstable();
            targets.extend_from_slice(&adj);
            offsets.push(targets.len());
        }
        Self {
            offsets,
            targets,
            owner: (0..n as u32).collect(),
            group_start: (0..=n).collect(),
        }
    }

    pub(crate) fn group_count(&self) -> usize {
        self.group_start.len() - 1
    }

    fn vertex_count(&self) -> usize {
        self.owner.len()
    }

    #[inline]
    fn neighbors(&self, x: usize) -> &[u32] {
        &self.targets[self.offsets[x]..self.offsets[x + 1]]
    }
}

/// Reusable per-source buffers.
struct Sweep<T> {
    dist: Vec<u32>,
    sigma: Vec<T>,
    order: Vec<u32>,
    group_dist: Vec<u32>,
    group_paths: Vec<T>,
    touched_groups: Vec<u32>,
    dependency: Vec<T>,
    queue: VecDeque<u32>,
}

impl<T: PathWeight> Sweep<T> {
    fn new(g: &SearchGraph) -> Self {
        Self {
            dist: vec![UNSEEN; g.vertex_count()],
            sigma: vec![T::zero(); g.vertex_count()],
            order: Vec::with_capacity(g.vertex_count()),
            group_dist: vec![UNSEEN; g.group_count()],
            group_paths: vec![T::zero(); g.group_count()],
            touched_groups: Vec::new(),
            dependency: vec![T::zero(); g.vertex_count()],
            queue: VecDeque::new(),
        }
    }

    fn reset(&mut self) {
        for &x in &self.order {
            self.dist[x as usize] = UNSEEN;
            self.sigma[x as usize] = T::zero();
            self.dependency[x as usize] = T::zero();
        }
        for &g in &self.touched_groups {
            self.group_dist[g as usize] = UNSEEN;
            self.group_paths[g as usize] = T::zero();
        }
        self.order.clear();
        self.touched_groups.clear();
    }

    /// Multi-source BFS from every vertex of group `s`, counting shortest paths.
    fn search(&mut self, g: &SearchGraph, s: usize) {
        self.reset();
        for x in g.group_start[s]..g.group_start[s + 1] {
            self.dist[x] = 0;
            self.sigma[x] = T::one();
            self.queue.push_back(x as u32);
        }
        while let Some(x) = self.queue.pop_front() {
            let x = x as usize;
            self.order.push(x as u32);
            let next = self.dist[x] + 1;
            for &y in g.neighbors(x) {
                let y = y as usize;
                if self.dist[y] == UNSEEN {
                    self.dist[y] = next;
                    self.queue.push_back(y as u32);
                }
                if self.dist[y] == next {
                    let add = self.sigma[x].clone();
                    self.sigma[y] += add;
                }
            }
        }
        // BFS order is level-monotone, so the first vertex of a group seen
        // carries the group's distance.
        for &x in &self.order {
            let x = x as usize;
            let grp = g.owner[x] as usize;
            if grp == s {
                continue;
            }
            if self.group_dist[grp] == UNSEEN {
                self.group_dist[grp] = self.dist[x];
                self.touched_groups.push(grp as u32);
            }
            if self.dist[x] == self.group_dist[grp] {
                let add = self.sigma[x].clone();
                self.group_paths[grp] += add;
            }
        }
    }

    /// Harmonic sum of reciprocal group distances, accumulated per distance.
    fn harmonic(&self) -> T {
        let mut histogram: Vec<usize> = Vec::new();
        for &grp in &self.touched_groups {
            let d = self.group_dist[grp as usize] as usize;
            if histogram.len() <= d {
                histogram.resize(d + 1, 0);
            }
            histogram[d] += 1;
        }
        let mut total = T::zero();
        for (d, &count) in histogram.iter().enumerate().skip(1) {
            if count > 0 {
                total += T::from_count(count) / T::from_count(d);
            }
        }
        total
    }

    /// Adds the ordered-pair occurrence-incidence dependencies of source `s`
    /// into `acc`, indexed by group.
    fn accumulate(&mut self, g: &SearchGraph, s: usize, acc: &mut [T]) {
        for i in (0..self.order.len()).rev() {
            let x = self.order[i] as usize;
            let next = self.dist[x] + 1;
            let mut dep = T::zero();
            for &y in g.neighbors(x) {
                let y = y as usize;
                if self.dist[y] != next {
                    continue;
                }
                let grp = g.owner[y] as usize;
                if grp != s && self.dist[y] == self.group_dist[grp] {
                    dep += T::one() / self.group_paths[grp].clone();
                }
                dep += self.dependency[y].clone();
            }
            let grp = g.owner[x] as usize;
            if grp != s && !dep.is_zero() {
                acc[grp] += self.sigma[x].clone() * dep.clone();
            }
            self.dependency[x] = dep;
        }
    }
}

fn chunked_sum<T, F>(groups: usize, width: usize, per_chunk: F) -> Vec<T>
where
    T: PathWeight,
    F: Fn(std::ops::Range<usize>) -> Vec<T> + Sync + Send,
{
    let chunks: Vec<std::ops::Range<usize>> = (0..groups)
        .step_by(CHUNK)
        .map(|start| start..(start + CHUNK).min(groups))
        .collect();
    #[cfg(feature = "parallel")]
    let partials: Vec<Vec<T>> = {
        use rayon::prelude::*;
        chunks.into_par_iter().map(&per_chunk).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let partials: Vec<Vec<T>> = chunks.into_iter().map(&per_chunk).collect();
    let mut total = vec![T::zero(); width];
    for part in partials {
        for (t, p) in total.iter_mut().zip(part) {
            *t += p;
        }
    }
    total
}

/// Betweenness per group over unordered pairs, counting every (vertex, path)
/// incidence. Partial sums are combined in source order, so the result does
/// not depend on thread scheduling.
pub(crate) fn betweenness_totals<T: PathWeight>(g: &SearchGraph) -> Vec<T> {
    let groups = g.group_count();
    let ordered = chunked_sum(groups, groups, |range| {
        let mut sweep = Sweep::<T>::new(g);
        let mut acc = vec![T::zero(); groups];
        for s in range {
            sweep.search(g, s);
            sweep.accumulate(g, s, &mut acc);
        }
        acc
    });
    let two = T::from_count(2);
    ordered.into_iter().map(|x| x / two.clone()).collect()
}

/// Harmonic closeness per group.
pub(crate) fn closeness_totals<T: PathWeight>(g: &SearchGraph) -> Vec<T> {
    let groups = g.group_count();
    let per_chunk = |range: std::ops::Range<usize>| {
        let mut sweep = Sweep::<T>::new(g);
        range
            .map(|s| {
                sweep.search(g, s);
                sweep.harmonic()
            })
            .collect::<Vec<T>>()
    };
    let chunks: Vec<std::ops::Range<usize>> = (0..groups)
        .step_by(CHUNK)
        .map(|start| start..(start + CHUNK).min(groups))
        .collect();
    #[cfg(feature = "parallel")]
    let parts: Vec<Vec<T>> = {
        use rayon::prelude::*;
        chunks.into_par_iter().map(per_chunk).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Vec<T>> = chunks.into_iter().map(per_chunk).collect();
    parts.into_iter().flatten().collect()
}

fn bfs_groups(g: &SearchGraph, s: usize) -> Vec<Distance> {
    let mut sweep = Sweep::<f64>::new(g);
    sweep.search(g, s);
    let mut out = vec![Distance::Unreachable; g.group_count()];
    out[s] = Distance::Finite(0);
    for &grp in &sweep.touched_groups {
        out[grp as usize] = Distance::Finite(sweep.group_dist[grp as usize]);
    }
    out
}

/// BFS distances inside one layer graph.
pub fn single_source_distances_layer(g: &LayerGraph, s: NodeId) -> Result<BTreeMap<NodeId, Distance>> {
    let i = g.local_index(s).ok_or(Error::UnknownNode(s))?;
    let dist = bfs_groups(&SearchGraph::layer(g), i);
    Ok(g.nodes().iter().copied().zip(dist).collect())
}

/// Multilayer distances from `s` to every node, indexed by node id.
pub fn single_source_distances_multilayer(m: &MultilayerNetwork, s: NodeId) -> Result<Vec<Distance>> {
    m.check_node(s)?;
    Ok(bfs_groups(&SearchGraph::occurrences(m), s.index()))
}

/// Sum of pair dependencies of source `s` on every other node of a layer
/// graph: δ_s(v) = Σ_u σ_su(v) / σ_su over targets `u` reachable from `s`.
pub fn brandes_sweep_layer(g: &LayerGraph, s: NodeId) -> Result<BTreeMap<NodeId, f64>> {
    let i = g.local_index(s).ok_or(Error::UnknownNode(s))?;
    let sg = SearchGraph::layer(g);
    let mut sweep = Sweep::<f64>::new(&sg);
    let mut acc = vec![0.0; sg.group_count()];
    sweep.search(&sg, i);
    sweep.accumulate(&sg, i, &mut acc);
    Ok(g
        .nodes()
        .iter()
        .copied()
        .zip(acc)
        .filter(|&(v, _)| v != s)
        .collect())
}

/// Distances, shortest-path counts and the predecessor DAG over occurrences
/// for a search started from every occurrence of one node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestPathSummary {
    pub source: NodeId,
    /// Per occurrence id.
    pub distance: Vec<Distance>,
    /// Number of shortest paths from the source occurrences, per occurrence id.
    pub paths: Vec<u128>,
    /// Predecessor occurrence ids, per occurrence id.
    pub predecessors: Vec<Vec<usize>>,
}

pub fn shortest_path_summary(m: &MultilayerNetwork, s: NodeId) -> Result<ShortestPathSummary> {
    m.check_node(s)?;
    let g = SearchGraph::occurrences(m);
    let n = g.vertex_count();
    let mut distance = vec![Distance::Unreachable; n];
    let mut paths = vec![0u128; n];
    let mut predecessors = vec![Vec::new(); n];
    let mut queue = VecDeque::new();
    for x in m.occurrence_range(s) {
        distance[x] = Distance::Finite(0);
        paths[x] = 1;
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        let Distance::Finite(dx) = distance[x] else { unreachable!() };
        for &y in g.neighbors(x) {
            let y = y as usize;
            if distance[y] == Distance::Unreachable {
                distance[y] = Distance::Finite(dx + 1);
                queue.push_back(y);
            }
            if distance[y] == Distance::Finite(dx + 1) {
                paths[y] = paths[y].saturating_add(paths[x]);
                predecessors[y].push(x);
            }
        }
    }
    Ok(ShortestPathSummary {
        source: s,
        distance,
        paths,
        predecessors,
    })
}

/// Shortest paths between two nodes of a multilayer network.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPaths {
    /// |π_M(w,u)|.
    pub count: u128,
    /// Per node outside {w, u}: the number of (occurrence, path) pairs with
    /// the occurrence on the path. Nodes with no incidence are omitted.
    pub incidence: BTreeMap<NodeId, u128>,
}

impl PairPaths {
    pub fn incidence_of(&self, v: NodeId) -> u128 {
        self.incidence.get(&v).copied().unwrap_or(0)
    }
}

pub fn multilayer_pair_paths(m: &MultilayerNetwork, w: NodeId, u: NodeId) -> Result<PairPaths> {
    m.check_node(w)?;
    m.check_node(u)?;
    if w == u {
        return Err(Error::InvalidParameter(format!("pair endpoints coincide at {w}")));
    }
    let from_w = shortest_path_summary(m, w)?;
    let from_u = shortest_path_summary(m, u)?;
    let Some(target) = m
        .occurrence_range(u)
        .filter_map(|o| from_w.distance[o].finite())
        .min()
    else {
        return Ok(PairPaths {
            count: 0,
            incidence: BTreeMap::new(),
        });
    };
    let count = m
        .occurrence_range(u)
        .filter(|&o| from_w.distance[o] == Distance::Finite(target))
        .fold(0u128, |acc, o| acc.saturating_add(from_w.paths[o]));
    let mut incidence = BTreeMap::new();
    for (o, occ) in m.occurrences().iter().enumerate() {
        if occ.node == w || occ.node == u {
            continue;
        }
        let (Some(a), Some(b)) = (from_w.distance[o].finite(), from_u.distance[o].finite()) else {
            continue;
        };
        if a + b == target {
            let through = from_w.paths[o].saturating_mul(from_u.paths[o]);
            *incidence.entry(occ.node).or_insert(0u128) += through;
        }
    }
    Ok(PairPaths { count, incidence })
}
