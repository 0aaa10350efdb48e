//! Independent reference implementations and random instance builders shared
//! by the integration tests.
//!
//! The oracles use Floyd–Warshall on an explicitly built occurrence graph and
//! enumerate every shortest path one by one, so they share no code with the
//! library's search kernel.
#![allow(dead_code)]

use mhide::{LayerId, MultilayerNetwork, NodeId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;

const INF: usize = usize::MAX / 4;

/// Occurrence graph as an adjacency matrix plus the owner node of each vertex.
pub struct OccurrenceGraph {
    pub owner: Vec<usize>,
    pub dist: Vec<Vec<usize>>,
    pub adj: Vec<Vec<usize>>,
}

impl OccurrenceGraph {
    pub fn build(m: &MultilayerNetwork) -> Self {
        let mut index = std::collections::HashMap::new();
        let mut owner = Vec::new();
        for v in m.nodes() {
            for a in m.layers_of(v) {
                index.insert((v, a), owner.len());
                owner.push(v.index());
            }
        }
        let k = owner.len();
        let mut adj = vec![Vec::new(); k];
        for (a, u, v) in m.edges() {
            let (x, y) = (index[&(u, a)], index[&(v, a)]);
            adj[x].push(y);
            adj[y].push(x);
        }
        for (v, a, b) in m.couplings() {
            let (x, y) = (index[&(v, a)], index[&(v, b)]);
            adj[x].push(y);
            adj[y].push(x);
        }
        let mut dist = vec![vec![INF; k]; k];
        for x in 0..k {
            dist[x][x] = 0;
            for &y in &adj[x] {
                dist[x][y] = 1;
            }
        }
        for z in 0..k {
            for x in 0..k {
                for y in 0..k {
                    let via = dist[x][z] + dist[z][y];
                    if via < dist[x][y] {
                        dist[x][y] = via;
                    }
                }
            }
        }
        Self { owner, dist, adj }
    }

    fn occurrences_of(&self, v: usize) -> Vec<usize> {
        (0..self.owner.len()).filter(|&x| self.owner[x] == v).collect()
    }

    /// Node distance: minimum over occurrence pairs, `None` if unreachable.
    pub fn node_distance(&self, w: usize, u: usize) -> Option<usize> {
        let mut best = INF;
        for s in self.occurrences_of(w) {
            for t in self.occurrences_of(u) {
                best = best.min(self.dist[s][t]);
            }
        }
        (best < INF).then_some(best)
    }

    /// Every shortest occurrence path between nodes `w` and `u`, listed
    /// explicitly.
    pub fn shortest_paths(&self, w: usize, u: usize) -> Vec<Vec<usize>> {
        let Some(len) = self.node_distance(w, u) else {
            return Vec::new();
        };
        let targets = self.occurrences_of(u);
        let mut out = Vec::new();
        for s in self.occurrences_of(w) {
            let reach = targets.iter().map(|&t| self.dist[s][t]).min().unwrap();
            if reach != len {
                continue;
            }
            let mut path = vec![s];
            self.extend(&mut path, len, &targets, &mut out);
        }
        out
    }

    fn extend(&self, path: &mut Vec<usize>, len: usize, targets: &[usize], out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        let steps = path.len() - 1;
        if steps == len {
            if targets.contains(&x) {
                out.push(path.clone());
            }
            return;
        }
        let mut next: Vec<usize> = self.adj[x].clone();
        next.sort_unstable();
        next.dedup();
        for y in next {
            let remaining = len - steps - 1;
            if targets.iter().any(|&t| self.dist[y][t] == remaining) && self.dist[path[0]][y] == steps + 1 {
                path.push(y);
                self.extend(path, len, targets, out);
                path.pop();
            }
        }
    }
}

fn ratio(a: usize, b: usize) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// Harmonic closeness `Σ_{u ≠ v} 1 / λ(v, u)` over the whole network.
pub fn oracle_closeness(m: &MultilayerNetwork) -> Vec<BigRational> {
    let g = OccurrenceGraph::build(m);
    let n = m.node_count();
    (0..n)
        .map(|v| {
            let mut total = BigRational::zero();
            for u in 0..n {
                if u != v {
                    if let Some(d) = g.node_distance(v, u) {
                        total += ratio(1, d);
                    }
                }
            }
            total
        })
        .collect()
}

/// Occurrence-incidence betweenness over unordered pairs.
pub fn oracle_betweenness(m: &MultilayerNetwork) -> Vec<BigRational> {
    let g = OccurrenceGraph::build(m);
    let n = m.node_count();
    let mut total = vec![BigRational::zero(); n];
    for w in 0..n {
        for u in w + 1..n {
            let paths = g.shortest_paths(w, u);
            if paths.is_empty() {
                continue;
            }
            let mut hits = vec![0usize; n];
            for p in &paths {
                for &x in p {
                    let v = g.owner[x];
                    if v != w && v != u {
                        hits[v] += 1;
                    }
                }
            }
            for v in 0..n {
                if hits[v] > 0 {
                    total[v] += ratio(hits[v], paths.len());
                }
            }
        }
    }
    total
}

pub fn to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap()
}

/// A uniformly random multilayer network: every node occurs in each layer
/// with probability `p_occ` (at least one layer), edges within a layer with
/// probability `p_edge`, couplings with probability `p_coupling`.
pub fn random_network<R: Rng>(rng: &mut R, n: usize, l: usize, p_occ: f64, p_edge: f64, p_coupling: f64) -> MultilayerNetwork {
    let mut occ = Vec::new();
    for v in 0..n {
        let mut any = false;
        for a in 0..l {
            if rng.random_bool(p_occ) {
                occ.push((NodeId(v as u32), LayerId(a as u32)));
                any = true;
            }
        }
        if !any {
            occ.push((NodeId(v as u32), LayerId(rng.random_range(0..l) as u32)));
        }
    }
    let mut m = MultilayerNetwork::with_size(n, l, occ).unwrap();
    for a in 0..l {
        let a = LayerId(a as u32);
        let members = m.nodes_in_layer(a).to_vec();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if rng.random_bool(p_edge) {
                    m.add_edge(a, u, v).unwrap();
                }
            }
        }
    }
    for v in 0..n {
        let v = NodeId(v as u32);
        let ls: Vec<LayerId> = m.layers_of(v).collect();
        for (i, &a) in ls.iter().enumerate() {
            for &b in &ls[i + 1..] {
                if rng.random_bool(p_coupling) {
                    m.add_coupling(v, a, b).unwrap();
                }
            }
        }
    }
    m
}

/// A random evader and up to `max_contacts` distinct contacts.
pub fn random_contacts<R: Rng>(rng: &mut R, m: &MultilayerNetwork, max_contacts: usize) -> (NodeId, Vec<NodeId>) {
    let n = m.node_count();
    let evader = NodeId(rng.random_range(0..n) as u32);
    let mut others: Vec<NodeId> = m.nodes().filter(|&v| v != evader).collect();
    // Fisher–Yates prefix
    let take = rng.random_range(0..=max_contacts.min(others.len()));
    for i in 0..take {
        let j = rng.random_range(i..others.len());
        others.swap(i, j);
    }
    others.truncate(take);
    others.sort_unstable();
    (evader, others)
}
