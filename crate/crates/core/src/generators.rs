//! Seeded random networks: Erdős–Rényi, Watts–Strogatz and Barabási–Albert
//! layers stacked into a multilayer network.
//!
//! Single-layer generators return sorted edge lists `(u, v)` with `u < v`
//! over nodes `0..n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::network::{LayerId, MultilayerNetwork, NodeId};

/// Rewiring probability used by [`gen_ws`].
pub const WS_REWIRING: f64 = 0.25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Er,
    Ws,
    Ba,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Self::Er => "er",
            Self::Ws => "ws",
            Self::Ba => "ba",
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "er" => Ok(Self::Er),
            "ws" => Ok(Self::Ws),
            "ba" => Ok(Self::Ba),
            _ => Err(Error::InvalidParameter(format!("unknown model {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorConfig {
    pub model: Model,
    pub n: usize,
    pub k: usize,
    #[serde(default = "default_layers")]
    pub layers: usize,
    #[serde(default = "half")]
    pub occurrence_prob: f64,
    #[serde(default = "half")]
    pub coupling_prob: f64,
    #[serde(default = "default_rewiring")]
    pub rewiring_prob: f64,
    #[serde(default)]
    pub seed: u64,
}

fn default_layers() -> usize {
    3
}

fn half() -> f64 {
    0.5
}

fn default_rewiring() -> f64 {
    WS_REWIRING
}

impl GeneratorConfig {
    /// Three layers, occurrence and coupling probability 1/2.
    pub fn new(model: Model, n: usize, k: usize, seed: u64) -> Self {
        Self {
            model,
            n,
            k,
            layers: default_layers(),
            occurrence_prob: half(),
            coupling_prob: half(),
            rewiring_prob: WS_REWIRING,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(msg));
        if self.n == 0 {
            return bad("n must be at least 1".into());
        }
        if self.k == 0 {
            return bad("k must be at least 1".into());
        }
        if self.layers == 0 {
            return bad("at least one layer is required".into());
        }
        for (name, p) in [
            ("occurrence probability", self.occurrence_prob),
            ("coupling probability", self.coupling_prob),
            ("rewiring probability", self.rewiring_prob),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return bad(format!("{name} {p} is outside [0, 1]"));
            }
        }
        match self.model {
            Model::Er => Ok(()),
            Model::Ws => check_ws(self.n, self.k),
            Model::Ba => check_ba(self.n, self.k),
        }
    }
}

fn check_ws(n: usize, k: usize) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::InvalidParameter(format!("WS needs an even k, got {k}")));
    }
    if k >= n {
        return Err(Error::InvalidParameter(format!("WS needs k < n, got k={k}, n={n}")));
    }
    Ok(())
}

fn check_ba(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameter(format!("BA needs 1 <= k < n, got k={k}, n={n}")));
    }
    Ok(())
}

/// G(n, p) with `p = k / (n - 1)`, capped at 1.
pub fn gen_er<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Vec<(usize, usize)>> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let p = (k as f64 / (n - 1) as f64).min(1.0);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(edges)
}

/// Ring lattice with `k / 2` neighbours per side, each edge rewired with
/// probability 1/4.
pub fn gen_ws<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Vec<(usize, usize)>> {
    gen_ws_with(n, k, WS_REWIRING, rng)
}

/// Watts–Strogatz with an explicit rewiring probability. Rewiring moves the
/// far endpoint of lattice edge `(i, i + j)` to a uniform node that is
/// neither `i` nor already adjacent to it; without such a node the edge
/// stays.
pub fn gen_ws_with<R: Rng + ?Sized>(n: usize, k: usize, beta: f64, rng: &mut R) -> Result<Vec<(usize, usize)>> {
    check_ws(n, k)?;
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::InvalidParameter(format!("rewiring probability {beta} is outside [0, 1]")));
    }
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for i in 0..n {
        for j in 1..=k / 2 {
            let w = (i + j) % n;
            adj[i].insert(w);
            adj[w].insert(i);
        }
    }
    for j in 1..=k / 2 {
        for i in 0..n {
            let w = (i + j) % n;
            if !adj[i].contains(&w) || !rng.random_bool(beta) {
                continue;
            }
            let candidates: Vec<usize> = (0..n).filter(|&x| x != i && !adj[i].contains(&x)).collect();
            if candidates.is_empty() {
                continue;
            }
            let x = candidates[rng.random_range(0..candidates.len())];
            adj[i].remove(&w);
            adj[w].remove(&i);
            adj[i].insert(x);
            adj[x].insert(i);
        }
    }
    Ok(edge_list(&adj))
}

/// A `k`-clique grown by preferential attachment: every new node links to
/// `k` distinct existing nodes drawn with probability proportional to degree.
/// Repeated draws are discarded and redrawn.
pub fn gen_ba<R: Rng + ?Sized>(n: usize, k: usize, rng: &mut R) -> Result<Vec<(usize, usize)>> {
    check_ba(n, k)?;
    let mut edges = clique(k);
    // every edge endpoint once, so a uniform pick is degree-proportional
    let mut endpoints: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    for t in k..n {
        let mut chosen = BTreeSet::new();
        while chosen.len() < k {
            let c = if endpoints.is_empty() {
                // a one-node seed clique has no weight yet
                rng.random_range(0..t)
            } else {
                endpoints[rng.random_range(0..endpoints.len())]
            };
            chosen.insert(c);
        }
        for c in chosen {
            edges.push((c, t));
            endpoints.push(c);
            endpoints.push(t);
        }
    }
    edges.sort_unstable();
    Ok(edges)
}

fn clique(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn edge_list(adj: &[BTreeSet<usize>]) -> Vec<(usize, usize)> {
    adj.iter()
        .enumerate()
        .flat_map(|(u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
        .collect()
}

/// Builds a multilayer network in three steps, all drawn from one ChaCha8
/// stream seeded with `config.seed`:
///
/// 1. node `v` occurs in layer `α` with probability `p_O` (node-major); a
///    node left without occurrences gets one in a uniformly drawn layer;
/// 2. each layer, in ascending order, receives a model network over the
///    nodes occurring in it;
/// 3. every pair of occurrences of the same node is coupled with
///    probability `p_C` (node-major, layer pairs in ascending order).
///
/// Layers too small for `k` use the closest valid parameters: ER caps the
/// edge probability at 1, WS uses the largest even `k' < |V^α|`, BA falls
/// back to a clique when `|V^α| <= k`.
pub fn gen_multilayer(config: &GeneratorConfig) -> Result<MultilayerNetwork> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (n, l) = (config.n, config.layers);

    let mut occurrences = Vec::new();
    for v in 0..n {
        let before = occurrences.len();
        for a in 0..l {
            if rng.random_bool(config.occurrence_prob) {
                occurrences.push((NodeId(v as u32), LayerId(a as u32)));
            }
        }
        if occurrences.len() == before {
            let a = rng.random_range(0..l);
            occurrences.push((NodeId(v as u32), LayerId(a as u32)));
        }
    }
    let mut m = MultilayerNetwork::with_size(n, l, occurrences)?;

    for a in m.layers().collect::<Vec<_>>() {
        let members: Vec<NodeId> = m.nodes_in_layer(a).to_vec();
        for (u, v) in layer_edges(config, members.len(), &mut rng)? {
            m.add_edge(a, members[u], members[v])?;
        }
    }

    for v in m.nodes().collect::<Vec<_>>() {
        let layers: Vec<LayerId> = m.layers_of(v).collect();
        for (i, &a) in layers.iter().enumerate() {
            for &b in &layers[i + 1..] {
                if rng.random_bool(config.coupling_prob) {
                    m.add_coupling(v, a, b)?;
                }
            }
        }
    }
    Ok(m)
}

fn layer_edges<R: Rng + ?Sized>(config: &GeneratorConfig, size: usize, rng: &mut R) -> Result<Vec<(usize, usize)>> {
    let k = config.k;
    match config.model {
        Model::Er => gen_er(size, k, rng),
        Model::Ws => {
            let cap = k.min(size.saturating_sub(1));
            let k = cap - cap % 2;
            if k == 0 {
                Ok(Vec::new())
            } else {
                gen_ws_with(size, k, config.rewiring_prob, rng)
            }
        }
        Model::Ba => {
            if size <= k {
                Ok(clique(size))
            } else {
                gen_ba(size, k, rng)
            }
        }
    }
}
