//! The hiding experiment: pick highly ranked evaders, cut their edges to all
//! neighbours, reconnect them with a heuristic and compare rankings.

use std::collections::{BTreeMap, BTreeSet};
use std::path::PathBuf;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::centrality::{network_ranking, CentralityMeasure, CentralityReport};
use crate::error::{Error, Result};
use crate::generators::{gen_multilayer, GeneratorConfig};
use crate::hiding::{apply_assignment, EdgeAssignment, Heuristic, HidingProblem};
use crate::network::{LayerId, MultilayerNetwork, NodeId};

pub const DEFAULT_THRESHOLD: u32 = 10;

/// Where each repetition's network comes from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NetworkSource {
    /// A network file, loaded once and reused by every repetition.
    File { file: PathBuf },
    /// A generator; its seed is replaced by the repetition seed.
    Generate(GeneratorConfig),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// Name written to the `network` column; derived from the source if absent.
    #[serde(default)]
    pub label: Option<String>,
    pub network: NetworkSource,
    #[serde(default = "all_heuristics")]
    pub heuristics: Vec<Heuristic>,
    #[serde(default = "experiment_measures")]
    pub measures: Vec<CentralityMeasure>,
    #[serde(default = "one")]
    pub repetitions: u64,
    #[serde(default)]
    pub base_seed: u64,
    #[serde(default = "default_threshold")]
    pub threshold: u32,
}

fn all_heuristics() -> Vec<Heuristic> {
    Heuristic::ALL.to_vec()
}

fn experiment_measures() -> Vec<CentralityMeasure> {
    CentralityMeasure::EXPERIMENT.to_vec()
}

fn one() -> u64 {
    1
}

fn default_threshold() -> u32 {
    DEFAULT_THRESHOLD
}

impl ExperimentConfig {
    /// All heuristics, the five experiment measures, one repetition.
    pub fn new(network: NetworkSource) -> Self {
        Self {
            label: None,
            network,
            heuristics: all_heuristics(),
            measures: experiment_measures(),
            repetitions: 1,
            base_seed: 0,
            threshold: DEFAULT_THRESHOLD,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.repetitions == 0 {
            return Err(Error::InvalidParameter("repetitions must be at least 1".into()));
        }
        if self.threshold == 0 {
            return Err(Error::InvalidParameter("threshold must be at least 1".into()));
        }
        if self.heuristics.is_empty() || self.measures.is_empty() {
            return Err(Error::InvalidParameter("need at least one heuristic and one measure".into()));
        }
        if let NetworkSource::Generate(g) = &self.network {
            g.validate()?;
        }
        Ok(())
    }

    pub fn label(&self) -> String {
        if let Some(l) = &self.label {
            return l.clone();
        }
        match &self.network {
            NetworkSource::File { file } => file
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "network".into()),
            NetworkSource::Generate(g) => format!("{}{}({},{})", g.model, g.layers, g.n, g.k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExperimentRecord {
    pub network: String,
    pub seed: u64,
    pub evader: NodeId,
    pub evader_label: String,
    pub heuristic: Heuristic,
    pub measure: CentralityMeasure,
    pub rank_before: u32,
    pub rank_after: u32,
    /// `rank_before − rank_after`; negative when the evader dropped.
    pub delta: i64,
    /// The evader had no neighbours, so nothing was rewired.
    pub no_contacts: bool,
}

impl ExperimentRecord {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        network: String,
        seed: u64,
        evader: NodeId,
        evader_label: String,
        heuristic: Heuristic,
        measure: CentralityMeasure,
        rank_before: u32,
        rank_after: u32,
        no_contacts: bool,
    ) -> Self {
        Self {
            network,
            seed,
            evader,
            evader_label,
            heuristic,
            measure,
            rank_before,
            rank_after,
            delta: i64::from(rank_before) - i64::from(rank_after),
            no_contacts,
        }
    }
}

/// Nodes ranked within `threshold` (ties included) by at least one of the
/// five experiment measures. Local measures use the aggregated ranking.
pub fn select_evaders(m: &MultilayerNetwork, threshold: u32) -> BTreeSet<NodeId> {
    CentralityMeasure::EXPERIMENT
        .iter()
        .flat_map(|&measure| {
            network_ranking(m, measure)
                .iter()
                .filter(|&(_, _, r)| r <= threshold)
                .map(|(v, _, _)| v)
                .collect::<Vec<_>>()
        })
        .collect()
}

/// `m` without the intra-layer edges between `evader` and its neighbours.
/// Returns the reduced network, the contacts and the removed edges as
/// `(layer, contact)` pairs.
pub fn strip_evader(m: &MultilayerNetwork, evader: NodeId) -> Result<(MultilayerNetwork, Vec<NodeId>, Vec<(LayerId, NodeId)>)> {
    let contacts = m.neighbors(evader)?;
    let mut reduced = m.clone();
    let mut removed = Vec::new();
    for a in m.layers_of(evader) {
        for &v in m.layer_neighbors(evader, a)? {
            reduced.remove_edge(a, evader, v)?;
            removed.push((a, v));
        }
    }
    Ok((reduced, contacts, removed))
}

/// What happened in one trial.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialOutcome {
    pub evader: NodeId,
    pub heuristic: Heuristic,
    pub contacts: Vec<NodeId>,
    pub assignment: EdgeAssignment,
    /// `(measure, rank before, rank after)` in the requested measure order.
    pub ranks: Vec<(CentralityMeasure, u32, u32)>,
}

impl TrialOutcome {
    pub fn records(&self, m: &MultilayerNetwork, network: &str, seed: u64) -> Vec<ExperimentRecord> {
        self.ranks
            .iter()
            .map(|&(measure, before, after)| {
                ExperimentRecord::new(
                    network.to_string(),
                    seed,
                    self.evader,
                    m.node_label(self.evader).to_string(),
                    self.heuristic,
                    measure,
                    before,
                    after,
                    self.contacts.is_empty(),
                )
            })
            .collect()
    }
}

/// Seed for the heuristic of one trial, mixed so that neighbouring evaders
/// and heuristics get unrelated streams.
pub fn trial_seed(seed: u64, evader: NodeId, heuristic: Heuristic) -> u64 {
    let h = Heuristic::ALL.iter().position(|&x| x == heuristic).unwrap() as u64;
    splitmix(splitmix(splitmix(seed) ^ u64::from(evader.0)) ^ h)
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Cuts the evader loose from its neighbours, reconnects it with
/// `heuristic` and ranks it before and after.
pub fn run_single_trial(
    m: &MultilayerNetwork,
    evader: NodeId,
    heuristic: Heuristic,
    measures: &[CentralityMeasure],
    seed: u64,
) -> Result<TrialOutcome> {
    let before: Vec<CentralityReport> = measures.iter().map(|&c| network_ranking(m, c)).collect();
    trial_with_baseline(m, evader, heuristic, measures, &before, seed)
}

fn trial_with_baseline(
    m: &MultilayerNetwork,
    evader: NodeId,
    heuristic: Heuristic,
    measures: &[CentralityMeasure],
    before: &[CentralityReport],
    seed: u64,
) -> Result<TrialOutcome> {
    let (reduced, contacts, _) = strip_evader(m, evader)?;
    let problem = HidingProblem::new(&reduced, evader, contacts.iter().copied())?;
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, evader, heuristic));
    let assignment = heuristic.run(&problem, &mut rng);
    let after = apply_assignment(&reduced, evader, &assignment)?;
    let ranks = measures
        .iter()
        .zip(before)
        .map(|(&c, b)| {
            let r0 = b.rank(evader).expect("evader in network");
            let r1 = network_ranking(&after, c).rank(evader).expect("evader in network");
            (c, r0, r1)
        })
        .collect();
    Ok(TrialOutcome {
        evader,
        heuristic,
        contacts,
        assignment,
        ranks,
    })
}

fn load_network(source: &NetworkSource, seed: u64) -> Result<MultilayerNetwork> {
    match source {
        NetworkSource::File { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Error::Io {
                path: file.display().to_string(),
                message: e.to_string(),
            })?;
            crate::io::parse_network(&text).map_err(|e| match e {
                Error::Parse { line, message } => Error::Parse {
                    line,
                    message: format!("{}: {message}", file.display()),
                },
                e => e,
            })
        }
        NetworkSource::Generate(g) => gen_multilayer(&GeneratorConfig { seed, ..g.clone() }),
    }
}

/// Runs every repetition. Repetition `r` uses seed `base_seed + r`. Records
/// are ordered by repetition, evader, heuristic (config order) and measure
/// (config order), whatever the thread scheduling.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    config.validate()?;
    let label = config.label();
    let shared = match &config.network {
        NetworkSource::File { .. } => Some(load_network(&config.network, 0)?),
        NetworkSource::Generate(_) => None,
    };
    let mut records = Vec::new();
    for r in 0..config.repetitions {
        let seed = config.base_seed.wrapping_add(r);
        let generated;
        let m = match &shared {
            Some(m) => m,
            None => {
                generated = load_network(&config.network, seed)?;
                &generated
            }
        };
        let before: Vec<CentralityReport> = config.measures.iter().map(|&c| network_ranking(m, c)).collect();
        let jobs: Vec<(NodeId, Heuristic)> = select_evaders(m, config.threshold)
            .into_iter()
            .flat_map(|v| config.heuristics.iter().map(move |&h| (v, h)))
            .collect();
        let run = |&(v, h): &(NodeId, Heuristic)| trial_with_baseline(m, v, h, &config.measures, &before, seed);
        #[cfg(feature = "parallel")]
        let outcomes: Vec<Result<TrialOutcome>> = {
            use rayon::prelude::*;
            jobs.par_iter().map(run).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let outcomes: Vec<Result<TrialOutcome>> = jobs.iter().map(run).collect();
        for outcome in outcomes {
            records.extend(outcome?.records(m, &label, seed));
        }
    }
    Ok(records)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeltaSummary {
    pub heuristic: Heuristic,
    pub measure: CentralityMeasure,
    pub trials: usize,
    pub mean_delta: f64,
}

/// Mean delta per (heuristic, measure), summed in record order.
pub fn summarize(records: &[ExperimentRecord]) -> Vec<DeltaSummary> {
    let mut acc: BTreeMap<(Heuristic, CentralityMeasure), (usize, i64)> = BTreeMap::new();
    for r in records {
        let e = acc.entry((r.heuristic, r.measure)).or_default();
        e.0 += 1;
        e.1 += r.delta;
    }
    acc.into_iter()
        .map(|((heuristic, measure), (trials, sum))| DeltaSummary {
            heuristic,
            measure,
            trials,
            mean_delta: sum as f64 / trials as f64,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::Model;
    use crate::network::fixtures::{m1, single_layer};

    #[test]
    fn star_centre_is_selected() {
        let m = single_layer(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert!(select_evaders(&m, 1).contains(&NodeId(0)));
    }

    #[test]
    fn isolated_nodes_all_tie() {
        let m = single_layer(5, &[]);
        assert_eq!(select_evaders(&m, 1).len(), 5);
    }

    #[test]
    fn m1_protocol_trace() {
        let m = m1();
        let (reduced, contacts, removed) = strip_evader(&m, NodeId(0)).unwrap();
        assert_eq!(contacts, vec![NodeId(1), NodeId(2)]);
        assert_eq!(removed, vec![(LayerId(0), NodeId(1)), (LayerId(1), NodeId(2))]);
        assert_eq!(reduced.global_degree(NodeId(0)).unwrap(), 0);
        assert_eq!(reduced.coupling_count(), 1);
        assert_eq!(reduced.edge_count(), 0);
    }

    #[test]
    fn forced_reconnection_restores_ranks() {
        // in M1 every contact shares exactly one layer with the evader
        let m = m1();
        for h in Heuristic::ALL {
            let out = run_single_trial(&m, NodeId(0), h, &CentralityMeasure::EXPERIMENT, 3).unwrap();
            assert!(out.ranks.iter().all(|&(_, a, b)| a == b), "{h}");
        }
    }

    #[test]
    fn isolated_evader_is_flagged() {
        let m = single_layer(3, &[(1, 2)]);
        let out = run_single_trial(&m, NodeId(0), Heuristic::Fringe, &CentralityMeasure::EXPERIMENT, 0).unwrap();
        let recs = out.records(&m, "x", 0);
        assert_eq!(recs.len(), 5);
        assert!(recs.iter().all(|r| r.no_contacts && r.delta == 0));
    }

    #[test]
    fn experiment_is_deterministic_and_seed_sensitive() {
        let mut g = GeneratorConfig::new(Model::Ba, 40, 2, 0);
        g.layers = 2;
        let mut c = ExperimentConfig::new(NetworkSource::Generate(g));
        c.repetitions = 2;
        c.threshold = 3;
        c.base_seed = 5;
        let a = run_experiment(&c).unwrap();
        let b = run_experiment(&c).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_empty());
        assert_eq!(a.len() % 20, 0);
        c.base_seed = 6;
        let d = run_experiment(&c).unwrap();
        assert_ne!(a, d);
    }

    #[test]
    fn zero_repetitions_rejected() {
        let mut c = ExperimentConfig::new(NetworkSource::Generate(GeneratorConfig::new(Model::Er, 10, 2, 0)));
        c.repetitions = 0;
        assert!(run_experiment(&c).is_err());
    }

    #[test]
    fn summary_means() {
        let rec = |h, d: u32| {
            ExperimentRecord::new("n".into(), 0, NodeId(0), "0".into(), h, CentralityMeasure::LOCAL_DEGREE, 1, 1 + d, false)
        };
        let s = summarize(&[rec(Heuristic::Random, 2), rec(Heuristic::Random, 4), rec(Heuristic::Fringe, 1)]);
        assert_eq!(s.len(), 2);
        assert_eq!(s[0].heuristic, Heuristic::Random);
        assert_eq!(s[0].mean_delta, -3.0);
        assert_eq!(s[1].mean_delta, -1.0);
    }
}
