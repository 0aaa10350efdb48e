//! Centrality analysis of multilayer networks and strategies for an evader
//! who chooses the layers of its new connections to keep a low ranking.

pub mod centrality;
pub mod error;
pub mod generators;
pub mod harness;
pub mod hiding;
pub mod io;
pub mod network;
pub mod paths;

pub use centrality::{CentralityMeasure, CentralityReport, MeasureKind, Scope};
pub use error::{Error, Result};
pub use generators::{gen_multilayer, GeneratorConfig, Model};
pub use harness::{run_experiment, ExperimentConfig, ExperimentRecord, NetworkSource};
pub use hiding::{EdgeAssignment, Heuristic, HidingProblem, SolverOutcome};
pub use io::{parse_network, serialize_network, write_results};
pub use network::{LayerId, MultilayerNetwork, NodeId, Occurrence};
