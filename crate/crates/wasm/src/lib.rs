//! Browser bindings: generate a network, rank its nodes, hide one of them.
//! Results cross the boundary as JSON strings.

use mhide::centrality::network_ranking;
use mhide::harness::run_single_trial;
use mhide::{gen_multilayer, parse_network, serialize_network, CentralityMeasure, GeneratorConfig, Heuristic, Model, MultilayerNetwork};
use serde::Serialize;
use wasm_bindgen::prelude::*;

fn js(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

#[derive(Serialize)]
struct Graph<'a> {
    nodes: Vec<&'a str>,
    layers: Vec<&'a str>,
    occurrences: Vec<(u32, u32)>,
    edges: Vec<(u32, u32, u32)>,
    couplings: Vec<(u32, u32, u32)>,
}

#[derive(Serialize)]
struct Row<'a> {
    node: &'a str,
    score: f64,
    rank: u32,
}

#[derive(Serialize)]
struct RankChange {
    measure: String,
    before: u32,
    after: u32,
    delta: i64,
}

#[derive(Serialize)]
struct Trial<'a> {
    contacts: Vec<&'a str>,
    assignment: Vec<(&'a str, &'a str)>,
    ranks: Vec<RankChange>,
}

#[wasm_bindgen]
pub struct Demo {
    net: MultilayerNetwork,
}

#[wasm_bindgen]
impl Demo {
    /// `model` is one of `er`, `ws`, `ba`.
    pub fn generate(model: &str, n: usize, k: usize, layers: usize, seed: u64) -> Result<Demo, JsError> {
        let model: Model = model.parse().map_err(js)?;
        let mut cfg = GeneratorConfig::new(model, n, k, seed);
        cfg.layers = layers;
        Ok(Demo {
            net: gen_multilayer(&cfg).map_err(js)?,
        })
    }

    #[wasm_bindgen(js_name = fromText)]
    pub fn from_text(text: &str) -> Result<Demo, JsError> {
        Ok(Demo {
            net: parse_network(text).map_err(js)?,
        })
    }

    pub fn text(&self) -> String {
        serialize_network(&self.net)
    }

    /// Nodes, layers, occurrences `[node, layer]`, edges `[layer, u, v]` and
    /// couplings `[node, layer, layer]`, all by index.
    #[wasm_bindgen(js_name = graphJson)]
    pub fn graph_json(&self) -> String {
        let m = &self.net;
        let g = Graph {
            nodes: m.nodes().map(|v| m.node_label(v)).collect(),
            layers: m.layers().map(|a| m.layer_label(a)).collect(),
            occurrences: m.occurrences().iter().map(|o| (o.node.0, o.layer.0)).collect(),
            edges: m.edges().into_iter().map(|(a, u, v)| (a.0, u.0, v.0)).collect(),
            couplings: m.couplings().into_iter().map(|(v, a, b)| (v.0, a.0, b.0)).collect(),
        };
        serde_json::to_string(&g).unwrap()
    }

    /// Rows `{node, score, rank}` sorted by rank. `measure` is e.g.
    /// `global-closeness` or `local-degree` (aggregated over layers).
    pub fn centrality(&self, measure: &str) -> Result<String, JsError> {
        let measure: CentralityMeasure = measure.parse().map_err(js)?;
        let report = network_ranking(&self.net, measure);
        let mut rows: Vec<Row> = report
            .iter()
            .map(|(v, score, rank)| Row {
                node: self.net.node_label(v),
                score,
                rank,
            })
            .collect();
        rows.sort_by_key(|r| r.rank);
        Ok(serde_json::to_string(&rows).unwrap())
    }

    /// Cuts the evader's edges, reconnects it with `heuristic` and reports
    /// its rank under every experiment measure before and after.
    pub fn hide(&self, evader: &str, heuristic: &str, seed: u64) -> Result<String, JsError> {
        let m = &self.net;
        let v = m.find_node(evader).ok_or_else(|| js(format!("unknown node {evader:?}")))?;
        let heuristic: Heuristic = heuristic.parse().map_err(js)?;
        let out = run_single_trial(m, v, heuristic, &CentralityMeasure::EXPERIMENT, seed).map_err(js)?;
        let trial = Trial {
            contacts: out.contacts.iter().map(|&c| m.node_label(c)).collect(),
            assignment: out.assignment.iter().map(|(c, a)| (m.node_label(c), m.layer_label(a))).collect(),
            ranks: out
                .ranks
                .iter()
                .map(|&(c, before, after)| RankChange {
                    measure: c.to_string(),
                    before,
                    after,
                    delta: i64::from(before) - i64::from(after),
                })
                .collect(),
        };
        Ok(serde_json::to_string(&trial).unwrap())
    }
}
