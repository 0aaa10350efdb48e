//! Text formats: networks, edge assignments and result tables.
//!
//! A network file looks like
//!
//! ```text
//! mhide-net v1
//! layer a
//! layer b
//! node 1 a b
//! node 2 a
//! edge a 1 2
//! coupling 1 a b
//! ```
//!
//! Blank lines and lines starting with `#` are ignored. Nodes and layers get
//! dense ids in lexicographic order of their names, so a network whose ids
//! already follow that order survives a round trip unchanged.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::harness::ExperimentRecord;
use crate::hiding::EdgeAssignment;
use crate::network::{LayerId, MultilayerNetwork, NodeId};

pub const NETWORK_HEADER: &str = "mhide-net v1";
pub const RESULTS_HEADER: &str = "network,seed,evader,heuristic,measure,rank_before,rank_after,delta";

/// Position of every id when names are sorted lexicographically.
fn name_order<'a>(names: impl Iterator<Item = &'a str>) -> Vec<usize> {
    let names: Vec<&str> = names.collect();
    let mut idx: Vec<usize> = (0..names.len()).collect();
    idx.sort_by_key(|&i| names[i]);
    let mut pos = vec![0; names.len()];
    for (p, i) in idx.into_iter().enumerate() {
        pos[i] = p;
    }
    pos
}

/// Canonical text of `m`. Every section is sorted by name.
pub fn serialize_network(m: &MultilayerNetwork) -> String {
    let node_pos = name_order(m.nodes().map(|v| m.node_label(v)));
    let layer_pos = name_order(m.layers().map(|a| m.layer_label(a)));
    let mut nodes: Vec<NodeId> = m.nodes().collect();
    nodes.sort_by_key(|v| node_pos[v.index()]);
    let mut layers: Vec<LayerId> = m.layers().collect();
    layers.sort_by_key(|a| layer_pos[a.index()]);

    let mut out = String::new();
    out.push_str(NETWORK_HEADER);
    out.push('\n');
    for &a in &layers {
        let _ = writeln!(out, "layer {}", m.layer_label(a));
    }
    for &v in &nodes {
        let mut ls: Vec<LayerId> = m.layers_of(v).collect();
        ls.sort_by_key(|a| layer_pos[a.index()]);
        let _ = write!(out, "node {}", m.node_label(v));
        for a in ls {
            let _ = write!(out, " {}", m.layer_label(a));
        }
        out.push('\n');
    }

    let mut edges: Vec<(usize, usize, usize)> = m
        .edges()
        .into_iter()
        .map(|(a, u, v)| {
            let (pu, pv) = (node_pos[u.index()], node_pos[v.index()]);
            (layer_pos[a.index()], pu.min(pv), pu.max(pv))
        })
        .collect();
    edges.sort_unstable();
    for (a, u, v) in edges {
        let _ = writeln!(
            out,
            "edge {} {} {}",
            m.layer_label(layers[a]),
            m.node_label(nodes[u]),
            m.node_label(nodes[v])
        );
    }

    let mut couplings: Vec<(usize, usize, usize)> = m
        .couplings()
        .into_iter()
        .map(|(v, a, b)| {
            let (pa, pb) = (layer_pos[a.index()], layer_pos[b.index()]);
            (node_pos[v.index()], pa.min(pb), pa.max(pb))
        })
        .collect();
    couplings.sort_unstable();
    for (v, a, b) in couplings {
        let _ = writeln!(
            out,
            "coupling {} {} {}",
            m.node_label(nodes[v]),
            m.layer_label(layers[a]),
            m.layer_label(layers[b])
        );
    }
    out
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Reads a network in the format written by [`serialize_network`]. Section
/// order is free; errors carry the 1-based line number.
pub fn parse_network(text: &str) -> Result<MultilayerNetwork> {
    let mut header_seen = false;
    let mut layers: BTreeMap<&str, usize> = BTreeMap::new();
    let mut nodes: BTreeMap<&str, (usize, Vec<&str>)> = BTreeMap::new();
    let mut edges: Vec<(usize, [&str; 3])> = Vec::new();
    let mut couplings: Vec<(usize, [&str; 3])> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if !header_seen {
            if line != NETWORK_HEADER {
                return Err(parse_error(line_no, format!("expected header {NETWORK_HEADER:?}")));
            }
            header_seen = true;
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        for t in &tokens {
            if t.contains(',') {
                return Err(parse_error(line_no, format!("name {t:?} contains a comma")));
            }
        }
        let args = &tokens[1..];
        match tokens[0] {
            "layer" => {
                let [name] = args else {
                    return Err(parse_error(line_no, "expected `layer <name>`"));
                };
                if layers.insert(name, line_no).is_some() {
                    return Err(parse_error(line_no, format!("layer {name} declared twice")));
                }
            }
            "node" => {
                let Some((name, ls)) = args.split_first() else {
                    return Err(parse_error(line_no, "expected `node <name> <layer>...`"));
                };
                if ls.is_empty() {
                    return Err(parse_error(line_no, format!("node {name} occurs in no layer")));
                }
                if nodes.insert(name, (line_no, ls.to_vec())).is_some() {
                    return Err(parse_error(line_no, format!("node {name} declared twice")));
                }
            }
            "edge" | "coupling" => {
                let &[x, y, z] = args else {
                    return Err(parse_error(line_no, format!("expected `{} <a> <b> <c>`", tokens[0])));
                };
                let target = if tokens[0] == "edge" { &mut edges } else { &mut couplings };
                target.push((line_no, [x, y, z]));
            }
            other => return Err(parse_error(line_no, format!("unknown directive {other:?}"))),
        }
    }
    if !header_seen {
        return Err(parse_error(1, format!("missing header {NETWORK_HEADER:?}")));
    }

    let layer_id: BTreeMap<&str, LayerId> = layers
        .keys()
        .enumerate()
        .map(|(i, &name)| (name, LayerId(i as u32)))
        .collect();
    let node_id: BTreeMap<&str, NodeId> = nodes
        .keys()
        .enumerate()
        .map(|(i, &name)| (name, NodeId(i as u32)))
        .collect();
    let find_layer = |line: usize, name: &str| {
        layer_id
            .get(name)
            .copied()
            .ok_or_else(|| parse_error(line, format!("undeclared layer {name}")))
    };
    let find_node = |line: usize, name: &str| {
        node_id
            .get(name)
            .copied()
            .ok_or_else(|| parse_error(line, format!("undeclared node {name}")))
    };

    let mut occurrences = Vec::new();
    for (&name, (line, ls)) in &nodes {
        let v = node_id[name];
        for &l in ls {
            occurrences.push((v, find_layer(*line, l)?));
        }
    }
    let mut m = MultilayerNetwork::new(
        node_id.keys().map(|s| s.to_string()).collect(),
        layer_id.keys().map(|s| s.to_string()).collect(),
        occurrences,
    )
    .map_err(|e| parse_error(0, e.to_string()))?;

    for (line, [a, u, v]) in edges {
        let (a, u, v) = (find_layer(line, a)?, find_node(line, u)?, find_node(line, v)?);
        match m.add_edge(a, u, v) {
            Ok(true) => {}
            Ok(false) => return Err(parse_error(line, "duplicate edge")),
            Err(e) => return Err(parse_error(line, e.to_string())),
        }
    }
    for (line, [v, a, b]) in couplings {
        let (v, a, b) = (find_node(line, v)?, find_layer(line, a)?, find_layer(line, b)?);
        match m.add_coupling(v, a, b) {
            Ok(true) => {}
            Ok(false) => return Err(parse_error(line, "duplicate coupling")),
            Err(e) => return Err(parse_error(line, e.to_string())),
        }
    }
    Ok(m)
}

/// One `assign <contact> <layer>` line per pair, in id order.
pub fn serialize_assignment(m: &MultilayerNetwork, assignment: &EdgeAssignment) -> String {
    let mut out = String::new();
    for (v, a) in assignment.iter() {
        let _ = writeln!(out, "assign {} {}", m.node_label(v), m.layer_label(a));
    }
    out
}

/// Reads `assign <contact> <layer>` lines against the names of `m`.
pub fn parse_assignment(m: &MultilayerNetwork, text: &str) -> Result<EdgeAssignment> {
    let mut out = EdgeAssignment::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let ["assign", v, a] = tokens[..] else {
            return Err(parse_error(i + 1, "expected `assign <contact> <layer>`"));
        };
        let v = m
            .find_node(v)
            .ok_or_else(|| parse_error(i + 1, format!("unknown node {v}")))?;
        let a = m
            .find_layer(a)
            .ok_or_else(|| parse_error(i + 1, format!("unknown layer {a}")))?;
        out.insert(v, a);
    }
    Ok(out)
}

/// CSV table of experiment records, header included.
pub fn write_results(records: &[ExperimentRecord]) -> String {
    let mut out = String::new();
    out.push_str(RESULTS_HEADER);
    out.push('\n');
    for r in records {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.network, r.seed, r.evader_label, r.heuristic, r.measure, r.rank_before, r.rank_after, r.delta
        );
    }
    out
}
