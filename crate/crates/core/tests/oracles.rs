mod support;

use mhide::centrality::{global_scores_exact, global_report, layer_report, MeasureKind};
use mhide::paths::{
    brandes_sweep_layer, multilayer_pair_paths, single_source_distances_layer, single_source_distances_multilayer, Distance,
};
use mhide::{LayerId, MultilayerNetwork, NodeId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::{oracle_betweenness, oracle_closeness, random_network, to_f64, OccurrenceGraph};

fn single_layer(n: usize, edges: &[(u32, u32)]) -> MultilayerNetwork {
    let mut m = MultilayerNetwork::with_size(n, 1, (0..n).map(|v| (NodeId(v as u32), LayerId(0)))).unwrap();
    for &(u, v) in edges {
        m.add_edge(LayerId(0), NodeId(u), NodeId(v)).unwrap();
    }
    m
}

#[test]
fn path_and_cycle_pair_counts() {
    let path = single_layer(3, &[(0, 1), (1, 2)]);
    let pp = multilayer_pair_paths(&path, NodeId(0), NodeId(2)).unwrap();
    assert_eq!(pp.count, 1);
    assert_eq!(pp.incidence_of(NodeId(1)), 1);

    let cycle = single_layer(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    let pp = multilayer_pair_paths(&cycle, NodeId(0), NodeId(2)).unwrap();
    assert_eq!(pp.count, 2);
    assert_eq!(pp.incidence_of(NodeId(1)), 1);
    assert_eq!(pp.incidence_of(NodeId(3)), 1);
}

#[test]
fn global_scores_match_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.random_range(1..=9);
        let l = rng.random_range(1..=3);
        let m = random_network(&mut rng, n, l, 0.5, 0.35, 0.5);
        let close = oracle_closeness(&m);
        let betw = oracle_betweenness(&m);
        assert_eq!(global_scores_exact(&m, MeasureKind::Closeness), close);
        assert_eq!(global_scores_exact(&m, MeasureKind::Betweenness), betw);
        let fc = global_report(&m, MeasureKind::Closeness);
        let fb = global_report(&m, MeasureKind::Betweenness);
        for v in m.nodes() {
            assert!((fc.score(v).unwrap() - to_f64(&close[v.index()])).abs() < 1e-9);
            assert!((fb.score(v).unwrap() - to_f64(&betw[v.index()])).abs() < 1e-9);
        }
    }
}

#[test]
fn pair_paths_match_enumeration_on_small_networks() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    while checked < 150 {
        let n = rng.random_range(2..=7);
        let l = rng.random_range(1..=3);
        let m = random_network(&mut rng, n, l, 0.5, 0.4, 0.5);
        if m.occurrence_count() > 10 {
            continue;
        }
        checked += 1;
        let g = OccurrenceGraph::build(&m);
        for w in 0..n {
            for u in 0..n {
                if w == u {
                    continue;
                }
                let paths = g.shortest_paths(w, u);
                let pp = multilayer_pair_paths(&m, NodeId(w as u32), NodeId(u as u32)).unwrap();
                assert_eq!(pp.count, paths.len() as u128);
                for v in 0..n {
                    if v == w || v == u {
                        continue;
                    }
                    let hits = paths.iter().flatten().filter(|&&x| g.owner[x] == v).count();
                    assert_eq!(pp.incidence_of(NodeId(v as u32)), hits as u128);
                }
            }
        }
    }
}

#[test]
fn brandes_sweeps_sum_to_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..100 {
        let n = rng.random_range(1..=8);
        let p = rng.random_range(0.1..0.9);
        let m = random_network(&mut rng, n, 1, 1.0, p, 0.0);
        let g = m.layer_graph(LayerId(0)).unwrap();
        let mut total = vec![0.0; n];
        for v in m.nodes() {
            for (u, x) in brandes_sweep_layer(&g, v).unwrap() {
                total[u.index()] += x;
            }
        }
        let exact = oracle_betweenness(&m);
        for v in 0..n {
            assert!((total[v] / 2.0 - to_f64(&exact[v])).abs() < 1e-9);
        }
    }
}

#[test]
fn distances_match_floyd_warshall_and_never_exceed_layer_distances() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..80 {
        let n = rng.random_range(1..=10);
        let l = rng.random_range(1..=3);
        let m = random_network(&mut rng, n, l, 0.5, 0.3, 0.5);
        let g = OccurrenceGraph::build(&m);
        for s in m.nodes() {
            let multi = single_source_distances_multilayer(&m, s).unwrap();
            for u in m.nodes() {
                let want = match g.node_distance(s.index(), u.index()) {
                    Some(d) => Distance::Finite(d as u32),
                    None => Distance::Unreachable,
                };
                assert_eq!(multi[u.index()], want);
            }
            for a in m.layers_of(s) {
                let lg = m.layer_graph(a).unwrap();
                for (u, d) in single_source_distances_layer(&lg, s).unwrap() {
                    assert!(multi[u.index()] <= d);
                }
            }
        }
    }
}

#[test]
fn single_layer_global_equals_local() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..30 {
        let n = rng.random_range(1..=30);
        let p = rng.random_range(0.02..0.4);
        let m = random_network(&mut rng, n, 1, 1.0, p, 0.0);
        for kind in [MeasureKind::Degree, MeasureKind::Closeness, MeasureKind::Betweenness] {
            let global = global_report(&m, kind);
            let local = layer_report(&m, kind, LayerId(0)).unwrap();
            assert_eq!(global.scores(), local.scores());
            assert_eq!(global.ranks(), local.ranks());
        }
    }
}
