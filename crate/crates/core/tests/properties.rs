mod support;

use std::collections::BTreeSet;

use mhide::centrality::{competition_ranks, global_report, network_ranking, outranks, MeasureKind};
use mhide::generators::gen_ws;
use mhide::harness::strip_evader;
use mhide::hiding::{
    apply_assignment, apply_in_place, brute_force_max_hiding, greedy_local_degree, is_hidden_global, revert_in_place,
    solve_global_degree_max, GlobalHidingInstance, LocalHidingInstance, DEFAULT_STATE_BUDGET,
};
use mhide::{
    gen_multilayer, parse_network, serialize_network, CentralityMeasure, EdgeAssignment, GeneratorConfig, Heuristic,
    HidingProblem, LayerId, Model, MultilayerNetwork, NodeId,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use support::{random_contacts, random_network};

fn instance(seed: u64, max_n: usize, max_l: usize) -> (MultilayerNetwork, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(2..=max_n);
    let l = rng.random_range(1..=max_l);
    let p = rng.random_range(0.1..0.7);
    let m = random_network(&mut rng, n, l, 0.6, p, 0.5);
    (m, rng)
}

/// Picks one shared layer per connectable contact, uniformly.
fn random_assignment(problem: &HidingProblem<'_>, rng: &mut ChaCha8Rng) -> EdgeAssignment {
    let mut a = EdgeAssignment::new();
    for v in problem.connectable() {
        let shared = problem.shared_layers(v);
        a.insert(v, shared[rng.random_range(0..shared.len())]);
    }
    a
}

fn global_degrees(m: &MultilayerNetwork) -> Vec<usize> {
    m.nodes().map(|v| m.global_degree(v).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn apply_then_revert_restores_network(seed in any::<u64>()) {
        let (m, mut rng) = instance(seed, 10, 3);
        let (evader, contacts) = random_contacts(&mut rng, &m, 6);
        let problem = HidingProblem::new(&m, evader, contacts).unwrap();
        let a = random_assignment(&problem, &mut rng);
        let mut work = m.clone();
        let added = apply_in_place(&mut work, evader, &a).unwrap();
        prop_assert!(work.audit().is_ok());
        prop_assert_eq!(&work, &apply_assignment(&m, evader, &a).unwrap());
        revert_in_place(&mut work, evader, &added);
        prop_assert_eq!(work, m);
    }

    #[test]
    fn audit_holds_after_any_mutation_sequence(
        seed in any::<u64>(),
        ops in prop::collection::vec((0u8..4, 0u32..8, 0u32..8, 0u32..3, 0u32..3), 0..60),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = random_network(&mut rng, 8, 3, 0.6, 0.3, 0.5);
        for (op, u, v, a, b) in ops {
            let (u, v, a, b) = (NodeId(u), NodeId(v), LayerId(a), LayerId(b));
            let before = m.clone();
            let r = match op {
                0 => m.add_edge(a, u, v),
                1 => m.remove_edge(a, u, v),
                2 => m.add_coupling(u, a, b),
                _ => m.remove_coupling(u, a, b),
            };
            if r.is_err() {
                prop_assert_eq!(&m, &before);
            }
            prop_assert!(m.audit().is_ok());
        }
        for v in m.nodes() {
            let mut union = BTreeSet::new();
            for a in m.layers_of(v) {
                for &w in m.layer_neighbors(v, a).unwrap() {
                    prop_assert!(m.layer_neighbors(w, a).unwrap().contains(&v));
                    union.insert(w);
                }
            }
            prop_assert_eq!(m.neighbors(v).unwrap(), union.into_iter().collect::<Vec<_>>());
        }
    }

    #[test]
    fn global_degree_ignores_layer_choice(seed in any::<u64>()) {
        let (m, mut rng) = instance(seed, 10, 3);
        let (evader, contacts) = random_contacts(&mut rng, &m, 6);
        let problem = HidingProblem::new(&m, evader, contacts).unwrap();
        let a1 = random_assignment(&problem, &mut rng);
        let a2 = random_assignment(&problem, &mut rng);
        let m1 = apply_assignment(&m, evader, &a1).unwrap();
        let m2 = apply_assignment(&m, evader, &a2).unwrap();
        prop_assert_eq!(global_degrees(&m1), global_degrees(&m2));
        for d in 0..4 {
            prop_assert_eq!(
                is_hidden_global(&m1, evader, MeasureKind::Degree, d),
                is_hidden_global(&m2, evader, MeasureKind::Degree, d)
            );
        }
    }

    #[test]
    fn heuristics_connect_each_connectable_contact_once(seed in any::<u64>()) {
        let (m, mut rng) = instance(seed, 12, 3);
        let (evader, contacts) = random_contacts(&mut rng, &m, 8);
        let problem = HidingProblem::new(&m, evader, contacts).unwrap();
        let connectable: BTreeSet<NodeId> = problem.connectable().into_iter().collect();
        for h in Heuristic::ALL {
            let a = h.run_seeded(&problem, seed);
            prop_assert!(a.validate(&problem).is_ok());
            prop_assert_eq!(a.len(), connectable.len());
            prop_assert_eq!(&a.contacts(), &connectable);
        }
    }

    #[test]
    fn all_in_one_uses_few_layers_and_starts_greedily(seed in any::<u64>()) {
        let (m, mut rng) = instance(seed, 12, 4);
        let (evader, contacts) = random_contacts(&mut rng, &m, 8);
        let problem = HidingProblem::new(&m, evader, contacts).unwrap();
        let a = Heuristic::AllInOne.run_seeded(&problem, 0);
        let used: BTreeSet<LayerId> = a.iter().map(|(_, l)| l).collect();
        prop_assert!(used.len() <= a.len());
        // the fullest layer of the output is the first pick: it holds every
        // connectable contact of the best layer
        let best = m
            .layers()
            .map(|l| problem.connectable().iter().filter(|&&v| problem.shared_layers(v).contains(&l)).count())
            .max()
            .unwrap_or(0);
        let fullest = used.iter().map(|&l| a.in_layer(l).count()).max().unwrap_or(0);
        prop_assert_eq!(fullest, best);
    }

    #[test]
    fn ranks_are_scale_invariant(scores in prop::collection::vec(0u32..40, 1..30), scale in 0.01f64..100.0) {
        let base: Vec<f64> = scores.iter().map(|&s| f64::from(s) / 8.0).collect();
        let scaled: Vec<f64> = base.iter().map(|s| s * scale).collect();
        prop_assert_eq!(competition_ranks(&base), competition_ranks(&scaled));
    }

    #[test]
    fn reports_rank_coherently(seed in any::<u64>()) {
        let (m, _) = instance(seed, 12, 3);
        for measure in CentralityMeasure::EXPERIMENT {
            let r = network_ranking(&m, measure);
            for (v, sv, rv) in r.iter() {
                let above = r.iter().filter(|&(_, sw, _)| outranks(sw, sv)).count();
                prop_assert_eq!(rv as usize, above + 1, "{} {}", measure, v);
            }
        }
        let g = global_report(&m, MeasureKind::Closeness);
        for (_, sv, rv) in g.iter() {
            for (_, sw, rw) in g.iter() {
                if outranks(sv, sw) {
                    prop_assert!(rv < rw);
                }
            }
        }
    }

    #[test]
    fn global_solver_matches_brute_force(seed in any::<u64>()) {
        let (m, mut rng) = instance(seed, 9, 3);
        let (evader, contacts) = random_contacts(&mut rng, &m, 5);
        let d = rng.random_range(0..=m.node_count());
        let problem = HidingProblem::new(&m, evader, contacts).unwrap();
        let inst = GlobalHidingInstance::new(problem.clone(), MeasureKind::Degree, d);
        let exact = solve_global_degree_max(&inst).unwrap();
        let brute = brute_force_max_hiding(&problem, &inst.check(), DEFAULT_STATE_BUDGET).unwrap();
        prop_assert_eq!(exact.hidden, brute.hidden);
        if brute.hidden {
            prop_assert_eq!(exact.connected(), brute.connected());
        }
    }

    #[test]
    fn greedy_is_within_factor_two(seed in any::<u64>()) {
        let (m, mut rng) = instance(seed, 9, 3);
        let (evader, contacts) = random_contacts(&mut rng, &m, 5);
        let margins: Vec<usize> = (0..m.layer_count()).map(|_| rng.random_range(0..=3)).collect();
        let problem = HidingProblem::new(&m, evader, contacts).unwrap();
        let inst = LocalHidingInstance::new(problem.clone(), MeasureKind::Degree, margins).unwrap();
        let greedy = greedy_local_degree(&inst).unwrap();
        let brute = brute_force_max_hiding(&problem, &inst.check(), DEFAULT_STATE_BUDGET).unwrap();
        prop_assert_eq!(greedy.hidden, brute.hidden);
        if brute.hidden {
            prop_assert!(brute.connected() <= 2 * greedy.connected());
            prop_assert!(greedy.connected() <= brute.connected());
        }
    }

    #[test]
    fn protocol_conserves_edges(seed in any::<u64>()) {
        let (m, mut rng) = instance(seed, 12, 3);
        let evader = NodeId(rng.random_range(0..m.node_count()) as u32);
        let (reduced, contacts, removed) = strip_evader(&m, evader).unwrap();
        prop_assert_eq!(reduced.global_degree(evader).unwrap(), 0);
        let mut expected: BTreeSet<_> = m.edges().into_iter().collect();
        for &(a, v) in &removed {
            let e = if evader < v { (a, evader, v) } else { (a, v, evader) };
            prop_assert!(expected.remove(&e));
        }
        prop_assert_eq!(reduced.edges().into_iter().collect::<BTreeSet<_>>(), expected.clone());
        let problem = HidingProblem::new(&reduced, evader, contacts).unwrap();
        for h in Heuristic::ALL {
            let a = h.run_seeded(&problem, seed);
            let after = apply_assignment(&reduced, evader, &a).unwrap();
            let mut want = expected.clone();
            for (v, l) in a.iter() {
                want.insert(if evader < v { (l, evader, v) } else { (l, v, evader) });
            }
            prop_assert_eq!(after.edges().into_iter().collect::<BTreeSet<_>>(), want);
        }
    }

    #[test]
    fn generated_networks_are_reproducible_and_round_trip(
        seed in any::<u64>(),
        model in prop_oneof![Just(Model::Er), Just(Model::Ws), Just(Model::Ba)],
        n in 5usize..40,
    ) {
        let mut cfg = GeneratorConfig::new(model, n, 4, seed);
        cfg.layers = 1 + (seed % 3) as usize;
        let a = gen_multilayer(&cfg).unwrap();
        prop_assert!(a.audit().is_ok());
        prop_assert_eq!(&a, &gen_multilayer(&cfg).unwrap());
        let text = serialize_network(&a);
        prop_assert_eq!(&parse_network(&text).unwrap(), &a);
    }

    #[test]
    fn ws_keeps_its_edge_count(seed in any::<u64>(), half in 1usize..5, n in 10usize..60) {
        let k = 2 * half;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges = gen_ws(n, k, &mut rng).unwrap();
        prop_assert_eq!(edges.len(), n * k / 2);
        let distinct: BTreeSet<_> = edges.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
        prop_assert_eq!(distinct.len(), edges.len());
    }
}

#[test]
fn mean_occurrences_follow_the_rescue_rule() {
    // each of the 3 layers is kept with probability 1/2; a node drawing none
    // is placed in exactly one, so E = 3/2 + 1/8 = 13/8
    let expected = 13.0 / 8.0;
    let mut total = 0usize;
    for seed in 0..100 {
        let cfg = GeneratorConfig::new(Model::Er, 500, 4, seed);
        total += gen_multilayer(&cfg).unwrap().occurrence_count();
    }
    let mean = total as f64 / (100.0 * 500.0);
    assert!((mean - expected).abs() < 0.02, "mean {mean}");
}
