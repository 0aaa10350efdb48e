use std::fs;
use std::path::Path;
use std::process::{Command, Output};

const M1: &str = "mhide-net v1
layer a
layer b
node 1 a b
node 2 a
node 3 b
edge a 1 2
edge b 1 3
coupling 1 a b
";

fn mhide(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mhide")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn write_m1(dir: &Path) -> String {
    let p = dir.join("m1.net");
    fs::write(&p, M1).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn generate_round_trips_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["generate", "--model", "ba", "--n", "200", "--k", "5", "--layers", "3", "--seed", "7"];
    let a = mhide(&args);
    let b = mhide(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let m = mhide::parse_network(&stdout(&a)).unwrap();
    assert_eq!(m.node_count(), 200);
    assert_eq!(mhide::serialize_network(&m), stdout(&a));

    let out = dir.path().join("g.net");
    let o = mhide(&[&args[..], &["--out", out.to_str().unwrap()]].concat());
    assert_eq!(code(&o), 0);
    assert_eq!(fs::read(&out).unwrap(), a.stdout);
}

#[test]
fn generate_from_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("g.toml");
    fs::write(&cfg, "model = \"er\"\nn = 30\nk = 4\nseed = 3\n").unwrap();
    let a = mhide(&["generate", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    let b = mhide(&["generate", "--model", "er", "--n", "30", "--k", "4", "--seed", "3"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn odd_ws_degree_is_a_usage_error() {
    let o = mhide(&["generate", "--model", "ws", "--n", "10", "--k", "3", "--seed", "1"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("even"));
}

#[test]
fn missing_seed_is_reported() {
    let o = mhide(&["generate", "--model", "er", "--n", "5", "--k", "2"]);
    assert_eq!(code(&o), 0);
    let err = String::from_utf8_lossy(&o.stderr);
    let seed: u64 = err.trim().strip_prefix("seed: ").unwrap().parse().unwrap();
    let again = mhide(&["generate", "--model", "er", "--n", "5", "--k", "2", "--seed", &seed.to_string()]);
    assert_eq!(again.stdout, o.stdout);
}

#[test]
fn centrality_tables() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_m1(dir.path());
    let o = mhide(&["centrality", "--in", &f, "--measure", "degree"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "node,score,rank\n1,2,1\n2,1,2\n3,1,2\n");

    let o = mhide(&["centrality", "--in", &f, "--measure", "degree", "--scope", "local"]);
    let text = stdout(&o);
    assert!(text.starts_with("layer,node,score,rank\n"));
    assert_eq!(text.lines().count(), 5);

    let o = mhide(&["centrality", "--in", &f, "--measure", "eigenvector"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn unreadable_and_malformed_inputs() {
    let dir = tempfile::tempdir().unwrap();
    let o = mhide(&["centrality", "--in", "/nonexistent/x.net", "--measure", "degree"]);
    assert_eq!(code(&o), 2);
    let bad = dir.path().join("bad.net");
    fs::write(&bad, "mhide-net v1\nlayer a\nnode 1 a\nedge a 1 1\n").unwrap();
    let o = mhide(&["centrality", "--in", bad.to_str().unwrap(), "--measure", "degree"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));
}

#[test]
fn hide_fringe_on_m1() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_m1(dir.path());
    let before = fs::read(&f).unwrap();
    let o = mhide(&["hide", "--in", &f, "--evader", "1", "--contacts", "2,3", "--heuristic", "fringe"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("assign 2 a\nassign 3 b\n"));
    assert_eq!(fs::read(&f).unwrap(), before);

    let o = mhide(&["hide", "--in", &f, "--evader", "9", "--heuristic", "fringe"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn hide_random_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let net = dir.path().join("g.net");
    let g = mhide(&["generate", "--model", "er", "--n", "40", "--k", "6", "--seed", "2", "--out", net.to_str().unwrap()]);
    assert_eq!(code(&g), 0);
    let args = ["hide", "--in", net.to_str().unwrap(), "--evader", "00", "--heuristic", "random", "--seed", "5"];
    let a = mhide(&args);
    let b = mhide(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn solve_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = write_m1(dir.path());
    let o = mhide(&["solve", "--in", &f, "--evader", "1", "--contacts", "2,3", "--problem", "global-degree", "--margin", "0"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("connected 2 of 2"));

    let o = mhide(&["solve", "--in", &f, "--evader", "1", "--contacts", "2,3", "--problem", "brute-force", "--budget", "3"]);
    assert_eq!(code(&o), 3);

    // the evader tops layer a, so no layer capacity is left
    let o = mhide(&["solve", "--in", &f, "--evader", "1", "--contacts", "2,3", "--problem", "local-degree"]);
    assert_eq!(code(&o), 3);
    assert!(stdout(&o).contains("hidden false"));

    let o = mhide(&[
        "solve", "--in", &f, "--evader", "2", "--contacts", "3", "--problem", "brute-force", "--measure",
        "local-degree", "--margins", "a=0,b=1",
    ]);
    assert_eq!(code(&o), 0);
}

#[test]
fn experiment_rows_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "experiment", "--model", "ba", "--n", "60", "--k", "3", "--repetitions", "2", "--seed", "4", "--threshold", "3",
    ];
    let a = mhide(&args);
    let b = mhide(&args);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "network,seed,evader,heuristic,measure,rank_before,rank_after,delta");
    // every (evader, repetition) contributes 4 heuristics x 5 measures
    assert_eq!((rows.len() - 1) % 20, 0);

    let cfg = dir.path().join("e.toml");
    fs::write(
        &cfg,
        "repetitions = 2\nbase_seed = 4\nthreshold = 3\n[network]\nmodel = \"ba\"\nn = 60\nk = 3\n",
    )
    .unwrap();
    let out = dir.path().join("r.csv");
    let c = mhide(&["experiment", "--config", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(code(&c), 0, "{}", String::from_utf8_lossy(&c.stderr));
    assert_eq!(fs::read(&out).unwrap(), a.stdout);

    let z = mhide(&["experiment", "--model", "ba", "--n", "60", "--k", "3", "--repetitions", "0", "--seed", "1"]);
    assert_eq!(code(&z), 1);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(code(&mhide(&["--help"])), 0);
    assert_eq!(code(&mhide(&["--version"])), 0);
    assert_eq!(code(&mhide(&["frobnicate"])), 1);
}
