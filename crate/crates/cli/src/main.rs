use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mhide::centrality::{self, CentralityMeasure, MeasureKind, Scope};
use mhide::harness::{self, ExperimentConfig, NetworkSource};
use mhide::hiding::{
    self, brute_force_max_hiding, greedy_local_degree, solve_global_degree_max, GlobalHidingInstance, HidingCheck,
    HidingProblem, LocalHidingInstance, SolverOutcome,
};
use mhide::io;
use mhide::{EdgeAssignment, Error, GeneratorConfig, Heuristic, Model, MultilayerNetwork, NodeId};

#[derive(Parser)]
#[command(name = "mhide", version, about = "Centrality analysis and hiding strategies for multilayer networks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random multilayer network
    Generate(GenerateArgs),
    /// Score and rank nodes
    Centrality(CentralityArgs),
    /// List nodes ranked near the top by any experiment measure
    Evaders(EvadersArgs),
    /// Connect an evader to its contacts with a heuristic
    Hide(HideArgs),
    /// Run an exact or approximate hiding solver
    Solve(SolveArgs),
    /// Run the hiding experiment and write a CSV of ranking changes
    Experiment(ExperimentArgs),
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
}

#[derive(Args)]
struct Output {
    /// Write to this file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Tables default to csv, solver listings to text
    #[arg(long, value_enum)]
    format: Option<Format>,
}

impl Output {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

#[derive(Args)]
struct GeneratorFlags {
    #[arg(long, value_parser = parse_model)]
    model: Option<Model>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value_t = 3)]
    layers: usize,
    /// Probability that a node occurs in a layer
    #[arg(long, default_value_t = 0.5)]
    p_occ: f64,
    /// Probability that two occurrences of a node are coupled
    #[arg(long, default_value_t = 0.5)]
    p_coupling: f64,
}

impl GeneratorFlags {
    fn config(&self, seed: u64) -> Result<GeneratorConfig, Failure> {
        let (Some(model), Some(n), Some(k)) = (self.model, self.n, self.k) else {
            return Err(Failure::Usage("--model, --n and --k are required".into()));
        };
        Ok(GeneratorConfig {
            layers: self.layers,
            occurrence_prob: self.p_occ,
            coupling_prob: self.p_coupling,
            ..GeneratorConfig::new(model, n, k, seed)
        })
    }
}

#[derive(Args)]
struct GenerateArgs {
    #[command(flatten)]
    generator: GeneratorFlags,
    /// TOML file with generator settings; flags are ignored when given
    #[arg(long, conflicts_with_all = ["model", "n", "k"])]
    config: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct CentralityArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, value_parser = parse_kind)]
    measure: MeasureKind,
    #[arg(long, value_parser = parse_scope, default_value = "global")]
    scope: Scope,
    /// For local measures, print the aggregated ranking instead of one table per layer
    #[arg(long)]
    aggregate: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct EvadersArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = harness::DEFAULT_THRESHOLD)]
    threshold: u32,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct InstanceArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    evader: String,
    /// Comma-separated contact names. Without it the evader's neighbours are
    /// used and its edges to them are removed first.
    #[arg(long, value_delimiter = ',')]
    contacts: Option<Vec<String>>,
}

#[derive(Args)]
struct HideArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_parser = parse_heuristic)]
    heuristic: Heuristic,
    /// Safety margin used for the reported verdicts
    #[arg(long, default_value_t = 1)]
    margin: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    output: Output,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Problem {
    GlobalDegree,
    LocalDegree,
    BruteForce,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    #[arg(long, value_enum)]
    problem: Problem,
    /// Measure checked by the brute-force solver
    #[arg(long, value_parser = parse_measure, default_value = "global-degree")]
    measure: CentralityMeasure,
    /// Safety margin; for local problems it applies to every layer
    #[arg(long, default_value_t = 1)]
    margin: usize,
    /// Per-layer margins as `layer=d` pairs, overriding --margin
    #[arg(long, value_delimiter = ',')]
    margins: Option<Vec<String>>,
    /// Largest number of states the brute-force solver may visit
    #[arg(long, default_value_t = hiding::DEFAULT_STATE_BUDGET)]
    budget: u128,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct ExperimentArgs {
    /// TOML experiment configuration
    #[arg(long, conflicts_with_all = ["model", "n", "k", "input"])]
    config: Option<PathBuf>,
    /// Use this network file in every repetition
    #[arg(long = "in", conflicts_with_all = ["model", "n", "k"])]
    input: Option<PathBuf>,
    #[command(flatten)]
    generator: GeneratorFlags,
    #[arg(long)]
    repetitions: Option<u64>,
    #[arg(long)]
    threshold: Option<u32>,
    #[arg(long, value_delimiter = ',', value_parser = parse_heuristic)]
    heuristics: Option<Vec<Heuristic>>,
    #[arg(long, value_delimiter = ',', value_parser = parse_measure)]
    measures: Option<Vec<CentralityMeasure>>,
    #[arg(long)]
    label: Option<String>,
    /// Base seed; repetition r uses seed + r
    #[arg(long)]
    seed: Option<u64>,
    /// Also print mean deltas per heuristic and measure to standard error
    #[arg(long)]
    summary: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_model(s: &str) -> Result<Model, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_kind(s: &str) -> Result<MeasureKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_scope(s: &str) -> Result<Scope, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_measure(s: &str) -> Result<CentralityMeasure, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_heuristic(s: &str) -> Result<Heuristic, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure classes and their exit codes.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Infeasible(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Self::Usage(_) => 1,
            Self::Input(_) => 2,
            Self::Infeasible(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Self::Usage(m) | Self::Input(m) | Self::Infeasible(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::InvalidParameter(_) => Self::Usage(msg),
            Error::BudgetExceeded { .. } => Self::Infeasible(msg),
            _ => Self::Input(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("mhide: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Generate(a) => generate(a),
        Command::Centrality(a) => centrality_cmd(a),
        Command::Evaders(a) => evaders(a),
        Command::Hide(a) => hide(a),
        Command::Solve(a) => solve(a),
        Command::Experiment(a) => experiment(a),
    }
}

fn seed_or_entropy(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(|| {
        let s = rand::random::<u64>();
        eprintln!("seed: {s}");
        s
    })
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<MultilayerNetwork, Failure> {
    io::parse_network(&read_text(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn generate(a: GenerateArgs) -> Result<(), Failure> {
    let config = match &a.config {
        Some(path) => {
            let mut c: GeneratorConfig =
                toml::from_str(&read_text(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            if let Some(s) = a.seed {
                c.seed = s;
            }
            c
        }
        None => a.generator.config(seed_or_entropy(a.seed))?,
    };
    let m = mhide::gen_multilayer(&config)?;
    emit(a.output.out.as_deref(), &io::serialize_network(&m))
}

fn table_row(out: &mut String, format: Format, cells: &[String]) {
    let sep = if format == Format::Csv { "," } else { "\t" };
    out.push_str(&cells.join(sep));
    out.push('\n');
}

fn centrality_cmd(a: CentralityArgs) -> Result<(), Failure> {
    let m = load(&a.input)?;
    let measure = CentralityMeasure::new(a.measure, a.scope);
    let reports = if a.scope == Scope::Local && a.aggregate {
        vec![centrality::aggregate_local_ranking(&m, a.measure)]
    } else {
        centrality::full_report(&m, measure)
    };
    let per_layer = a.scope == Scope::Local && !a.aggregate;
    let format = a.output.format_or(Format::Csv);
    let mut out = String::new();
    let header: &[&str] = if per_layer { &["layer", "node", "score", "rank"] } else { &["node", "score", "rank"] };
    table_row(&mut out, format, &header.iter().map(|s| s.to_string()).collect::<Vec<_>>());
    for report in &reports {
        for (v, score, rank) in report.iter() {
            let mut cells = Vec::new();
            if let centrality::ReportScope::Layer(l) = report.scope() {
                cells.push(m.layer_label(l).to_string());
            }
            cells.push(m.node_label(v).to_string());
            cells.push(format!("{score}"));
            cells.push(rank.to_string());
            table_row(&mut out, format, &cells);
        }
    }
    emit(a.output.out.as_deref(), &out)
}

fn evaders(a: EvadersArgs) -> Result<(), Failure> {
    if a.threshold == 0 {
        return Err(Failure::Usage("--threshold must be at least 1".into()));
    }
    let m = load(&a.input)?;
    let chosen = harness::select_evaders(&m, a.threshold);
    let format = a.output.format_or(Format::Csv);
    let rankings: Vec<_> = CentralityMeasure::EXPERIMENT
        .iter()
        .map(|&c| (c, centrality::network_ranking(&m, c)))
        .collect();
    let mut out = String::new();
    let mut header = vec!["node".to_string()];
    header.extend(rankings.iter().map(|(c, _)| c.name().to_string()));
    table_row(&mut out, format, &header);
    for v in chosen {
        let mut cells = vec![m.node_label(v).to_string()];
        cells.extend(rankings.iter().map(|(_, r)| r.rank(v).unwrap().to_string()));
        table_row(&mut out, format, &cells);
    }
    emit(a.output.out.as_deref(), &out)
}

/// The network the evader works on, with its evader and contacts.
fn instance(a: &InstanceArgs) -> Result<(MultilayerNetwork, NodeId, Vec<NodeId>), Failure> {
    let m = load(&a.input)?;
    let evader = m
        .find_node(&a.evader)
        .ok_or_else(|| Failure::Input(format!("evader {} is not in {}", a.evader, a.input.display())))?;
    match &a.contacts {
        Some(names) => {
            let mut contacts = Vec::new();
            for name in names {
                let v = m
                    .find_node(name)
                    .ok_or_else(|| Failure::Input(format!("contact {name} is not in {}", a.input.display())))?;
                contacts.push(v);
            }
            Ok((m, evader, contacts))
        }
        None => {
            let (reduced, contacts, _) = harness::strip_evader(&m, evader)?;
            Ok((reduced, evader, contacts))
        }
    }
}

fn write_assignment(out: &mut String, m: &MultilayerNetwork, format: Format, assignment: &EdgeAssignment) {
    match format {
        Format::Text => out.push_str(&io::serialize_assignment(m, assignment)),
        Format::Csv => {
            out.push_str("contact,layer\n");
            for (v, l) in assignment.iter() {
                let _ = writeln!(out, "{},{}", m.node_label(v), m.layer_label(l));
            }
        }
    }
}

fn hide(a: HideArgs) -> Result<(), Failure> {
    let (m, evader, contacts) = instance(&a.instance)?;
    let problem = HidingProblem::new(&m, evader, contacts)?;
    let seed = if a.heuristic == Heuristic::Random { seed_or_entropy(a.seed) } else { a.seed.unwrap_or(0) };
    let assignment = a.heuristic.run_seeded(&problem, seed);
    let after = hiding::apply_assignment(&m, evader, &assignment)?;

    let format = a.output.format_or(Format::Text);
    let mut out = String::new();
    write_assignment(&mut out, &m, format, &assignment);
    if format == Format::Text {
        let _ = writeln!(out, "connected {} of {}", assignment.contacts().len(), problem.contacts().len());
        for measure in CentralityMeasure::EXPERIMENT {
            let hidden = match measure.scope {
                Scope::Global => hiding::is_hidden_global(&after, evader, measure.kind, a.margin),
                Scope::Local => {
                    let margins = vec![a.margin; after.layer_count()];
                    hiding::is_hidden_local(&after, evader, measure.kind, &margins).all
                }
            };
            let rank = centrality::network_ranking(&after, measure).rank(evader).unwrap();
            let _ = writeln!(out, "hidden {measure} {hidden} rank {rank}");
        }
    }
    emit(a.output.out.as_deref(), &out)
}

fn margins(m: &MultilayerNetwork, a: &SolveArgs) -> Result<Vec<usize>, Failure> {
    let mut margins = vec![a.margin; m.layer_count()];
    if let Some(pairs) = &a.margins {
        let given: BTreeMap<&str, &str> = pairs
            .iter()
            .map(|p| p.split_once('=').ok_or_else(|| Failure::Usage(format!("margin {p:?} is not layer=d"))))
            .collect::<Result<_, _>>()?;
        for (layer, d) in given {
            let l = m.find_layer(layer).ok_or_else(|| Failure::Input(format!("unknown layer {layer}")))?;
            margins[l.index()] = d.parse().map_err(|_| Failure::Usage(format!("margin {d:?} is not a number")))?;
        }
    }
    Ok(margins)
}

fn solve(a: SolveArgs) -> Result<(), Failure> {
    let (m, evader, contacts) = instance(&a.instance)?;
    let problem = HidingProblem::new(&m, evader, contacts)?;
    let margins = margins(&m, &a)?;
    let outcome: SolverOutcome = match a.problem {
        Problem::GlobalDegree => {
            solve_global_degree_max(&GlobalHidingInstance::new(problem.clone(), MeasureKind::Degree, a.margin))?
        }
        Problem::LocalDegree => {
            greedy_local_degree(&LocalHidingInstance::new(problem.clone(), MeasureKind::Degree, margins)?)?
        }
        Problem::BruteForce => {
            let check = match a.measure.scope {
                Scope::Global => HidingCheck::Global { kind: a.measure.kind, margin: a.margin },
                Scope::Local => HidingCheck::Local { kind: a.measure.kind, margins },
            };
            brute_force_max_hiding(&problem, &check, a.budget)?
        }
    };

    let format = a.output.format_or(Format::Text);
    let mut out = String::new();
    write_assignment(&mut out, &m, format, &outcome.assignment);
    if format == Format::Text {
        let _ = writeln!(out, "connected {} of {}", outcome.connected(), problem.contacts().len());
        let _ = writeln!(out, "hidden {}", outcome.hidden);
        for (l, ok) in &outcome.layer_hidden {
            let _ = writeln!(out, "layer {} {ok}", m.layer_label(*l));
        }
    }
    emit(a.output.out.as_deref(), &out)?;
    if outcome.hidden {
        Ok(())
    } else {
        Err(Failure::Infeasible("no assignment keeps the evader hidden".into()))
    }
}

fn experiment(a: ExperimentArgs) -> Result<(), Failure> {
    let mut config = match (&a.config, &a.input) {
        (Some(path), _) => {
            toml::from_str::<ExperimentConfig>(&read_text(path)?)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        }
        (None, Some(file)) => ExperimentConfig::new(NetworkSource::File { file: file.clone() }),
        (None, None) => ExperimentConfig::new(NetworkSource::Generate(a.generator.config(0)?)),
    };
    if let Some(r) = a.repetitions {
        config.repetitions = r;
    }
    if let Some(t) = a.threshold {
        config.threshold = t;
    }
    if let Some(h) = a.heuristics {
        config.heuristics = h;
    }
    if let Some(ms) = a.measures {
        config.measures = ms;
    }
    if a.label.is_some() {
        config.label = a.label;
    }
    if a.seed.is_some() || a.config.is_none() {
        config.base_seed = seed_or_entropy(a.seed);
    }
    let records = harness::run_experiment(&config)?;
    if a.summary {
        for s in harness::summarize(&records) {
            eprintln!("{} {} trials {} mean delta {:.3}", s.heuristic, s.measure, s.trials, s.mean_delta);
        }
    }
    emit(a.out.as_deref(), &io::write_results(&records))
}
