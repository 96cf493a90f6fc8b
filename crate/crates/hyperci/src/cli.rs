//! Command-line front end.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use hyperci::centrality::ScoreKind;
use hyperci::dismantle::{
    compare, dismantle, l_sweep, NormMode, Protocol, StopCondition, Strategy, StrategyKind,
    Trajectory,
};
use hyperci::error::Error;
use hyperci::formats::{
    read_hyperedge_list_file, render_anc_svg, write_trajectory_csv, write_trajectory_json,
    HyperedgeListDocument,
};
use hyperci::hypergraph::Hypergraph;

#[derive(Debug)]
pub enum CliError {
    /// Bad flags or method tokens; exits with code 2.
    Usage(String),
    /// I/O, parse or computation failure; exits with code 1.
    Run(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> CliError {
        match e {
            Error::InvalidStrategy(_)
            | Error::InvalidRadius(_)
            | Error::InvalidBatchFraction(_)
            | Error::InvalidStopThreshold(_) => CliError::Usage(e.to_string()),
            other => CliError::Run(other),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Run(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "hyperci",
    version,
    about = "Hypernetwork dismantling: score, remove, track connectivity, report ANC"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print node/hyperedge counts and average degrees of a dataset
    Stats {
        /// Hyperedge-list file (one edge per line, labels comma/space separated)
        #[arg(long)]
        input: PathBuf,
    },
    /// Score all nodes with one method and print them best-first
    Rank {
        #[arg(long)]
        input: PathBuf,
        /// One of hd, hhd, ci[:L], hyperci[:L] (L defaults to 1)
        #[arg(long)]
        method: String,
    },
    /// Remove nodes in batches under a strategy and report the ANC
    Dismantle {
        #[arg(long)]
        input: PathBuf,
        /// One of hd, hda, hhd, hhda, ci[:L], hyperci[:L]
        #[arg(long)]
        method: String,
        #[command(flatten)]
        protocol: ProtocolArgs,
        /// Write the trajectory as CSV
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the trajectory as JSON
        #[arg(long)]
        json: Option<PathBuf>,
        /// Render the connectivity curve as SVG
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Run several methods under one protocol and tabulate their ANC values
    Compare {
        /// Dataset file; repeat for one table row per dataset
        #[arg(long, required = true)]
        input: Vec<PathBuf>,
        /// Comma-separated method list, e.g. hd,hhd,hyperci:1
        #[arg(long)]
        methods: String,
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Render all methods' curves (single --input only)
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Dismantle with ci or hyperci across several radii L
    SweepL {
        #[arg(long)]
        input: PathBuf,
        /// ci or hyperci
        #[arg(long)]
        method: String,
        /// Comma-separated radii, e.g. 1,2,3
        #[arg(long)]
        ls: String,
        #[command(flatten)]
        protocol: ProtocolArgs,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ProtocolArgs {
    /// Fraction of the original node count removed per batch
    #[arg(long, default_value_t = 0.01)]
    batch: f64,
    /// Stop condition: all, frac=F or sigma=T
    #[arg(long, default_value = "all")]
    stop: String,
    /// Connectivity denominator: remaining or original
    #[arg(long, default_value = "remaining")]
    norm: String,
    /// Rescore adaptive strategies after every node instead of every batch
    #[arg(long)]
    per_node: bool,
    /// Run the ci baseline adaptively
    #[arg(long)]
    adaptive_ci: bool,
}

impl ProtocolArgs {
    fn to_protocol(&self) -> Result<Protocol, CliError> {
        let stop = match self.stop.as_str() {
            "all" => StopCondition::All,
            s => {
                let parse_val = |v: &str| {
                    v.parse::<f64>()
                        .map_err(|_| CliError::Usage(format!("bad stop condition: {s}")))
                };
                if let Some(v) = s.strip_prefix("frac=") {
                    StopCondition::Fraction(parse_val(v)?)
                } else if let Some(v) = s.strip_prefix("sigma=") {
                    StopCondition::SigmaBelow(parse_val(v)?)
                } else {
                    return Err(CliError::Usage(format!(
                        "bad stop condition: {s} (expected all, frac=F or sigma=T)"
                    )));
                }
            }
        };
        let norm = match self.norm.as_str() {
            "remaining" => NormMode::Remaining,
            "original" => NormMode::Original,
            other => {
                return Err(CliError::Usage(format!(
                    "bad norm mode: {other} (expected remaining or original)"
                )))
            }
        };
        Ok(Protocol {
            batch_fraction: self.batch,
            stop,
            norm,
            per_node: self.per_node,
        })
    }

    fn strategy(&self, token: &str) -> Result<Strategy, CliError> {
        let s = Strategy::parse(token)?;
        Ok(if self.adaptive_ci && s.kind == StrategyKind::Ci {
            Strategy::ci_adaptive(s.l.unwrap_or(1))
        } else {
            s
        })
    }
}

fn load(path: &Path) -> Result<(HyperedgeListDocument, Hypergraph), CliError> {
    let doc = read_hyperedge_list_file(path)?;
    for w in &doc.warnings {
        eprintln!("warning: {}:{}: {}", path.display(), w.line, w.message);
    }
    let h = doc.to_hypergraph()?;
    Ok((doc, h))
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|source| {
        CliError::Run(Error::Io {
            path: path.display().to_string(),
            source,
        })
    })
}

fn dataset_name(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn curve(t: &Trajectory) -> Vec<(f64, f64)> {
    t.batches.iter().map(|b| (b.frac_removed, b.ratio)).collect()
}

pub fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    match cli.command {
        Command::Stats { input } => {
            let (_, h) = load(&input)?;
            let s = h.stats()?;
            println!(
                "nodes={} hyperedges={} avg_hyper_degree={:.2} avg_hyperedge_size={:.2}",
                s.node_count, s.hyperedge_count, s.avg_hyper_degree, s.avg_hyperedge_size
            );
        }
        Command::Rank { input, method } => {
            let strategy = Strategy::parse(&method)?;
            if matches!(strategy.kind, StrategyKind::Hda | StrategyKind::Hhda) {
                return Err(CliError::Usage(format!(
                    "rank takes a static method (hd, hhd, ci, hyperci), got {method}"
                )));
            }
            let (_, h) = load(&input)?;
            let scores = strategy.score(&h)?;
            for v in hyperci::centrality::rank(&scores) {
                // all four scores are integer-valued
                println!("{} {}", h.label(v), scores.scores[v] as u64);
            }
        }
        Command::Dismantle {
            input,
            method,
            protocol,
            csv,
            json,
            svg,
        } => {
            let strategy = protocol.strategy(&method)?;
            let protocol = protocol.to_protocol()?;
            let (_, h) = load(&input)?;
            let t = dismantle(&h, &strategy, &protocol)?;
            if let Some(path) = csv {
                write_file(&path, &write_trajectory_csv(&t))?;
            }
            if let Some(path) = json {
                write_file(&path, &write_trajectory_json(&t))?;
            }
            if let Some(path) = svg {
                let svg_text = render_anc_svg(&[(t.strategy.clone(), curve(&t))])?;
                write_file(&path, &svg_text)?;
            }
            println!("ANC={:.6}", t.anc);
        }
        Command::Compare {
            input,
            methods,
            protocol,
            csv,
            svg,
        } => {
            let tokens: Vec<&str> = methods.split(',').filter(|t| !t.is_empty()).collect();
            if tokens.is_empty() {
                return Err(CliError::Usage("no methods given".to_string()));
            }
            let strategies: Vec<Strategy> = tokens
                .iter()
                .map(|t| protocol.strategy(t))
                .collect::<Result<_, _>>()?;
            let descriptors: Vec<String> = strategies.iter().map(|s| s.descriptor()).collect();
            let unique: BTreeSet<&String> = descriptors.iter().collect();
            if unique.len() != descriptors.len() {
                return Err(CliError::Usage("duplicate method names".to_string()));
            }
            if svg.is_some() && input.len() != 1 {
                return Err(CliError::Usage(
                    "--svg requires exactly one --input".to_string(),
                ));
            }
            let protocol = protocol.to_protocol()?;

            let mut out = format!("dataset,{}\n", descriptors.join(","));
            let mut curves: Vec<(String, Vec<(f64, f64)>)> = Vec::new();
            for path in &input {
                let (_, h) = load(path)?;
                if svg.is_some() {
                    let mut cells = Vec::new();
                    for s in &strategies {
                        let t = dismantle(&h, s, &protocol)?;
                        cells.push(format!("{:.6}", t.anc));
                        curves.push((s.descriptor(), curve(&t)));
                    }
                    out.push_str(&format!("{},{}\n", dataset_name(path), cells.join(",")));
                } else {
                    let rows = compare(&h, &strategies, &protocol)?;
                    let cells: Vec<String> =
                        rows.iter().map(|(_, anc)| format!("{anc:.6}")).collect();
                    out.push_str(&format!("{},{}\n", dataset_name(path), cells.join(",")));
                }
            }
            if let Some(path) = svg {
                write_file(&path, &render_anc_svg(&curves)?)?;
            }
            if let Some(path) = csv {
                write_file(&path, &out)?;
            }
            print!("{out}");
        }
        Command::SweepL {
            input,
            method,
            ls,
            protocol,
            csv,
        } => {
            let kind = match method.as_str() {
                "ci" => ScoreKind::Ci,
                "hyperci" => ScoreKind::HyperCi,
                other => {
                    return Err(CliError::Usage(format!(
                        "sweep-l takes ci or hyperci, got {other}"
                    )))
                }
            };
            let radii: Vec<usize> = ls
                .split(',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| CliError::Usage(format!("bad L value: {t}")))
                })
                .collect::<Result<_, _>>()?;
            if radii.is_empty() {
                return Err(CliError::Usage("no L values given".to_string()));
            }
            if let Some(&bad) = radii.iter().find(|&&l| l < 1) {
                return Err(CliError::Usage(format!("L must be >= 1, got {bad}")));
            }
            let protocol = protocol.to_protocol()?;
            let (_, h) = load(&input)?;
            let rows = l_sweep(&h, kind, &radii, &protocol)?;
            let mut out = format!(
                "dataset,{}\n",
                radii
                    .iter()
                    .map(|l| format!("L={l}"))
                    .collect::<Vec<_>>()
                    .join(",")
            );
            out.push_str(&format!(
                "{},{}\n",
                dataset_name(&input),
                rows.iter()
                    .map(|(_, anc)| format!("{anc:.6}"))
                    .collect::<Vec<_>>()
                    .join(",")
            ));
            if let Some(path) = csv {
                write_file(&path, &out)?;
            }
            print!("{out}");
        }
    }
    Ok(())
}
