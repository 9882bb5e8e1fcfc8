use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use latgb_core::canonical::lattice_id;
use latgb_core::enumerate::{class_counts, enumerate_lattices, Strategy};
use latgb_core::explorer::{
    quadratic_conjecture_scan, record_summary, scan_orders, squarefree_conjecture_scan, write_report,
    ExplorerError, ScanRecord,
};
use latgb_core::io::{lattice_to_json, parse_lattice};
use latgb_core::toric::toric_report;
use latgb_core::{
    catalog, lattice_ideal_report, planar_embedding, rank_revlex, CoverPolicy, Lattice, MonomialOrder,
    OrderError, OrderFamily, SweepMode,
};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "latgb", version, about = "Binomial ideals of finite lattices")]
struct Cli {
    /// Pretty-print JSON output.
    #[arg(long, global = true)]
    pretty: bool,
    /// Drop implied covers with a warning instead of rejecting the file.
    #[arg(long, global = true)]
    normalize: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice properties: purity, ranks, modularity, distributivity, planarity.
    Check {
        /// Lattice file path or catalog name.
        source: String,
    },
    /// Reduced Gröbner basis and initial ideal of I_L under one order.
    Gb {
        source: String,
        /// `family:v1,...` with variables listed from largest to smallest.
        #[arg(long, conflicts_with = "rank_order", required_unless_present = "rank_order")]
        order: Option<String>,
        /// Rank reverse lexicographic order (pure lattices only).
        #[arg(long)]
        rank_order: bool,
        /// Tiebreak within ranks for --rank-order, largest first.
        #[arg(long, requires = "rank_order", value_delimiter = ',')]
        tiebreak: Vec<String>,
    },
    /// Sweep monomial orders for one lattice.
    Scan {
        source: String,
        #[command(flatten)]
        sweep: SweepArgs,
        /// Exit 1 when some record lacks this property.
        #[arg(long)]
        expect: Option<Expectation>,
        /// Write JSON lines here instead of stdout.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Bipartite graph and even cycles of a planar distributive lattice.
    Toric { source: String },
    /// Print a catalog lattice as a lattice file.
    Catalog { name: String },
    /// Enumerate small lattices and run the conjecture scans.
    Explore {
        task: ExploreTask,
        #[arg(long, default_value_t = 6)]
        max_elems: usize,
        #[command(flatten)]
        sweep: SweepArgs,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SweepArgs {
    /// Comma-separated order families.
    #[arg(long, value_delimiter = ',', default_value = "lex,grlex,grevlex")]
    families: Vec<OrderFamily>,
    /// Every permutation of the variables.
    #[arg(long, conflicts_with = "samples")]
    all_perms: bool,
    /// Allow --all-perms above eight variables.
    #[arg(long, requires = "all_perms")]
    force: bool,
    /// Number of seeded random orders.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SweepArgs {
    fn mode(&self) -> SweepMode {
        if self.all_perms {
            SweepMode::AllPermutations { force: self.force }
        } else if let Some(count) = self.samples {
            SweepMode::Sample {
                count,
                seed: self.seed,
            }
        } else {
            SweepMode::Default { seed: self.seed }
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Expectation {
    Squarefree,
    Quadratic,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExploreTask {
    Enumerate,
    Squarefree,
    Quadratic,
}

enum Failure {
    Violation,
    Input(anyhow::Error),
    Budget(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<ExplorerError> for Failure {
    fn from(e: ExplorerError) -> Self {
        if e.is_budget() {
            Failure::Budget(e.into())
        } else {
            Failure::Input(e.into())
        }
    }
}

impl From<OrderError> for Failure {
    fn from(e: OrderError) -> Self {
        ExplorerError::from(e).into()
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Violation) => ExitCode::from(1),
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(e)) => {
            eprintln!("refused: {e:#}");
            ExitCode::from(3)
        }
    }
}

fn policy(cli: &Cli) -> CoverPolicy {
    if cli.normalize {
        CoverPolicy::Normalize
    } else {
        CoverPolicy::Strict
    }
}

/// A path to a lattice file when one exists, otherwise a catalog name.
fn load(source: &str, policy: CoverPolicy) -> anyhow::Result<Lattice> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {source}"))?;
        parse_lattice(&text, policy).with_context(|| format!("parsing {source}"))
    } else {
        catalog(source).with_context(|| format!("{source} is neither a file nor a catalog lattice"))
    }
}

fn emit(cli: &Cli, value: &Value) -> anyhow::Result<()> {
    let text = if cli.pretty {
        serde_json::to_string_pretty(value)?
    } else {
        serde_json::to_string(value)?
    };
    println!("{text}");
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Check { source } => {
            let l = load(source, policy(cli))?;
            emit(cli, &check_report(&l))?;
        }
        Command::Gb {
            source,
            order,
            rank_order,
            tiebreak,
        } => {
            let l = load(source, policy(cli))?;
            let order = if *rank_order {
                rank_revlex(&l, tiebreak).map_err(anyhow::Error::from)?
            } else {
                let spec = order.as_deref().expect("clap requires --order");
                MonomialOrder::parse(spec, l.names()).map_err(anyhow::Error::from)?
            };
            let report = lattice_ideal_report(&l, &order).render(l.names());
            emit(cli, &serde_json::to_value(report).map_err(anyhow::Error::from)?)?;
        }
        Command::Scan {
            source,
            sweep,
            expect,
            report,
        } => {
            let l = load(source, policy(cli))?;
            let records = scan_orders(&l, &sweep.families, sweep.mode())?;
            let summary = record_summary(&records);
            write_records(cli, report.as_deref(), &records, summary)?;
            let ok = |r: &ScanRecord| match expect {
                None => true,
                Some(Expectation::Squarefree) => r.squarefree,
                Some(Expectation::Quadratic) => r.quadratic,
            };
            if let Some(bad) = records.iter().find(|r| !ok(r)) {
                eprintln!("expectation violated under {}", bad.order);
                return Err(Failure::Violation);
            }
        }
        Command::Toric { source } => {
            let l = load(source, policy(cli))?;
            let emb = planar_embedding(&l)
                .ok_or_else(|| anyhow::anyhow!("{source} is not a planar distributive lattice"))?;
            emit(cli, &serde_json::to_value(toric_report(&l, &emb)).map_err(anyhow::Error::from)?)?;
        }
        Command::Catalog { name } => {
            let l = catalog(name).map_err(anyhow::Error::from)?;
            println!("{}", lattice_to_json(&l));
        }
        Command::Explore {
            task,
            max_elems,
            sweep,
            report,
        } => explore(cli, *task, *max_elems, sweep, report.as_deref())?,
    }
    Ok(())
}

fn write_records<T: serde::Serialize>(
    cli: &Cli,
    path: Option<&Path>,
    rows: &[T],
    summary: Value,
) -> anyhow::Result<()> {
    match path {
        Some(p) => {
            let file = File::create(p).with_context(|| format!("creating {}", p.display()))?;
            write_report(BufWriter::new(file), rows, summary.clone())?;
            emit(cli, &json!({ "report": p.display().to_string(), "summary": summary }))
        }
        None => {
            let stdout = io::stdout();
            let mut out = stdout.lock();
            write_report(&mut out, rows, summary)?;
            out.flush()?;
            Ok(())
        }
    }
}

fn explore(
    cli: &Cli,
    task: ExploreTask,
    max_elems: usize,
    sweep: &SweepArgs,
    report: Option<&Path>,
) -> Result<(), Failure> {
    let mode = sweep.mode();
    match task {
        ExploreTask::Enumerate => {
            let lattices = enumerate_lattices(max_elems, Strategy::GrowByTop)
                .map_err(ExplorerError::from)?;
            let rows: Vec<Value> = lattices
                .iter()
                .map(|l| {
                    json!({
                        "lattice_id": lattice_id(l),
                        "size": l.len(),
                        "pure": l.is_pure(),
                        "modular": l.is_modular(),
                        "distributive": l.is_distributive(),
                    })
                })
                .collect();
            let summary = json!({ "class_counts": class_counts(&lattices, max_elems) });
            write_records(cli, report, &rows, summary)?;
        }
        ExploreTask::Squarefree => {
            let scan = squarefree_conjecture_scan(max_elems, &sweep.families, mode)?;
            let summary = json!({
                "candidates": scan.candidates.iter().map(|c| c.lattice_id.clone()).collect::<Vec<_>>(),
                "violations": scan.violations,
                "scan": record_summary(&scan.records),
            });
            write_records(cli, report, &scan.records, summary)?;
        }
        ExploreTask::Quadratic => {
            let scan = quadratic_conjecture_scan(max_elems, &sweep.families, mode)?;
            let mut verdicts: BTreeMap<&'static str, usize> = BTreeMap::new();
            for f in &scan.findings {
                let key = match f.verdict {
                    latgb_core::explorer::QuadraticVerdict::NotQuadratic { .. } => "not_quadratic",
                    latgb_core::explorer::QuadraticVerdict::DivisorShape { .. } => "divisor_shape",
                    latgb_core::explorer::QuadraticVerdict::DisjointSupport => "disjoint_support",
                    latgb_core::explorer::QuadraticVerdict::CounterexampleCandidate => {
                        "counterexample_candidate"
                    }
                };
                *verdicts.entry(key).or_default() += 1;
            }
            let summary = json!({ "lattices": scan.findings.len(), "verdicts": verdicts });
            write_records(cli, report, &scan.findings, summary)?;
        }
    }
    Ok(())
}

fn check_report(l: &Lattice) -> Value {
    let names = l.names();
    let pair = |(a, b): (usize, usize)| json!([names[a], names[b]]);
    let ranks = l
        .rank()
        .map(|r| names.iter().cloned().zip(r.iter().copied()).collect::<BTreeMap<_, _>>());
    let embedding = planar_embedding(l).map(|e| {
        names
            .iter()
            .cloned()
            .zip(e.coords.iter().map(|&(x, y)| [x, y]))
            .collect::<BTreeMap<_, _>>()
    });
    let sublattice = |pattern: &str| {
        let p = catalog(pattern).expect("catalog pattern");
        l.find_sublattice(&p).map(|m| {
            p.names()
                .iter()
                .cloned()
                .zip(m.iter().map(|&x| names[x].clone()))
                .collect::<BTreeMap<_, _>>()
        })
    };
    json!({
        "lattice": true,
        "lattice_id": lattice_id(l),
        "elements": l.len(),
        "pure": l.is_pure(),
        "ranks": ranks,
        "modular": l.is_modular(),
        "distributive": l.is_distributive(),
        "planar": embedding.is_some(),
        "embedding": embedding,
        "cut_edges": l.cut_edges().ok().map(|c| c.into_iter().map(pair).collect::<Vec<_>>()),
        "forbidden_sublattices": {
            "diamond": sublattice("diamond"),
            "pentagon": sublattice("pentagon"),
        },
    })
}
