//! `boardnet analyze`: affiliation data in, JSON report, tables and network
//! exports out.
//!
//! Exit codes: 0 success, 1 analysis or input-format error, 2 I/O or usage
//! error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use boardnet::export::{write_dot, write_edge_list_csv, write_net_one_mode};
use boardnet::ingest::{parse_csv, parse_net, CsvInput, NetInput, ParseDiagnostics};
use boardnet::metrics::{ClosenessVariant, DensityVariant};
use boardnet::projection::project_events;
use boardnet::report::{
    analyze_one_mode, degree_rows, render_degree_distribution, render_degree_ranking, render_table,
    stats_from_degrees, stats_from_network, AnalysisOptions, Table,
};
use boardnet::{AffiliationStats, NameNormalizer, OneModeNetwork};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "boardnet", version, about = "Interlocking editorial board network analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Project journals, compute centralities and m-slices, write reports.
    Analyze(AnalyzeArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Csv,
    Net,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosenessArg {
    #[value(name = "paper")]
    ReachableOnly,
    Component,
}

#[derive(Clone, Copy, ValueEnum)]
enum DensityArg {
    Loops,
    NoLoops,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Affiliation CSV (`actor,event`), degree CSV (`journal,degree`) or NET file.
    #[arg(long)]
    input: PathBuf,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<InputFormat>,
    /// m-slice threshold to decompose (repeatable).
    #[arg(long = "slice", value_name = "M", value_parser = clap::value_parser!(u32).range(1..))]
    slices: Vec<u32>,
    /// `paper`: r / sum of distances; `component`: scaled by r / (n - 1).
    #[arg(long, value_enum, default_value = "paper")]
    closeness_variant: ClosenessArg,
    /// `loops`: 2m / n^2; `no-loops`: 2m / (n(n - 1)).
    #[arg(long, value_enum, default_value = "loops")]
    density_variant: DensityArg,
    /// JSON report path (stdout when omitted and --tables is not given).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write the journal network as a one-mode NET file.
    #[arg(long, value_name = "PATH")]
    export_net: Option<PathBuf>,
    /// Write the journal network as a `source,target,value` CSV.
    #[arg(long, value_name = "PATH")]
    export_csv: Option<PathBuf>,
    /// Write the journal network as a Graphviz DOT file.
    #[arg(long, value_name = "PATH")]
    export_dot: Option<PathBuf>,
    /// Print the degree distribution, centrality and line multiplicity tables.
    #[arg(long)]
    tables: bool,
    /// Report network-level aggregates and the degree distribution only.
    #[arg(long)]
    stats_only: bool,
    /// Case-fold names before matching identities.
    #[arg(long)]
    normalize_names: bool,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn analysis(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    let Cli { command } = Cli::parse();
    let result = match command {
        Command::Analyze(args) => analyze(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("boardnet: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

enum Loaded {
    Network(OneModeNetwork, Option<AffiliationStats>),
    Degrees(boardnet::ingest::DegreeSequence),
}

fn load(args: &AnalyzeArgs) -> Result<Loaded, Failure> {
    let path = &args.input;
    let text = fs::read_to_string(path).map_err(|e| match e.kind() {
        io::ErrorKind::NotFound => Failure::io(format!("no such input: {}", path.display())),
        _ => Failure::io(format!("cannot read {}: {e}", path.display())),
    })?;
    let format = args.format.unwrap_or_else(|| {
        let is_net = path
            .extension()
            .is_some_and(|ext| ext.eq_ignore_ascii_case("net"));
        if is_net {
            InputFormat::Net
        } else {
            InputFormat::Csv
        }
    });
    let normalizer = NameNormalizer::new(args.normalize_names);
    let bad_input = |e: boardnet::Error| Failure::analysis(format!("{}: {e}", path.display()));
    let report_warnings = |diag: &ParseDiagnostics| {
        for w in &diag.warnings {
            eprintln!("boardnet: {}:{}: warning: {}", path.display(), w.line, w.message);
        }
    };

    Ok(match format {
        InputFormat::Csv => match parse_csv(&text, &normalizer).map_err(bad_input)? {
            CsvInput::Affiliations(boards, diag) => {
                report_warnings(&diag);
                Loaded::Network(project_events(&boards), Some(boards.stats()))
            }
            CsvInput::Degrees(seq) => Loaded::Degrees(seq),
        },
        InputFormat::Net => match parse_net(&text, &normalizer).map_err(bad_input)? {
            NetInput::TwoMode(boards, diag) => {
                report_warnings(&diag);
                Loaded::Network(project_events(&boards), Some(boards.stats()))
            }
            NetInput::OneMode(net, diag) => {
                report_warnings(&diag);
                Loaded::Network(net, None)
            }
        },
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::io(format!("cannot write {}: {e}", path.display())))
}

fn emit(args: &AnalyzeArgs, json: &str, tables: &str) -> Result<(), Failure> {
    if let Some(out) = &args.out {
        write_file(out, json)?;
    }
    let mut stdout = io::stdout().lock();
    let printed = if args.tables {
        stdout.write_all(tables.as_bytes())
    } else if args.out.is_none() {
        stdout.write_all(json.as_bytes())
    } else {
        Ok(())
    };
    printed.map_err(|e| Failure::io(format!("cannot write to stdout: {e}")))
}

fn analyze(args: &AnalyzeArgs) -> Result<(), Failure> {
    let opts = AnalysisOptions {
        closeness: match args.closeness_variant {
            ClosenessArg::ReachableOnly => ClosenessVariant::ReachableOnly,
            ClosenessArg::Component => ClosenessVariant::ComponentNormalized,
        },
        density: match args.density_variant {
            DensityArg::Loops => DensityVariant::LoopsAllowed,
            DensityArg::NoLoops => DensityVariant::NoLoops,
        },
        slices: args.slices.clone(),
        ..Default::default()
    };

    let (net, affiliation) = match load(args)? {
        Loaded::Network(net, affiliation) => (net, affiliation),
        Loaded::Degrees(seq) => {
            if !args.stats_only {
                return Err(Failure::analysis(
                    "a degree-sequence input has no lines; rerun with --stats-only",
                ));
            }
            if args.export_net.is_some() || args.export_csv.is_some() || args.export_dot.is_some() {
                return Err(Failure::analysis("a degree-sequence input cannot be exported"));
            }
            let report = stats_from_degrees(&seq, &opts).map_err(|e| Failure::analysis(e.to_string()))?;
            let tables = format!(
                "{}\n{}",
                render_degree_distribution(&report.degree_distribution),
                render_degree_ranking(&degree_rows(&seq))
            );
            return emit(args, &report.to_json(), &tables);
        }
    };

    if let Some(path) = &args.export_net {
        write_file(path, &write_net_one_mode(&net))?;
    }
    if let Some(path) = &args.export_csv {
        write_file(path, &write_edge_list_csv(&net))?;
    }
    if let Some(path) = &args.export_dot {
        write_file(path, &write_dot(&net))?;
    }

    if args.stats_only {
        let report = stats_from_network(&net, affiliation, &opts);
        let tables = render_degree_distribution(&report.degree_distribution);
        return emit(args, &report.to_json(), &tables);
    }

    let report = analyze_one_mode(&net, affiliation, &opts)
        .map_err(|e| Failure::analysis(e.to_string()))?;
    let tables = [Table::DegreeDistribution, Table::Centrality, Table::LineMultiplicity]
        .map(|t| render_table(&report, t))
        .join("\n");
    emit(args, &report.to_json(), &tables)
}
