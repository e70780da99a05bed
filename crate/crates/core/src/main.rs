use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use bchroma::constructive::{self, Outcome, ProcedureReport};
use bchroma::error::Error;
use bchroma::exact::{self, SearchBudget, SolveStatus};
use bchroma::generators::{self, Family, GeneratorSpec};
use bchroma::io::{self, GraphFormat, LoadedGraph};
use bchroma::report::{Report, ReportResult};
use bchroma::{coloring, Graph};

/// Exact solvers and constructive procedures for b-colorings of graphs.
#[derive(Parser)]
#[command(name = "bchroma", version, disable_help_subcommand = true)]
struct Cli {
    /// Report wall time as 0 so equal runs are byte-identical.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dimacs,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProcedureArg {
    Thm21,
    Thm22,
    Thm23,
    Ux,
    Thm31,
}

#[derive(Subcommand)]
enum Command {
    /// Print the structural signature and theorem hypothesis flags.
    Info {
        graph: PathBuf,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Generate a graph and write it to a file.
    Gen {
        /// Family (named, complete, cycle, random-regular, projective)
        /// or directly the name of an embedded graph.
        family: String,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(short, long)]
        output: PathBuf,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Exact chromatic number.
    Chi {
        graph: PathBuf,
        #[arg(long)]
        node_limit: Option<u64>,
        #[arg(long)]
        time_limit: Option<u64>,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Exact b-chromatic number with a verifiable certificate.
    B {
        graph: PathBuf,
        #[arg(long)]
        node_limit: Option<u64>,
        #[arg(long)]
        time_limit: Option<u64>,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Exact dominant-color number f of a regular graph.
    F {
        graph: PathBuf,
        #[arg(long)]
        node_limit: Option<u64>,
        #[arg(long)]
        time_limit: Option<u64>,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Brute-force oracle for b (graphs with at most 10 vertices).
    OracleB {
        graph: PathBuf,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Brute-force oracle for f (regular graphs with at most 10 vertices).
    OracleF {
        graph: PathBuf,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Run a constructive coloring procedure.
    Construct {
        graph: PathBuf,
        #[arg(long)]
        procedure: ProcedureArg,
        #[arg(long)]
        center: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        format: Option<FormatArg>,
    },
    /// Check a coloring file: properness, and optionally a k-b-coloring.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long)]
        format: Option<FormatArg>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Usage problems exit 1; --help and --version stay 0.
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn load(path: &Path, format: Option<FormatArg>) -> Result<LoadedGraph, Error> {
    let format = match format {
        Some(FormatArg::Dimacs) => GraphFormat::Dimacs,
        Some(FormatArg::Edgelist) => GraphFormat::EdgeList,
        None => GraphFormat::from_path(path),
    };
    io::parse_graph_file(path, format)
}

fn budget(node_limit: Option<u64>, time_limit: Option<u64>) -> SearchBudget {
    let mut b = SearchBudget::default();
    if let Some(n) = node_limit {
        b.node_limit = n;
    }
    if let Some(t) = time_limit {
        b.time_limit_ms = t;
    }
    b
}

fn emit(report: &Report) {
    print!("{}", report.to_json());
}

fn exact_exit(status: SolveStatus) -> ExitCode {
    match status {
        SolveStatus::Exact => ExitCode::SUCCESS,
        SolveStatus::Inconclusive => ExitCode::from(2),
    }
}

fn outcome_exit(outcome: Outcome) -> ExitCode {
    match outcome {
        Outcome::Success => ExitCode::SUCCESS,
        _ => ExitCode::from(2),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let started = Instant::now();
    let no_timing = cli.no_timing;
    let elapsed = move || {
        if no_timing {
            0
        } else {
            started.elapsed().as_millis() as u64
        }
    };
    match cli.command {
        Command::Info { graph, format } => {
            let loaded = load(&graph, format)?;
            let report = Report::new(
                format!("info {}", graph.display()),
                &loaded.graph,
                ReportResult::Info,
                elapsed(),
            );
            emit(&report);
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            family,
            name,
            n,
            d,
            q,
            seed,
            output,
            format,
        } => {
            let spec = generator_spec(&family, name, n, d, q, seed)?;
            let g = generators::generate(&spec)?;
            let out_format = match format {
                Some(FormatArg::Dimacs) => GraphFormat::Dimacs,
                Some(FormatArg::Edgelist) => GraphFormat::EdgeList,
                None => GraphFormat::from_path(&output),
            };
            std::fs::write(&output, io::write_graph(&g, out_format))?;
            let report = Report::new(
                format!("gen {family} -> {}", output.display()),
                &g,
                ReportResult::Generated {
                    path: output.display().to_string(),
                },
                elapsed(),
            );
            emit(&report);
            Ok(ExitCode::SUCCESS)
        }
        Command::Chi {
            graph,
            node_limit,
            time_limit,
            format,
        } => {
            let loaded = load(&graph, format)?;
            let result = exact::chromatic_number(&loaded.graph, budget(node_limit, time_limit));
            let status = result.status;
            let report = Report::new(
                format!("chi {}", graph.display()),
                &loaded.graph,
                result.into(),
                elapsed(),
            );
            emit(&report);
            Ok(exact_exit(status))
        }
        Command::B {
            graph,
            node_limit,
            time_limit,
            format,
        } => {
            let loaded = load(&graph, format)?;
            let result = exact::b_number_exact(&loaded.graph, budget(node_limit, time_limit));
            let status = result.status;
            let report = Report::new(
                format!("b {}", graph.display()),
                &loaded.graph,
                result.into(),
                elapsed(),
            );
            emit(&report);
            Ok(exact_exit(status))
        }
        Command::F {
            graph,
            node_limit,
            time_limit,
            format,
        } => {
            let loaded = load(&graph, format)?;
            let result = exact::f_number_exact(&loaded.graph, budget(node_limit, time_limit))?;
            let status = result.status;
            let report = Report::new(
                format!("f {}", graph.display()),
                &loaded.graph,
                result.into(),
                elapsed(),
            );
            emit(&report);
            Ok(exact_exit(status))
        }
        Command::OracleB { graph, format } => {
            let loaded = load(&graph, format)?;
            let value = exact::brute_force_b(&loaded.graph)?;
            let report = Report::new(
                format!("oracle-b {}", graph.display()),
                &loaded.graph,
                ReportResult::Oracle { value },
                elapsed(),
            );
            emit(&report);
            Ok(ExitCode::SUCCESS)
        }
        Command::OracleF { graph, format } => {
            let loaded = load(&graph, format)?;
            let value = exact::brute_force_f(&loaded.graph)?;
            let report = Report::new(
                format!("oracle-f {}", graph.display()),
                &loaded.graph,
                ReportResult::Oracle { value },
                elapsed(),
            );
            emit(&report);
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct {
            graph,
            procedure,
            center,
            seed,
            format,
        } => {
            let loaded = load(&graph, format)?;
            let g = &loaded.graph;
            let proc_report = run_procedure(g, procedure, center);
            let outcome = proc_report.outcome;
            let command = format!(
                "construct {} --procedure {} center={:?} seed={:?}",
                graph.display(),
                procedure_name(procedure),
                center,
                seed
            );
            let report = Report::new(command, g, ReportResult::Procedure(proc_report), elapsed());
            emit(&report);
            Ok(outcome_exit(outcome))
        }
        Command::Verify {
            graph,
            coloring: coloring_path,
            b,
            format,
        } => {
            let loaded = load(&graph, format)?;
            let g = &loaded.graph;
            let col = io::parse_coloring_file(&coloring_path, g.n(), b)?;
            let proper = coloring::is_proper(g, &col);
            let total = col.is_total();
            let dominant = coloring::dominant_colors_partial(g, &col).len();
            let b_check = b.map(|k| coloring::is_b_coloring(g, &col, k).unwrap_or(false));
            let passed = proper && b_check.unwrap_or(true);
            let report = Report::new(
                format!("verify {} {}", graph.display(), coloring_path.display()),
                g,
                ReportResult::Verify {
                    proper,
                    total,
                    dominant_colors: dominant,
                    b_coloring: b_check,
                },
                elapsed(),
            );
            emit(&report);
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn generator_spec(
    family: &str,
    name: Option<String>,
    n: Option<usize>,
    d: Option<usize>,
    q: Option<usize>,
    seed: Option<u64>,
) -> Result<GeneratorSpec, Error> {
    let fam = match family {
        "named" => Family::Named,
        "complete" => Family::Complete,
        "cycle" => Family::Cycle,
        "random-regular" | "random_regular" => Family::RandomRegular,
        "projective" | "projective_incidence" => Family::ProjectiveIncidence,
        other if generators::NAMED_GRAPHS.contains(&other) => {
            return Ok(GeneratorSpec::named(other));
        }
        other => {
            return Err(Error::InvalidSpec(format!(
                "unknown family or graph name {other:?}"
            )))
        }
    };
    Ok(GeneratorSpec {
        family: fam,
        name,
        n,
        d,
        q,
        seed,
    })
}

fn procedure_name(p: ProcedureArg) -> &'static str {
    match p {
        ProcedureArg::Thm21 => "thm21",
        ProcedureArg::Thm22 => "thm22",
        ProcedureArg::Thm23 => "thm23",
        ProcedureArg::Ux => "ux",
        ProcedureArg::Thm31 => "thm31",
    }
}

fn run_procedure(g: &Graph, procedure: ProcedureArg, center: Option<usize>) -> ProcedureReport {
    match procedure {
        ProcedureArg::Thm21 => constructive::theorem_2_1_procedure(g),
        ProcedureArg::Thm22 => {
            let x = center.unwrap_or_else(|| default_center(g));
            constructive::theorem_2_2_procedure(g, x)
        }
        ProcedureArg::Thm23 => constructive::theorem_2_3_procedure(g),
        ProcedureArg::Ux => {
            let x = center.unwrap_or_else(|| default_center(g));
            let u_set: BTreeSet<usize> = g
                .is_regular()
                .map(|d| {
                    let m = d / 2 + 1;
                    g.neighbors(x).iter().copied().take(m).collect()
                })
                .unwrap_or_default();
            constructive::ux_coloring(g, x, &u_set)
        }
        ProcedureArg::Thm31 => constructive::theorem_3_1_procedure(g),
    }
}

/// Lowest-index vertex of maximum eccentricity, or vertex 0 when the
/// graph is disconnected (the procedures flag the hypothesis themselves).
fn default_center(g: &Graph) -> usize {
    let mut best: Option<(usize, usize)> = None;
    for v in 0..g.n() {
        let Some(ecc) = g.eccentricity(v) else {
            return 0;
        };
        if best.map_or(true, |(e, _)| ecc > e) {
            best = Some((ecc, v));
        }
    }
    best.map(|(_, v)| v).unwrap_or(0)
}
