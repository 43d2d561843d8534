//! Command-line surface: analyze, transform, verify, generate, loss.
//!
//! Exit codes: 0 success, 1 I/O or precondition errors, 2 verification
//! failure, 3 the transformation algorithm refused (stuck/infeasible).

pub mod report;

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use antiresolve_core::{
    anonymity_value_with_threads, compute_loss, is_transformation, parse_edge_list,
    transform_2ell, transform_k1, write_edge_list, Error, Flavor, Graph, PruneMode,
};
use clap::{Parser, Subcommand, ValueEnum};

use report::{
    skip_fraction, AnalyzeReport, LossJson, Transform2EllReport, TransformK1Report, VerifyReport,
    SCHEMA_VERSION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_VERIFICATION_FAILED: i32 = 2;
pub const EXIT_ALGORITHM_STUCK: i32 = 3;

#[derive(Parser)]
#[command(
    name = "antiresolve",
    version,
    about = "Analyse and harden graphs against sybil-based re-identification"
)]
struct Cli {
    /// Worker threads for probe-set enumeration; falls back to
    /// ANTIRESOLVE_THREADS, default 1 for reproducibility.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Metric,
    Adjacency,
}

impl From<Mode> for Flavor {
    fn from(mode: Mode) -> Flavor {
        match mode {
            Mode::Metric => Flavor::Metric,
            Mode::Adjacency => Flavor::Adjacency,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the (k, ell)-anonymity value of a graph.
    Analyze {
        /// Edge-list path or built-in fixture name.
        #[arg(long)]
        input: String,
        /// Largest probe-set size the adversary can field.
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Mode::Adjacency)]
        mode: Mode,
        /// Also write the JSON report here.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Repair single-probe adjacency anonymity to a target k by degree edits.
    #[command(name = "transform-k1")]
    TransformK1 {
        #[arg(long)]
        input: String,
        /// Target anonymity value.
        #[arg(long)]
        k: usize,
        /// Write the transformed edge list here (only on verified success).
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Fix every 1-adjacency antiresolving set of size <= ell by additions.
    #[command(name = "transform-2ell")]
    Transform2Ell {
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 2)]
        ell: usize,
        /// Disable the distance-based guard pruning.
        #[arg(long)]
        no_prune: bool,
        /// Run the pruned and exhaustive guard side by side and fail on any
        /// disagreement.
        #[arg(long)]
        paranoid: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Check that (original, published) is a (k, ell)-anonymous transformation.
    Verify {
        #[arg(long)]
        original: String,
        #[arg(long)]
        published: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = Mode::Adjacency)]
        mode: Mode,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Generate a seeded Erdős–Rényi graph.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the edge list here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Information loss between two graphs on the same vertex set.
    Loss {
        #[arg(long)]
        original: String,
        #[arg(long)]
        published: String,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn new(code: i32, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

/// Map a core error to an exit code: algorithm refusals are distinguishable
/// from misuse.
fn core_failure(err: Error) -> Failure {
    let code = match err {
        Error::Stuck { .. } | Error::NoEligiblePartner { .. } | Error::PruneDisagreement { .. } => {
            EXIT_ALGORITHM_STUCK
        }
        _ => EXIT_ERROR,
    };
    Failure::new(code, err.to_string())
}

fn load_graph(arg: &str) -> Result<Graph, Failure> {
    if let Some(g) = antiresolve_core::fixtures::get(arg) {
        return Ok(g);
    }
    let text = fs::read_to_string(arg)
        .map_err(|e| Failure::new(EXIT_ERROR, format!("cannot read {arg}: {e}")))?;
    parse_edge_list(&text).map_err(|e| Failure::new(EXIT_ERROR, format!("{arg}: {e}")))
}

fn write_file(path: &PathBuf, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents)
        .map_err(|e| Failure::new(EXIT_ERROR, format!("cannot write {}: {e}", path.display())))
}

// Downstream consumers may close the pipe early (e.g. piping to head);
// that is not an error worth panicking over.
fn print_ignoring_broken_pipe(text: &str) {
    use std::io::Write;
    let _ = std::io::stdout().write_all(text.as_bytes());
}

fn emit_report<T: serde::Serialize>(report: &T, path: Option<&PathBuf>) -> Result<(), Failure> {
    let json = serde_json::to_string_pretty(report).expect("reports serialise");
    print_ignoring_broken_pipe(&format!("{json}\n"));
    if let Some(path) = path {
        write_file(path, &format!("{json}\n"))?;
    }
    Ok(())
}

fn resolve_threads(flag: Option<usize>) -> Result<usize, Failure> {
    let threads = match flag {
        Some(t) => t,
        None => match std::env::var("ANTIRESOLVE_THREADS") {
            Ok(value) => value.parse::<usize>().map_err(|_| {
                Failure::new(EXIT_ERROR, format!("ANTIRESOLVE_THREADS={value} is not a number"))
            })?,
            Err(_) => 1,
        },
    };
    if threads == 0 {
        return Err(Failure::new(EXIT_ERROR, "threads must be at least 1"));
    }
    Ok(threads)
}

/// Parse and run. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_ERROR,
            };
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            failure.code
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Failure> {
    let threads = resolve_threads(cli.threads)?;
    match cli.command {
        Command::Analyze {
            input,
            ell,
            mode,
            report,
        } => {
            let g = load_graph(&input)?;
            let scan = anonymity_value_with_threads(&g, ell, mode.into(), threads)
                .map_err(core_failure)?;
            let payload = AnalyzeReport {
                schema: SCHEMA_VERSION,
                mode: scan.mode.as_str(),
                ell: scan.ell,
                k: scan.k,
                witness: scan.witness.members().to_vec(),
                sets_examined: scan.sets_examined,
                elapsed_ms: scan.elapsed.as_millis() as u64,
            };
            emit_report(&payload, report.as_ref())?;
            Ok(EXIT_OK)
        }
        Command::TransformK1 {
            input,
            k,
            output,
            report,
        } => {
            let g = load_graph(&input)?;
            let started = Instant::now();
            let (out, script, run_report) = transform_k1(&g, k).map_err(core_failure)?;
            let check =
                is_transformation(&g, &out, k, 1, Flavor::Adjacency).map_err(core_failure)?;
            let loss = compute_loss(&g, &out).map_err(core_failure)?;
            let payload = TransformK1Report {
                schema: SCHEMA_VERSION,
                op: "transform-k1",
                n: g.order(),
                k0: run_report.k0,
                k: run_report.k,
                low_set_initial: run_report.low_set_initial,
                high_set_initial: run_report.high_set_initial,
                additions: run_report.additions,
                removals: run_report.removals,
                bounds: run_report.bounds,
                edits: script,
                loss,
                verified: check.holds,
                elapsed_ms: started.elapsed().as_millis() as u64,
            };
            emit_report(&payload, report.as_ref())?;
            if !check.holds {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
            if let Some(path) = output {
                write_file(&path, &write_edge_list(&out))?;
            }
            Ok(EXIT_OK)
        }
        Command::Transform2Ell {
            input,
            ell,
            no_prune,
            paranoid,
            output,
            report,
        } => {
            let g = load_graph(&input)?;
            let prune = if paranoid {
                PruneMode::Paranoid
            } else if no_prune {
                PruneMode::Off
            } else {
                PruneMode::On
            };
            let started = Instant::now();
            let (out, script, run_report) = transform_2ell(&g, ell, prune).map_err(core_failure)?;
            let check =
                is_transformation(&g, &out, 2, ell, Flavor::Adjacency).map_err(core_failure)?;
            let loss = compute_loss(&g, &out).map_err(core_failure)?;
            let payload = Transform2EllReport {
                schema: SCHEMA_VERSION,
                op: "transform-2ell",
                n: g.order(),
                ell: run_report.ell,
                prune: run_report.prune,
                bad_initial: run_report.bad_initial,
                pool_initial: run_report.pool_initial,
                additions: run_report.additions,
                prune_skip_fraction: skip_fraction(&run_report.guard),
                guard: run_report.guard,
                edits: script,
                loss,
                verified: check.holds,
                elapsed_ms: started.elapsed().as_millis() as u64,
            };
            emit_report(&payload, report.as_ref())?;
            if !check.holds {
                return Ok(EXIT_VERIFICATION_FAILED);
            }
            if let Some(path) = output {
                write_file(&path, &write_edge_list(&out))?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            original,
            published,
            k,
            ell,
            mode,
            report,
        } => {
            let g1 = load_graph(&original)?;
            let g2 = load_graph(&published)?;
            let check = is_transformation(&g1, &g2, k, ell, mode.into()).map_err(core_failure)?;
            let flavor: Flavor = mode.into();
            let payload = VerifyReport {
                schema: SCHEMA_VERSION,
                mode: flavor.as_str(),
                k,
                ell,
                holds: check.holds,
                counterexample: check.counterexample,
            };
            emit_report(&payload, report.as_ref())?;
            Ok(if payload.holds {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            })
        }
        Command::Gen { n, p, seed, output } => {
            let g = antiresolve_core::erdos_renyi(n, p, seed).map_err(core_failure)?;
            let text = write_edge_list(&g);
            match output {
                Some(path) => write_file(&path, &text)?,
                None => print_ignoring_broken_pipe(&text),
            }
            Ok(EXIT_OK)
        }
        Command::Loss {
            original,
            published,
            report,
        } => {
            let g1 = load_graph(&original)?;
            let g2 = load_graph(&published)?;
            let loss = compute_loss(&g1, &g2).map_err(core_failure)?;
            let payload = LossJson {
                schema: SCHEMA_VERSION,
                loss,
            };
            emit_report(&payload, report.as_ref())?;
            Ok(EXIT_OK)
        }
    }
}
