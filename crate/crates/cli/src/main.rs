//! `racahlab`: exact verification from the command line. Every command prints
//! JSON on stdout; verification commands exit 1 when any check fails.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use racahlab::check::{all_pass, IdentityCheck};
use racahlab::decompose::{compare_te_re, decompose_halved, decompose_hypercube, decompose_ln};
use racahlab::exact_linalg::minimal_polynomial;
use racahlab::leonard;
use racahlab::racah_ops::RacahRep;
use racahlab::rd_modules::{burnside_irreducible, construct, RdParams};
use racahlab::sl2_reps::{build_hypercube, verify_hypercube};
use racahlab::suite::{export_hypercube, parse_targets, run_suite, IntRange, SuiteConfig};
use racahlab::usl2_pbw::{
    verify_casimir_images, verify_equivariance, verify_even_identities, verify_kernel_generators,
    verify_sharp_relations,
};
use racahlab::Q;

#[derive(Parser)]
#[command(
    name = "racahlab",
    version,
    about = "Exact checks for the Racah algebra, U(sl2) and hypercube operator algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Symbolic identities in U(sl2).
    Verify {
        #[arg(value_enum)]
        which: Identities,
    },
    /// Operations on Racah representations stored as text.
    Racah {
        #[command(subcommand)]
        command: RacahCommand,
    },
    /// The modules R_d(a, b, c).
    Rd {
        #[command(subcommand)]
        command: RdCommand,
    },
    /// Leonard triple certification.
    Leonard {
        #[command(subcommand)]
        command: LeonardCommand,
    },
    /// The hypercube module C^X.
    Hypercube {
        #[command(subcommand)]
        command: HypercubeCommand,
    },
    /// Decompose a pullback module into irreducible summands.
    Decompose {
        #[arg(long, value_enum)]
        target: DecomposeTarget,
        #[arg(long = "D")]
        big_d: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Compare the dimensions of T_e and R_e on the halved cube.
    CompareTeRe {
        #[arg(long = "D")]
        big_d: usize,
    },
    /// Run seeded verification suites and write a JSON report.
    Suite(SuiteArgs),
}

#[derive(Clone, Copy, ValueEnum)]
#[allow(clippy::enum_variant_names)] // variant names are the command-line values
enum Identities {
    Sharp,
    Casimir,
    Kernel,
    D3,
    EvenIdentities,
}

#[derive(Subcommand)]
enum RacahCommand {
    /// Check the defining relations and central elements.
    Verify {
        #[arg(long)]
        rep: PathBuf,
    },
}

#[derive(Args)]
struct RdArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: String,
    #[arg(long, allow_hyphen_values = true)]
    b: String,
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    #[arg(long)]
    d: usize,
}

impl RdArgs {
    fn params(&self) -> Result<RdParams> {
        let parse = |name: &str, s: &str| -> Result<Q> { s.parse().with_context(|| format!("--{name}")) };
        Ok(RdParams::new(
            parse("a", &self.a)?,
            parse("b", &self.b)?,
            parse("c", &self.c)?,
            self.d,
        ))
    }
}

#[derive(Subcommand)]
enum RdCommand {
    /// Write A, B, C, Delta in the Racah text format.
    Build {
        #[command(flatten)]
        params: RdArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Irreducibility, class, minimal polynomial degrees and Leonard verdicts.
    Analyze {
        #[command(flatten)]
        params: RdArgs,
    },
}

#[derive(Subcommand)]
enum LeonardCommand {
    /// Check whether A, B, C of a Racah text file act as a Leonard triple.
    Check {
        #[arg(long)]
        rep: PathBuf,
    },
}

#[derive(Subcommand)]
enum HypercubeCommand {
    /// Build E, F, H and the graph operators, optionally exporting them.
    Build {
        #[arg(long = "D")]
        big_d: usize,
        #[arg(long)]
        export: Option<PathBuf>,
    },
    /// Run the operator identity suite.
    Verify {
        #[arg(long = "D")]
        big_d: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeTarget {
    Hypercube,
    #[value(name = "Ln")]
    Ln,
    Halved,
}

#[derive(Args)]
struct SuiteArgs {
    /// Comma-separated targets, or `all`.
    #[arg(long, default_value = "all")]
    targets: String,
    /// Hypercube dimensions, `lo..hi` inclusive.
    #[arg(long = "D", default_value = "2..8")]
    big_d: String,
    /// Module sizes for seeded draws.
    #[arg(long, default_value = "0..6")]
    d: String,
    /// Highest weights for L_n.
    #[arg(long, default_value = "0..12")]
    n: String,
    /// Seeded draws per module size.
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, env = "RACAHLAB_WORKERS")]
    workers: Option<usize>,
    /// Directory receiving hypercube matrices.
    #[arg(long)]
    export_matrices: Option<PathBuf>,
}

/// Writes to stdout; a closed pipe (`| head`) is not an error.
fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    emit(&(serde_json::to_string_pretty(value)? + "\n"))
}

fn status(pass: bool) -> ExitCode {
    if pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn report_checks(checks: &[IdentityCheck]) -> Result<ExitCode> {
    print_json(&checks)?;
    Ok(status(all_pass(checks)))
}

fn read_rep(path: &Path) -> Result<RacahRep> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(RacahRep::from_text(&text)?)
}

#[derive(Serialize)]
struct RdAnalysis {
    params: String,
    irreducible: bool,
    /// The first linear form that hits the forbidden set.
    witness: Option<String>,
    iso_class: Option<String>,
    min_poly_degrees: [usize; 3],
    diagonalizable: [bool; 3],
    /// Verdict of the parameter test (irreducible modules only).
    leonard: Option<bool>,
    /// Verdict of the generic checker on the constructed matrices.
    leonard_checker: bool,
    closure_agrees: bool,
}

fn analyze(p: &RdParams) -> Result<RdAnalysis> {
    let r = construct(p);
    let irreducible = p.is_irreducible();
    let mats = [r.a(), r.b(), r.c()];
    let polys = mats.map(minimal_polynomial);
    let checker = leonard::check(r.a(), r.b(), r.c(), [None, None, None])?;
    Ok(RdAnalysis {
        params: p.to_string(),
        irreducible,
        witness: p.irreducibility_witness().map(|w| w.to_string()),
        iso_class: irreducible.then(|| p.iso_class().label()),
        min_poly_degrees: polys.each_ref().map(|m| m.degree().unwrap_or(0)),
        diagonalizable: polys.each_ref().map(|m| m.is_squarefree()),
        leonard: p.leonard_criterion().ok(),
        leonard_checker: checker.verdict,
        closure_agrees: burnside_irreducible(&r) == irreducible,
    })
}

fn workers(requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, usize::from))
}

fn suite(args: &SuiteArgs) -> Result<ExitCode> {
    let cfg = SuiteConfig {
        targets: parse_targets(&args.targets)?,
        big_d: args.big_d.parse::<IntRange>()?,
        d: args.d.parse::<IntRange>()?,
        n: args.n.parse::<IntRange>()?,
        samples: args.samples,
        seed: args.seed,
        export_matrices: args.export_matrices.clone(),
        workers: workers(args.workers),
    };
    let report = run_suite(&cfg)?;
    let json = report.to_json();
    match &args.out {
        Some(path) => std::fs::write(path, json + "\n").with_context(|| format!("writing {}", path.display()))?,
        None => emit(&(json + "\n"))?,
    }
    for t in &report.targets {
        let failed = t.checks.iter().filter(|c| !c.pass).count();
        eprintln!(
            "{:<18} {:>5} checks, {failed} failed",
            t.target.to_string(),
            t.checks.len()
        );
    }
    Ok(status(report.pass))
}

#[derive(Serialize)]
struct HypercubeSummary {
    #[serde(rename = "D")]
    d: usize,
    vertices: usize,
    files: Vec<PathBuf>,
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Verify { which } => report_checks(&match which {
            Identities::Sharp => verify_sharp_relations(),
            Identities::Casimir => verify_casimir_images(),
            Identities::Kernel => verify_kernel_generators(),
            Identities::D3 => verify_equivariance(),
            Identities::EvenIdentities => verify_even_identities(),
        }),
        Command::Racah {
            command: RacahCommand::Verify { rep },
        } => {
            let r = read_rep(&rep)?;
            let mut checks = r.verify_presentation();
            checks.extend(r.verify_casimirs());
            report_checks(&checks)
        }
        Command::Rd { command } => match command {
            RdCommand::Build { params, out } => {
                let text = construct(&params.params()?).to_text();
                match out {
                    Some(path) => std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                    None => emit(&text)?,
                }
                Ok(ExitCode::SUCCESS)
            }
            RdCommand::Analyze { params } => {
                print_json(&analyze(&params.params()?)?)?;
                Ok(ExitCode::SUCCESS)
            }
        },
        Command::Leonard {
            command: LeonardCommand::Check { rep },
        } => {
            let r = read_rep(&rep)?;
            let report = leonard::check(r.a(), r.b(), r.c(), [None, None, None])?;
            print_json(&report)?;
            Ok(status(report.verdict))
        }
        Command::Hypercube { command } => match command {
            HypercubeCommand::Build { big_d, export } => {
                let cube = build_hypercube(big_d)?;
                let files = match export {
                    Some(dir) => export_hypercube(&cube, &dir)?,
                    None => Vec::new(),
                };
                print_json(&HypercubeSummary {
                    d: big_d,
                    vertices: cube.space.size(),
                    files,
                })?;
                Ok(ExitCode::SUCCESS)
            }
            HypercubeCommand::Verify { big_d } => report_checks(&verify_hypercube(big_d)?),
        },
        Command::Decompose { target, big_d, n } => {
            let report = match (target, big_d, n) {
                (DecomposeTarget::Hypercube, Some(d), _) => decompose_hypercube(d)?,
                (DecomposeTarget::Halved, Some(d), _) => decompose_halved(d)?,
                (DecomposeTarget::Ln, _, Some(n)) => decompose_ln(n)?,
                (DecomposeTarget::Ln, _, None) => bail!("--target Ln needs --n"),
                _ => bail!("--target hypercube and --target halved need --D"),
            };
            print_json(&report)?;
            Ok(status(report.passes()))
        }
        Command::CompareTeRe { big_d } => {
            print_json(&compare_te_re(big_d)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Suite(args) => suite(&args),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
