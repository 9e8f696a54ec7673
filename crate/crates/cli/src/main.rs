//! Command-line front end: single queries, table reproduction, Hasse/DOT
//! export, and a self-test suite.
//!
//! Exit codes: 0 success; 2 usage error (malformed arguments); 3 precondition
//! violation (well-formed but invalid query); 4 internal consistency failure
//! (methods disagree); 1 self-test failure.

mod render;
mod report;
mod selftest;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use flagfpt::fpt::{evaluate_with_mode, table1, table2, timed, Mode, WeightSpec};
use flagfpt::lattices::{
    build_idn, build_minuscule_tuple, build_minuscule_weight_poset, build_young, LatticeError,
    YoungLatticeSpec,
};
use flagfpt::root_system::{Family, ParabolicSpec, RootSystem, RootSystemType};
use flagfpt::{FlagQuery, FptError};

const USAGE: u8 = 2;
const PRECONDITION: u8 = 3;
const INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "flagfpt",
    about = "Exact F-pure thresholds of flag-variety coordinate rings",
    long_about = "Computes F-pure thresholds (= log canonical thresholds) of homogeneous \
coordinate rings of flag varieties G/P, exactly, with every applicable method \
cross-checked.\n\nRank is always the Lie rank: type A rank n is SL_{n+1}, \
type B rank n is SO_{2n+1}, type C rank n is Sp_{2n}, type D rank n is SO_{2n}."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one query
    Fpt(FptArgs),
    /// Reproduce a threshold table (1 = minuscule families, 2 = exceptional)
    Table(TableArgs),
    /// Emit a lattice as a DOT digraph with the principal chain highlighted
    Hasse(HasseArgs),
    /// Run the cross-validation suite
    Selftest(SelftestArgs),
}

#[derive(Args)]
struct FptArgs {
    /// Root-system family: A, B, C, D, E, F, or G
    #[arg(long = "type")]
    ty: String,
    /// Lie rank (A rank n = SL_{n+1})
    #[arg(long)]
    rank: usize,
    /// Removed simple-root indices, e.g. 2,3,5
    #[arg(long)]
    removed: String,
    /// Evaluate the m-th multiple of the fundamental weight (maximal parabolics)
    #[arg(long, conflicts_with = "rho_multiple")]
    veronese: Option<u64>,
    /// Evaluate the m-th multiple of the parabolic half-sum weight (non-maximal parabolics)
    #[arg(long)]
    rho_multiple: Option<u64>,
    /// Run only the cheapest applicable method instead of cross-checking all
    #[arg(long)]
    fast: bool,
    /// Output format
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
}

#[derive(Args)]
struct TableArgs {
    /// Which table: 1 (minuscule families) or 2 (exceptional types)
    which: u8,
    /// Largest group parameter for the infinite families of table 1
    #[arg(long, default_value_t = 8)]
    rank_bound: usize,
    /// Output format
    #[arg(long, default_value = "text", value_parser = ["text", "json"])]
    format: String,
}

#[derive(Args)]
struct HasseArgs {
    #[command(subcommand)]
    kind: HasseKind,
    /// Refuse lattices with more elements than this
    #[arg(long, global = true, default_value_t = 500)]
    cap: usize,
}

#[derive(Subcommand)]
enum HasseKind {
    /// The lattice of d-subsets of {1..n}
    Idn { d: u32, n: u32 },
    /// The block-union lattice for SL_n with the given block sizes, e.g. 2,3,5
    Young { n: u32, ds: String },
    /// The lattice of a minuscule node (tuple model when one exists, weight
    /// poset otherwise)
    Minuscule {
        family: String,
        rank: usize,
        d: usize,
    },
}

#[derive(Args)]
struct SelftestArgs {
    /// Bound the ranks of the infinite families (exceptional types always run)
    #[arg(long, default_value_t = 6)]
    max_rank: usize,
    /// Negative control: perturb one fixture cell, written FAMILY:d (e.g. F4:2)
    #[arg(long, hide = true)]
    perturb_table2: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Fpt(args) => cmd_fpt(args),
        Command::Table(args) => cmd_table(args),
        Command::Hasse(args) => cmd_hasse(args),
        Command::Selftest(args) => selftest::run(args.max_rank, args.perturb_table2.as_deref()),
    };
    ExitCode::from(code)
}

/// Map an evaluation error to the process exit code: internal consistency
/// failures are distinguished from ordinary precondition violations.
fn exit_code_for(err: &FptError) -> u8 {
    match err {
        FptError::MethodDisagreement { .. } | FptError::Internal(_) => INTERNAL,
        _ => PRECONDITION,
    }
}

fn usage(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    USAGE
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_str(s).map_err(|e| e.to_string())
}

fn parse_indices(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad index {part:?} in {s:?}"))
        })
        .collect()
}

fn parse_block_sizes(s: &str) -> Result<Vec<u32>, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| format!("bad block size {part:?} in {s:?}"))
        })
        .collect()
}

fn cmd_fpt(args: FptArgs) -> u8 {
    let family = match parse_family(&args.ty) {
        Ok(f) => f,
        Err(e) => return usage(&e),
    };
    let removed = match parse_indices(&args.removed) {
        Ok(r) => r,
        Err(e) => return usage(&e),
    };
    let ty = match RootSystemType::new(family, args.rank) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return PRECONDITION;
        }
    };
    let parab = match ParabolicSpec::new(removed, args.rank) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return PRECONDITION;
        }
    };
    let weight = match (args.veronese, args.rho_multiple) {
        (Some(m), None) => WeightSpec::FundamentalMultiple(m),
        (None, Some(m)) => WeightSpec::RhoMultiple(m),
        (None, None) => WeightSpec::Natural,
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    let mode = if args.fast { Mode::Fast } else { Mode::Strict };
    let query = FlagQuery::new(ty, parab, weight);
    let (outcome, micros) = timed(|| evaluate_with_mode(&query, mode));
    match outcome {
        Ok(result) => {
            if args.format == "json" {
                let rep = report::fpt_report(&query, mode, &result, micros);
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                print!("{}", render::fpt_text(&query, mode, &result, micros));
            }
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
    }
}

fn cmd_table(args: TableArgs) -> u8 {
    match args.which {
        1 => {
            if args.rank_bound < 2 {
                eprintln!("error: --rank-bound must be at least 2");
                return PRECONDITION;
            }
            match table1(args.rank_bound) {
                Ok(table) => {
                    if args.format == "json" {
                        let rep = report::table1_report(&table.rows);
                        println!("{}", serde_json::to_string_pretty(&rep).unwrap());
                    } else {
                        print!("{}", render::table1_text(&table.rows, args.rank_bound));
                    }
                    0
                }
                Err(err) => {
                    eprintln!("error: {err}");
                    exit_code_for(&err)
                }
            }
        }
        2 => match table2() {
            Ok(table) => {
                if args.format == "json" {
                    let rep = report::table2_report(&table.rows);
                    println!("{}", serde_json::to_string_pretty(&rep).unwrap());
                } else {
                    print!("{}", render::table2_text(&table.rows));
                }
                0
            }
            Err(err) => {
                eprintln!("error: {err}");
                exit_code_for(&err)
            }
        },
        other => usage(&format!("no table {other}; choose 1 or 2")),
    }
}

fn cmd_hasse(args: HasseArgs) -> u8 {
    let rendered: Result<String, render::HasseError> = match &args.kind {
        HasseKind::Idn { d, n } => build_idn(*d, *n)
            .map_err(render::HasseError::from)
            .and_then(|poset| render::dot(&poset, args.cap)),
        HasseKind::Young { n, ds } => {
            let ds = match parse_block_sizes(ds) {
                Ok(ds) => ds,
                Err(e) => return usage(&e),
            };
            YoungLatticeSpec::new(*n, ds)
                .map_err(render::HasseError::from)
                .and_then(|spec| render::dot(&build_young(&spec), args.cap))
        }
        HasseKind::Minuscule { family, rank, d } => {
            let family = match parse_family(family) {
                Ok(f) => f,
                Err(e) => return usage(&e),
            };
            minuscule_dot(family, *rank, *d, args.cap)
        }
    };
    match rendered {
        Ok(text) => {
            print!("{text}");
            0
        }
        Err(render::HasseError::Build(err)) => {
            eprintln!("error: {err}");
            exit_code_for(&err)
        }
        Err(err) => {
            eprintln!("error: {err}");
            PRECONDITION
        }
    }
}

/// Tuple model when one exists, Weyl-orbit weight poset otherwise.
fn minuscule_dot(
    family: Family,
    rank: usize,
    d: usize,
    cap: usize,
) -> Result<String, render::HasseError> {
    let ty = RootSystemType::new(family, rank).map_err(FptError::from)?;
    match build_minuscule_tuple(family, rank, d) {
        Ok(poset) => render::dot(&poset, cap),
        Err(LatticeError::UnsupportedTupleModel { .. }) => {
            let rs = RootSystem::new(ty);
            let poset = build_minuscule_weight_poset(&rs, d)?;
            render::dot(&poset, cap)
        }
        Err(e) => Err(e.into()),
    }
}
