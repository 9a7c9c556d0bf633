//! `reflexive`: verify edge-length identities of reflexive polytopes and
//! GKM graphs, and reproduce the Betti-number tables.
//!
//! Exit codes: 0 pass, 1 identity or precondition failure, 2 input or usage
//! error.

mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use reflexive_core::Error;

#[derive(Parser)]
#[command(name = "reflexive", version, about = "Exact checks for reflexive polytopes and GKM graphs")]
struct Cli {
    /// Aligned text instead of JSON
    #[arg(long, global = true)]
    text: bool,
    /// Cross-check lengths and face numbers against brute-force oracles
    #[arg(long, global = true)]
    with_oracle: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// JSON file, `-` for standard input, or `catalog:NAME`
    input: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum CheckKind {
    Delzant,
    Reflexive,
    Gkm,
    Gorenstein,
}

#[derive(Subcommand)]
enum Command {
    /// Check a single property
    Check {
        #[arg(value_enum)]
        which: CheckKind,
        #[command(flatten)]
        source: Source,
    },
    /// Verify an identity: main, 12-24, combinatorics2, length-decomposition,
    /// index-corollary, graph-corollary or gorenstein:R
    Verify {
        identity: String,
        #[command(flatten)]
        source: Source,
    },
    /// Polar dual of a polytope
    Dual {
        #[command(flatten)]
        source: Source,
    },
    /// f-vector of a polytope
    Fvector {
        #[command(flatten)]
        source: Source,
    },
    /// h-vector from face numbers and from in-degrees
    Hvector {
        #[command(flatten)]
        source: Source,
        /// Direction for the in-degree census, e.g. "1,3,7"
        #[arg(long, allow_hyphen_values = true)]
        xi: Option<String>,
    },
    /// Edge weights and relative lengths
    Lengths {
        #[command(flatten)]
        source: Source,
    },
    /// GKM graphs
    Gkm {
        #[command(subcommand)]
        command: GkmCommand,
    },
    /// Betti-number bounds
    Bounds {
        #[command(subcommand)]
        command: BoundsCommand,
    },
    /// Built-in examples
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum GkmCommand {
    /// Coadjoint orbit graph of a root system
    Build {
        /// A, B, C, D or G
        root_type: Option<String>,
        rank: Option<usize>,
        /// 0-based simple roots generating the parabolic subgroup, e.g. "0,2"
        #[arg(long, short = 'I', default_value = "")]
        subset: String,
        /// Request JSON {"type", "rank", "I"} from a file or `-`
        #[arg(long, conflicts_with_all = ["root_type", "rank"])]
        request: Option<String>,
    },
    /// Validate a graph and verify its edge-length identity
    Check {
        #[command(flatten)]
        source: Source,
    },
}

#[derive(Subcommand)]
enum BoundsCommand {
    /// C(k0, n, b) as affine forms in the Betti numbers
    Table {
        #[arg(default_value_t = 2)]
        n_min: usize,
        #[arg(default_value_t = 5)]
        n_max: usize,
    },
    /// Admissible Betti vectors for given n and k0
    Enumerate {
        n: usize,
        k0: usize,
        #[arg(long)]
        unimodal: bool,
        /// Upper bound on each Betti number when no bound can be derived
        #[arg(long)]
        cap: Option<u64>,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Names of all built-in entries
    List,
    /// JSON of one entry
    Show { name: String },
}

pub struct Output {
    pub json: serde_json::Value,
    pub text: String,
    pub pass: bool,
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::NotDelzant
        | Error::NotReflexive
        | Error::NotSimple
        | Error::OriginNotInterior
        | Error::NotGorenstein
        | Error::NotGorensteinOfIndex(_)
        | Error::Inconsistent
        | Error::NonPositive
        | Error::DirectionDependent
        | Error::NonLatticeEdge(..)
        | Error::MatchingFailed(..)
        | Error::NonNegativeS { .. }
        | Error::InconsistentCones(_) => 1,
        _ => 2,
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let oracle = cli.with_oracle;
    match &cli.command {
        Command::Check { which, source } => commands::check(*which, source.input.as_deref()),
        Command::Verify { identity, source } => {
            commands::verify(identity, source.input.as_deref(), oracle)
        }
        Command::Dual { source } => commands::dual(source.input.as_deref()),
        Command::Fvector { source } => commands::fvector(source.input.as_deref(), oracle),
        Command::Hvector { source, xi } => commands::hvector(source.input.as_deref(), xi.as_deref()),
        Command::Lengths { source } => commands::lengths(source.input.as_deref(), oracle),
        Command::Gkm { command } => match command {
            GkmCommand::Build {
                root_type,
                rank,
                subset,
                request,
            } => {
                let req = match request {
                    Some(src) => commands::read_request(src)?,
                    None => commands::request_from_args(root_type.as_deref(), *rank, subset)?,
                };
                commands::gkm_build(&req)
            }
            GkmCommand::Check { source } => commands::gkm_check(source.input.as_deref()),
        },
        Command::Bounds { command } => match command {
            BoundsCommand::Table { n_min, n_max } => commands::bounds_table(*n_min, *n_max),
            BoundsCommand::Enumerate {
                n,
                k0,
                unimodal,
                cap,
            } => commands::bounds_enumerate(*n, *k0, *unimodal, *cap),
        },
        Command::Catalog { command } => match command {
            CatalogCommand::List => Ok(commands::catalog_list()),
            CatalogCommand::Show { name } => commands::catalog_show(name),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            let body = if cli.text {
                out.text.trim_end().to_string()
            } else {
                reflexive_core::io::to_json(&out.json)
            };
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
