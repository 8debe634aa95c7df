//! `antiramsey`: command-line front end for the anti-Ramsey toolkit.

mod commands;
mod tables;

use std::process::ExitCode;

use antiramsey_core::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Exit status for a successful computation.
pub const EXIT_OK: u8 = 0;
/// Usage errors, malformed input and unmet preconditions.
pub const EXIT_USAGE: u8 = 1;
/// The answer is a verified absence ("none", "no transversal").
pub const EXIT_ABSENT: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "antiramsey",
    version,
    about = "Reduced chromatic numbers, forcing numbers and independent transversals"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Print machine-readable JSON; errors go to stderr as JSON too.
    #[arg(long, global = true)]
    pub json: bool,
    /// Search step budget for the exhaustive solvers.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Worker threads for the sharded solvers (default 1).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeArg {
    Exact,
    Bounded,
}

#[derive(Args, Debug, Clone)]
pub struct GraphFamily {
    /// Generator literal (K6, W5, B3, C5, P4, 2K2, K4-e, M2,3, petersen) or edge-list file.
    #[arg(long)]
    pub graph: String,
    /// Family: matchings, edge, edges<=K, maxdeg<=T, planar, outerplanar,
    /// forests, linforests, degen<=D, chrom<=K, trianglefree, odd.
    #[arg(long)]
    pub family: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Reduced chromatic number with a witness member.
    ChiF {
        #[command(flatten)]
        gf: GraphFamily,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
    },
    /// The graphs G - D over maximal members D.
    Deck {
        #[command(flatten)]
        gf: GraphFamily,
        /// Keep isomorphic duplicates.
        #[arg(long)]
        no_dedupe: bool,
    },
    /// Whether deleting one member can lower the chromatic number.
    Stable {
        #[command(flatten)]
        gf: GraphFamily,
    },
    /// Fewest members of the family that decompose the graph.
    DecompSize {
        #[command(flatten)]
        gf: GraphFamily,
    },
    /// Builds a coloring of K_n with no F-colored copy of G.
    LbColoring {
        #[command(flatten)]
        gf: GraphFamily,
        #[arg(long)]
        n: usize,
        /// Where to write the coloring.
        #[arg(long)]
        out: Option<String>,
    },
    /// Searches a colored K_n for an F-colored copy of G.
    CheckCopy {
        #[command(flatten)]
        gf: GraphFamily,
        /// Coloring file ("n k" header, then "u v c" lines).
        #[arg(long)]
        coloring: String,
    },
    /// Exact f(n, G | F) for tiny n.
    FExact {
        #[command(flatten)]
        gf: GraphFamily,
        #[arg(long)]
        n: usize,
        /// Merge isomorphic partial colorings (needed at n = 6).
        #[arg(long)]
        symmetry: bool,
        /// Where to write the extremal avoider.
        #[arg(long)]
        out: Option<String>,
    },
    /// Independent transversal of a parted digraph.
    Transversal(TransversalArgs),
    /// Chooses p-subsets of color classes whose interior colors avoid the cut.
    RainbowCut {
        #[arg(long)]
        coloring: String,
        /// Number of classes, taken as consecutive equal blocks of vertices.
        #[arg(long)]
        m: Option<usize>,
        /// Explicit classes, e.g. "0,1,2,3;4,5,6,7".
        #[arg(long, conflicts_with = "m")]
        classes: Option<String>,
        #[arg(long)]
        p: usize,
        /// Blocks per class; defaults to m p^2.
        #[arg(long)]
        s: Option<usize>,
    },
    /// Builds and verifies a digraph without an independent transversal.
    Smd {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        /// basic, small_m or divisible.
        #[arg(long, default_value = "basic")]
        variant: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Turán number of K_r, optionally with the bound for K_{a,b}.
    Turan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Also report the bipartite bound for K_{a,b}, given as "a,b".
        #[arg(long)]
        kst: Option<String>,
    },
    /// Exact extremal number of a list of forbidden graphs for n <= 10.
    ExSmall {
        #[arg(long)]
        n: usize,
        /// Forbidden graph; repeat for several.
        #[arg(long, required = true)]
        graph: Vec<String>,
    },
    /// Asymptotic case of f(n, G | F).
    Classify {
        #[command(flatten)]
        gf: GraphFamily,
        #[arg(long, value_enum, default_value = "exact")]
        mode: ModeArg,
        /// Also certify a lower bound on this many vertices.
        #[arg(long)]
        n: Option<usize>,
    },
    /// Exhaustive check that three parts of size s with out-degree 1 always
    /// have an independent transversal.
    ScanS31 {
        #[arg(long, default_value_t = 3)]
        s: usize,
    },
    /// Reduced chromatic numbers of the standard host graphs.
    Tables,
}

#[derive(Args, Debug)]
pub struct TransversalArgs {
    /// Digraph file ("m s a" header, then "u v" arcs).
    #[arg(long, required_unless_present = "seed")]
    pub digraph: Option<String>,
    #[arg(long, group = "algo")]
    pub exact: bool,
    #[arg(long, group = "algo")]
    pub itl: bool,
    /// Pairwise far transversals, r of them.
    #[arg(long, group = "algo", value_name = "R")]
    pub multifold: Option<usize>,
    /// Vertices per part for --exact.
    #[arg(long, default_value_t = 1)]
    pub fold: usize,
    /// Random instance seed, used with --m, --s and --d instead of a file.
    #[arg(long, conflicts_with = "digraph", requires_all = ["m", "s", "d"])]
    pub seed: Option<u64>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub s: Option<usize>,
    #[arg(long)]
    pub d: Option<usize>,
}

/// Result of one subcommand: what to print and how to exit.
pub struct Outcome {
    pub json: serde_json::Value,
    pub text: String,
    pub code: u8,
}

impl Outcome {
    pub fn ok(json: serde_json::Value, text: String) -> Self {
        Outcome {
            json,
            text,
            code: EXIT_OK,
        }
    }
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_USAGE,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidGraph(_) => "invalid_graph",
        Error::TooLarge { .. } => "too_large",
        Error::Parse { .. } => "parse",
        Error::BudgetExceeded { .. } => "budget_exceeded",
        Error::Unsupported(_) => "unsupported",
        Error::Precondition(_) => "precondition",
        Error::InvalidInput(_) => "invalid_input",
        Error::Invariant(_) => "invariant",
        Error::Io(_) => "io",
    }
}

fn main() -> ExitCode {
    let wants_json = std::env::args().any(|a| a == "--json");
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::from(EXIT_OK);
            }
            if wants_json {
                eprintln!("{}", json!({ "error": "usage", "message": e.to_string().trim_end() }));
            } else {
                let _ = e.print();
            }
            return ExitCode::from(EXIT_USAGE);
        }
    };
    let json_mode = cli.global.json;
    match commands::run(cli) {
        Ok(out) => {
            if json_mode {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            if json_mode {
                eprintln!("{}", json!({ "error": error_kind(&e), "message": e.to_string() }));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(error_code(&e))
        }
    }
}
