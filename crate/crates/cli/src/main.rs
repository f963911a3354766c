mod commands;
mod input;

use std::process::ExitCode;

use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use commands::{ChiMode, Output, VerifyKind};
use input::{Rejected, Usage};

#[derive(Parser)]
#[command(name = "dichromatic", version, about = "Digraph colouring, evenness and matching tools")]
struct Cli {
    /// Print JSON instead of the line format.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for commands that take several files.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Seed for the random generators.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = false, multiple = false)]
struct ChiFlags {
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    fractional: bool,
    #[arg(long)]
    star: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether digraphs are non-even; `-` reads stdin.
    Noneven {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Acyclic 2-colouring of non-even digraphs.
    Color2 {
        #[arg(required = true)]
        files: Vec<String>,
        #[arg(long)]
        trace: bool,
    },
    /// Dichromatic number: exact (default), fractional or star.
    Chi {
        #[arg(required = true)]
        files: Vec<String>,
        #[command(flatten)]
        mode: ChiFlags,
        /// Vertex limit for the exact search.
        #[arg(long, default_value_t = dichromatic::twocolor::DEFAULT_EXACT_LIMIT)]
        limit: usize,
    },
    /// Reduce a CNF formula to a digraph that is k-colourable iff the formula is satisfiable.
    ReduceSat {
        cnf: String,
        #[arg(short, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        sidecar: Option<String>,
    },
    /// Read a satisfying assignment off a colouring of a reduction digraph.
    Decode { cnf: String, digraph: String, colouring: String },
    /// Colouring of a reduction digraph built from a truth assignment (`v` lines).
    Encode { cnf: String, digraph: String, assignment: String },
    /// M-direction of a bipartite graph with a perfect matching.
    Mdirection { bigraph: String },
    /// Splitting bigraph of a digraph.
    Split { digraph: String },
    /// Non-trivial tight cuts of a matching-covered graph.
    Tightcuts { graph: String },
    /// Forcing number or a partition of the matching into two forcing sets.
    Forcing {
        bigraph: String,
        #[arg(long, conflicts_with = "partition")]
        number: bool,
        #[arg(long)]
        partition: bool,
    },
    /// Generate a family member.
    #[command(after_help = format!("Families: {}", commands::FAMILIES))]
    Gen { family: String, params: Vec<String> },
    /// Matching colourings: wheel K, staircase ORDER, tricorn, or graph FILE.
    Mcolor {
        family: String,
        params: Vec<String>,
        /// One colouring per perfect matching.
        #[arg(long)]
        all: bool,
        /// Which perfect matching to colour.
        #[arg(long, default_value_t = 0, conflicts_with = "all")]
        index: usize,
    },
    /// List colouring with acyclic colour classes.
    Listcolor {
        digraph: String,
        lists: String,
        /// Use the constructive procedure for non-even digraphs, with the given precoloured vertex.
        #[arg(long, value_name = "V0")]
        choose3: Option<usize>,
    },
    /// Partition the vertices into g disjoint feedback vertex sets.
    Fvspack { digraph: String, g: usize },
    /// Check a certificate produced by another command.
    Verify {
        kind: VerifyKind,
        #[arg(required = true)]
        inputs: Vec<String>,
    },
}

fn batch(files: &[String], jobs: usize, f: impl Fn(&str) -> Result<Output> + Sync) -> Result<Vec<Output>> {
    if files.len() == 1 {
        return Ok(vec![f(&files[0])?]);
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build()?;
    pool.install(|| files.par_iter().map(|p| f(p)).collect())
}

fn run(cli: &Cli) -> Result<Vec<Output>> {
    let one = |o: Result<Output>| o.map(|o| vec![o]);
    match &cli.command {
        Command::Noneven { files } => batch(files, cli.jobs, commands::noneven),
        Command::Color2 { files, trace } => batch(files, cli.jobs, |p| commands::color2(p, *trace)),
        Command::Chi { files, mode, limit } => {
            let m = if mode.fractional {
                ChiMode::Fractional
            } else if mode.star {
                ChiMode::Star
            } else {
                ChiMode::Exact
            };
            batch(files, cli.jobs, |p| commands::chi(p, m, *limit))
        }
        Command::ReduceSat { cnf, k, sidecar } => one(commands::reduce_sat_cmd(cnf, *k, sidecar.as_deref())),
        Command::Decode { cnf, digraph, colouring } => one(commands::decode(cnf, digraph, colouring)),
        Command::Encode { cnf, digraph, assignment } => one(commands::encode(cnf, digraph, assignment)),
        Command::Mdirection { bigraph } => one(commands::mdirection(bigraph)),
        Command::Split { digraph } => one(commands::split(digraph)),
        Command::Tightcuts { graph } => one(commands::tightcuts(graph)),
        Command::Forcing { bigraph, partition, .. } => one(commands::forcing(bigraph, *partition)),
        Command::Gen { family, params } => one(commands::gen(family, params, cli.seed)),
        Command::Mcolor { family, params, all, index } => one(commands::mcolor(family, params, *index, *all)),
        Command::Listcolor { digraph, lists, choose3 } => one(commands::listcolor(digraph, lists, *choose3)),
        Command::Fvspack { digraph, g } => one(commands::fvspack(digraph, *g)),
        Command::Verify { kind, inputs } => one(commands::verify(*kind, inputs)),
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    use dichromatic::Error as E;
    if e.is::<Usage>() {
        return 2;
    }
    if e.is::<Rejected>() {
        return 4;
    }
    match e.downcast_ref::<E>() {
        Some(E::Parse { .. } | E::InvalidGraph(_) | E::InvalidParameter(_) | E::InvalidK(_) | E::InvalidOrder(_))
        | Some(E::InvalidFormula(_) | E::ListTooSmall(_)) => 2,
        Some(E::EnumerationCapExceeded { .. } | E::TooLarge(_) | E::SearchBudgetExceeded) => 3,
        Some(E::CertificateFailed(_)) => 4,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outs) => {
            let several = outs.len() > 1;
            if cli.json {
                let v: Vec<_> = outs.into_iter().map(|o| o.json).collect();
                let v = if several { serde_json::Value::Array(v) } else { v.into_iter().next().unwrap_or_default() };
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            } else {
                let files = match &cli.command {
                    Command::Noneven { files } | Command::Color2 { files, .. } | Command::Chi { files, .. } => files.clone(),
                    _ => Vec::new(),
                };
                for (i, o) in outs.into_iter().enumerate() {
                    if several {
                        println!("# file {}", files[i]);
                    }
                    print!("{}", o.text);
                }
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
