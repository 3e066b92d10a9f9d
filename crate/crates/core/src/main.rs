use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use co_cycles::cli;
use co_cycles::generator::GenParams;

#[derive(Parser)]
#[command(
    name = "co-cycles",
    version,
    about = "Decide cyclic orientability and enumerate chordless cycles"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print CO or NOT_CO <reason> for an edge-list file
    Check {
        input: PathBuf,
        /// Reduce biconnected components on this many threads
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// List all chordless cycles of a cyclically orientable graph
    Enum {
        input: PathBuf,
        /// Emit {co, n, m, cycles, components, duration_ms} as JSON
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Generate a seeded test graph in edge-list format
    Gen {
        /// Number of cycles glued onto the base cycle
        #[arg(long, default_value_t = 0)]
        attachments: usize,
        #[arg(long = "min-len", default_value_t = 3)]
        min_len: usize,
        #[arg(long = "max-len", default_value_t = 3)]
        max_len: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Plant a theta substructure to force a non-CO graph
        #[arg(long = "non-co")]
        non_co: bool,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the brute-force oracles and cross-check the fast path
    Oracle { input: PathBuf },
    /// Time enumeration over generated graphs; CSV on stdout
    Bench {
        /// Comma-separated ascending vertex counts
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = std::io::stdout().lock();
    let mut err = std::io::stderr().lock();
    let code = match cli.cmd {
        Cmd::Check { input, threads } => cli::cmd_check(&input, threads, &mut out, &mut err),
        Cmd::Enum {
            input,
            json,
            threads,
        } => cli::cmd_enum(&input, json, threads, &mut out, &mut err),
        Cmd::Gen {
            attachments,
            min_len,
            max_len,
            seed,
            non_co,
            output,
        } => {
            let params = GenParams {
                attachments,
                min_len,
                max_len,
                seed,
                want_co: !non_co,
            };
            cli::cmd_gen(&params, output.as_deref(), &mut out, &mut err)
        }
        Cmd::Oracle { input } => cli::cmd_oracle(&input, &mut out, &mut err),
        Cmd::Bench {
            sizes,
            seed,
            threads,
        } => cli::cmd_bench(&sizes, seed, threads, &mut out, &mut err),
    };
    ExitCode::from(code as u8)
}
