//! The `pythole` command line, callable in-process.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub mod commands;
pub mod render;

use render::Format;

/// Triangles and Pythagorean holes in graphs.
///
/// Exit status: 0 when everything ran and every checked claim held, 1 when a
/// checked claim failed, 2 on bad input.
#[derive(Parser)]
#[command(name = "pythole", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Triangle and Pythagorean-hole report for an edge-list file.
    Holes {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Embodiment graph of a Pythagorean triple.
    Embodiment {
        a: u64,
        b: u64,
        c: u64,
        /// Compare the closed forms with computed invariants.
        #[arg(long)]
        verify: bool,
        /// Print the graph as an edge list.
        #[arg(long)]
        emit_graph: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Intersection graph of the non-empty subsets of an n-set.
    Setgraph {
        n: u32,
        /// Check the degree law, hole-freeness and the clique census.
        #[arg(long)]
        verify: bool,
        /// Print the graph as an edge list with subset names.
        #[arg(long)]
        emit_graph: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Jaco graph J_n(1): degrees, underlying graph, Pythagorean census.
    Jaco {
        n: usize,
        /// Print the underlying graph as an edge list.
        #[arg(long)]
        emit_graph: bool,
        /// List Pythagorean holes with their types and check the counting laws.
        #[arg(long)]
        census: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Degree and hole table of J_i(1) for i = 1..=n_max, audited against a reference.
    Fisher {
        n_max: usize,
        /// Reference CSV (header i,d_minus,d_plus,h,h_p_t1); defaults to the built-in 35 rows.
        #[arg(long)]
        reference: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Pythagorean triples with hypotenuse at most c_max.
    Triples {
        c_max: u64,
        #[arg(long)]
        primitive_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

fn run(command: Command) -> commands::CmdResult {
    match command {
        Command::Holes { path, format } => commands::holes(&path, format),
        Command::Embodiment {
            a,
            b,
            c,
            verify,
            emit_graph,
            format,
        } => commands::embodiment(a, b, c, verify, emit_graph, format),
        Command::Setgraph {
            n,
            verify,
            emit_graph,
            format,
        } => commands::setgraph(n, verify, emit_graph, format),
        Command::Jaco {
            n,
            emit_graph,
            census,
            format,
        } => commands::jaco(n, emit_graph, census, format),
        Command::Fisher {
            n_max,
            reference,
            format,
        } => commands::fisher(n_max, reference.as_deref(), format),
        Command::Triples {
            c_max,
            primitive_only,
            format,
        } => commands::triples(c_max, primitive_only, format),
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Execution {
    pub stdout: String,
    pub stderr: String,
    /// 0 ok, 1 a checked claim failed, 2 bad input.
    pub code: u8,
}

/// Runs one command line; `args[0]` is the program name.
pub fn execute<I, T>(args: I) -> Execution
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Execution {
                    stdout: String::new(),
                    stderr: text,
                    code: 2,
                }
            } else {
                Execution {
                    stdout: text,
                    stderr: String::new(),
                    code: 0,
                }
            };
        }
    };
    match run(cli.command) {
        Ok(outcome) => Execution {
            stdout: outcome.stdout,
            stderr: outcome.stderr.iter().map(|l| format!("{l}\n")).collect(),
            code: if outcome.ok { 0 } else { 1 },
        },
        Err(msg) => Execution {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: 2,
        },
    }
}
