//! `commgraph`: analyse commuting graphs of finite groups and verify the
//! diameter-8 family.
//!
//! Exit codes: 0 ok, 1 parse or input error, 2 cap exceeded, 3 a
//! disconnected graph outside the Frobenius and 2-Frobenius cases,
//! 4 a failed verification check.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "commgraph",
    version,
    about = "Commuting graphs of finite groups"
)]
struct Cli {
    /// Element cap for group enumeration (for paper-verify: field order and |D|).
    #[arg(long, global = true, env = "COMMGRAPH_CAP", value_parser = clap::value_parser!(u64).range(1..))]
    cap: Option<u64>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify each group file and summarise its commuting graph.
    Analyze {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Run the verification suite for one parameter triple.
    PaperVerify {
        #[arg(long, default_value_t = 11)]
        q: u64,
        #[arg(long, default_value_t = 5)]
        r: u64,
        #[arg(long, default_value_t = 3221)]
        t: u64,
    },
    /// List every valid (q, r) up to q_max with its least t.
    SearchParams {
        #[arg(long)]
        q_max: u64,
    },
    /// Export the class-quotient commuting graph of one group file.
    GraphExport { file: PathBuf },
}

pub struct Config {
    pub cap: Option<u64>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let config = Config {
        cap: cli.cap,
        out: cli.out,
        format: cli.format,
    };
    let result = match cli.command {
        Command::Analyze { files } => commands::analyze(&config, &files),
        Command::PaperVerify { q, r, t } => commands::paper_verify(&config, q, r, t),
        Command::SearchParams { q_max } => commands::search_params(&config, q_max),
        Command::GraphExport { file } => commands::graph_export(&config, &file),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {:#}", e.error);
            ExitCode::from(e.code)
        }
    }
}
