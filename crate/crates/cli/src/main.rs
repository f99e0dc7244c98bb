//! `bsdh`: intersection theory of Bott-Samelson toric degenerations from the
//! command line. Positions and root indices are 1-based.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use bsdh_core::enumerate::DEFAULT_CAP;
use bsdh_core::{Algorithm, ErrorKind, Method};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "bsdh", version, about, long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Named finite type, e.g. `A3`, `"A 3"` or `A 3`.
    #[arg(long = "type", global = true, num_args = 1..=2, value_name = "F N")]
    named: Option<Vec<String>>,

    /// Cartan matrix as a JSON file or inline JSON: `{"cartan": [[2,-1],[-1,2]]}`,
    /// `{"type": {"family": "A", "rank": 2}}` or a bare matrix.
    #[arg(long, global = true, value_name = "FILE")]
    cartan: Option<String>,

    /// Word as 1-based root indices, e.g. `1,2,1`.
    #[arg(long, global = true, value_name = "CSV", allow_hyphen_values = true)]
    word: Option<String>,

    /// Admissible sequence of 1-based positions, e.g. `1,3`.
    #[arg(long, global = true, value_name = "CSV")]
    seq: Option<String>,

    /// Divisor as a JSON file or inline JSON.
    #[arg(long, global = true, value_name = "FILE")]
    divisor: Option<String>,

    /// One JSON document with `type` or `cartan`, `word`, and optionally
    /// `seq` and `divisor`. Replaces --type, --cartan and --word.
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = MethodArg::Fast)]
    method: MethodArg,

    #[arg(long, global = true, value_enum, default_value_t = AlgorithmArg::Comp)]
    algorithm: AlgorithmArg,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Largest word length enumerated by `enumerate` and `report`.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_name = "N")]
    max_enumerate: usize,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    /// Expand the curve L_I (needs --seq) in the Schubert-line basis.
    Expand,
    /// Extremal-ray basis L_j(w) with the subsequences selecting it.
    Basis,
    /// Positions whose Schubert line is a Mori ray.
    Mori,
    /// Fano verdict with a per-line diagnosis.
    Fano,
    /// Ampleness of a divisor (needs --divisor).
    Ample,
    /// Enumerate fixed points and invariant curves and cross-check.
    Enumerate,
    /// Everything above as one JSON document.
    Report,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum MethodArg {
    Fast,
    Oracle,
    Coroot,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum AlgorithmArg {
    Comp,
    Weyl,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// A failed run: message for stderr and the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<bsdh_core::Error> for Failure {
    fn from(e: bsdh_core::Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Validation => 2,
            ErrorKind::Overflow => 3,
            ErrorKind::Internal => 4,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

/// Parsed and validated command line.
pub struct RunConfig {
    pub command: Command,
    pub input: input::Input,
    pub method: Method,
    pub algorithm: Algorithm,
    pub format: Format,
    pub cap: usize,
}

fn parse_input(cli: &Cli) -> Result<RunConfig, Failure> {
    let sources = input::Sources {
        input: cli.input.as_deref(),
        named: cli.named.as_deref(),
        cartan: cli.cartan.as_deref(),
        word: cli.word.as_deref(),
        seq: cli.seq.as_deref(),
        divisor: cli.divisor.as_deref(),
    };
    let input = input::load(&sources)?;
    match cli.command {
        Command::Expand if input.seq.is_none() => return Err(Failure::usage("expand needs --seq")),
        Command::Ample if input.divisor.is_none() => return Err(Failure::usage("ample needs --divisor")),
        _ => {}
    }
    Ok(RunConfig {
        command: cli.command,
        input,
        method: match cli.method {
            MethodArg::Fast => Method::Fast,
            MethodArg::Oracle => Method::Oracle,
            MethodArg::Coroot => Method::Coroot,
        },
        algorithm: match cli.algorithm {
            AlgorithmArg::Comp => Algorithm::Comp,
            AlgorithmArg::Weyl => Algorithm::Weyl,
        },
        format: cli.format,
        cap: cli.max_enumerate,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = parse_input(&cli).and_then(|cfg| commands::run(&cfg));
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
