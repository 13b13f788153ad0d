//! Command-line front end: seeded, reproducible local invariant
//! computations over exact rational arithmetic.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use chernlocal::cli::{
    self, cmd_check, cmd_colength, cmd_compute, cmd_dim, cmd_gb, cmd_imult, cmd_ind, cmd_selftest,
    ComputeOptions, Format,
};
use chernlocal::groebner::Mode;
use chernlocal::Error;

#[derive(Parser)]
#[command(name = "chernlocal", version, about = "Local Chern obstructions, indices, and multiplicities for singular germs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct FormatArg {
    /// Output format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct ModeArgs {
    /// Compute at the origin (local order); the default.
    #[arg(long, conflicts_with = "global")]
    local: bool,
    /// Compute globally (degree order).
    #[arg(long)]
    global: bool,
}

impl ModeArgs {
    fn mode(&self) -> Mode {
        if self.global {
            Mode::Global
        } else {
            Mode::Local
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the full Chern-obstruction pipeline on an input file.
    Compute {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        trials: u32,
        /// Surface route: colength, normalization, or both.
        #[arg(long, default_value = "colength")]
        route: String,
        /// Coefficient bound for generic draws.
        #[arg(long, default_value_t = 10)]
        bound: i64,
        /// Pipeline override: icis or surface.
        #[arg(long)]
        method: Option<String>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Index of the collection at the origin.
    Ind {
        file: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Intersection multiplicity of two plane curves at the origin.
    Imult {
        /// Comma-separated variable names, e.g. "t,z".
        #[arg(long)]
        vars: String,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Colength of an ideal given by generators.
    Colength {
        #[arg(long)]
        vars: String,
        #[arg(allow_hyphen_values = true)]
        polys: Vec<String>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Krull dimension of a quotient by an ideal.
    Dim {
        #[arg(long)]
        vars: String,
        #[arg(allow_hyphen_values = true)]
        polys: Vec<String>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Standard basis of an ideal (Buchberger global, Mora local).
    Gb {
        #[arg(long)]
        vars: String,
        #[arg(allow_hyphen_values = true)]
        polys: Vec<String>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Geometry diagnostics for an input file.
    Check {
        file: PathBuf,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Cross-check the engines against the built-in oracles.
    Selftest,
}

fn read(file: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(file).map_err(|e| Error::InputFile {
        line: 0,
        msg: format!("cannot read {}: {e}", file.display()),
    })
}

fn run(cmd: Cmd) -> Result<String, Error> {
    match cmd {
        Cmd::Compute {
            file,
            seed,
            trials,
            route,
            bound,
            method,
            format,
        } => {
            let opt = ComputeOptions {
                seed,
                trials,
                bound,
                route: cli::parse_route(&route)?,
                method,
                format: Format::parse(&format.format)?,
            };
            cmd_compute(&read(&file)?, &opt)
        }
        Cmd::Ind { file, format } => cmd_ind(&read(&file)?, Format::parse(&format.format)?),
        Cmd::Imult { vars, f, g, format } => {
            cmd_imult(&vars, &f, &g, Format::parse(&format.format)?)
        }
        Cmd::Colength { vars, polys, mode } => cmd_colength(&vars, &polys, mode.mode()),
        Cmd::Dim { vars, polys, mode } => cmd_dim(&vars, &polys, mode.mode()),
        Cmd::Gb { vars, polys, mode } => cmd_gb(&vars, &polys, mode.mode()),
        Cmd::Check { file, format } => cmd_check(&read(&file)?, Format::parse(&format.format)?),
        Cmd::Selftest => cmd_selftest(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(cli::exit_code(&e) as u8)
        }
    }
}
