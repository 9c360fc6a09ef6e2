//! Command-line front end: simple and projective modules, transport to
//! Yetter-Drinfeld modules, Nichols dimensions and the classification.

mod commands;
mod render;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use radford::nichols::DEFAULT_BUDGET;
use radford::Error;

#[derive(Parser, Debug)]
#[command(name = "radford", version, about = "Exact computations over dual Radford algebras and their doubles")]
pub struct Cli {
    /// Order of the nilpotent generator.
    #[arg(long, global = true, default_value_t = 2)]
    pub n: u32,
    #[arg(long, global = true, default_value_t = 2)]
    pub m: u32,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Largest tensor dimension any Nichols computation may touch.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Add decimal approximations next to exact scalars.
    #[arg(long, global = true)]
    pub decimal: bool,
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// All simple modules of the double with their dimensions.
    Simples,
    /// One simple module, or its projective cover.
    Module {
        i: u32,
        j: u32,
        /// Check every relation of the double on the module.
        #[arg(long)]
        verify: bool,
        /// Write the module graph to this file.
        #[arg(long, value_name = "PATH")]
        dot: Option<std::path::PathBuf>,
        /// Build the projective cover `M_{i,j}` instead.
        #[arg(long)]
        projective: bool,
    },
    /// The Yetter-Drinfeld module attached to `V_{i,j}` and its braiding.
    Transport { i: u32, j: u32 },
    /// Graded dimensions of the Nichols algebra of the transported module.
    Dims {
        i: u32,
        j: u32,
        #[arg(long, default_value_t = 16)]
        max_degree: usize,
    },
    /// Finiteness of the Nichols algebras (n = 2), for one pair or all.
    Classify {
        i: Option<u32>,
        j: Option<u32>,
        /// Skip the graded-dimension probe and presentation checks.
        #[arg(long)]
        quick: bool,
    },
    /// Reproduce the lists of finite Nichols algebras for m = 2 or m = 3.
    Reproduce { which: Which },
    /// The Drinfeld double of the dual Radford algebra.
    Double {
        /// Check the presentation, the pairing identities and sampled Hopf axioms.
        #[arg(long)]
        check: bool,
        /// Number of sampled basis triples for the Hopf axioms.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// `H_{2,2}`, the dual of the Radford algebra of dimension 8.
    Thm22,
    /// `H_{2,3}`, the dual of the Radford algebra of dimension 12.
    Thm23,
}

/// Exit codes: 0 ok, 2 verification failure, 3 precondition, 4 capacity.
fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 3 } else { 0 });
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            if cli.json {
                emit(&format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serializable")));
            } else {
                emit(&out.text);
            }
            ExitCode::from(if out.ok { 0 } else { 2 })
        }
        Err(e) => {
            if cli.json {
                let v = serde_json::json!({ "error": e.to_string(), "exit_code": e.exit_code() });
                emit(&format!("{}\n", serde_json::to_string_pretty(&v).expect("serializable")));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(s: &str) {
    use std::io::Write;
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn exit_code(e: &Error) -> u8 {
    e.exit_code() as u8
}
