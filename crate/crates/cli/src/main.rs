use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

mod commands;
mod report;

use report::{Outcome, RunReport};

#[derive(Parser, Debug)]
#[command(name = "msl", version, about = "Certified Markov and Lagrange spectrum computations near Freiman's gap")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Decimal places for printed values.
    #[arg(long, global = true, default_value_t = 14)]
    pub digits: usize,
    /// Bisection tolerance for dimension exponents.
    #[arg(long, global = true, default_value_t = msl_core::dimension::DEFAULT_TOLERANCE)]
    pub tol: f64,
    /// Leave timing and version out of the JSON report.
    #[arg(long, global = true)]
    pub no_meta: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Named constants c_inf, f, sigma, C_inf.
    #[command(subcommand)]
    Constants(ConstantsCmd),
    /// λ_i, Markov and Lagrange values of sequences.
    #[command(subcommand)]
    Spectra(SpectraCmd),
    /// Verification checks.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Hausdorff dimension bounds for Gauss–Cantor sets.
    #[command(subcommand)]
    Dimension(DimensionCmd),
}

#[derive(Subcommand, Debug)]
pub enum ConstantsCmd {
    Show {
        /// c_inf, f, sigma, C_inf or all.
        #[arg(long, default_value = "all")]
        name: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum SpectraCmd {
    /// λ_i = [a_i; a_{i+1}, …] + [0; a_{i−1}, …].
    Lambda {
        #[arg(long)]
        seq: String,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        pos: i64,
    },
    /// sup_i λ_i with a replayable certificate.
    Markov {
        #[arg(long)]
        seq: String,
    },
    /// ℓ of the purely periodic sequence with the given period.
    Lagrange {
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCmd {
    /// Forbidden (f1) and allowed (f2) word tables.
    Lemmas {
        #[arg(long, default_value = "all", value_parser = ["f1", "f2", "all"])]
        table: String,
    },
    /// Forced-window search from a preset or a JSON constraint file.
    Window {
        #[arg(long, conflicts_with = "constraints", value_parser = ["lf4", "lf3p"])]
        preset: Option<String>,
        #[arg(long)]
        constraints: Option<PathBuf>,
        /// Search range `lo..hi` (inclusive) for a constraint file.
        #[arg(long, allow_hyphen_values = true)]
        range: Option<String>,
        /// Node guard; overrides MSL_NODE_GUARD.
        #[arg(long)]
        node_guard: Option<u64>,
        /// Allow ranges beyond 40 positions.
        #[arg(long)]
        allow_large: bool,
        /// Record every pruned branch.
        #[arg(long)]
        trace: bool,
    },
    /// Lower bounds climbing to f.
    Chain,
    /// The periodic family P_a.
    Appendix {
        /// A single family index instead of the default 2..=10.
        #[arg(long)]
        a: Option<usize>,
    },
    /// λ_0(ρ) against the closed form of f.
    ClosedForm,
    /// Recursive lower bounds toward C_inf.
    RecursiveBound,
    /// Run one registered check by name, or list them.
    Check {
        name: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum DimensionCmd {
    Bounds {
        /// Alphabet words separated by `;`, e.g. "1_2;2_2".
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        depth: usize,
        /// Write every scale pair to this CSV file.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn command_name(c: &Command) -> String {
    let sub = match c {
        Command::Constants(ConstantsCmd::Show { .. }) => "constants show",
        Command::Spectra(SpectraCmd::Lambda { .. }) => "spectra lambda",
        Command::Spectra(SpectraCmd::Markov { .. }) => "spectra markov",
        Command::Spectra(SpectraCmd::Lagrange { .. }) => "spectra lagrange",
        Command::Verify(VerifyCmd::Lemmas { .. }) => "verify lemmas",
        Command::Verify(VerifyCmd::Window { .. }) => "verify window",
        Command::Verify(VerifyCmd::Chain) => "verify chain",
        Command::Verify(VerifyCmd::Appendix { .. }) => "verify appendix",
        Command::Verify(VerifyCmd::ClosedForm) => "verify closed-form",
        Command::Verify(VerifyCmd::RecursiveBound) => "verify recursive-bound",
        Command::Verify(VerifyCmd::Check { .. }) => "verify check",
        Command::Dimension(DimensionCmd::Bounds { .. }) => "dimension bounds",
    };
    sub.to_string()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let started = Instant::now();
    let g = cli.global.clone();
    let name = command_name(&cli.command);
    let result = match cli.command {
        Command::Constants(c) => commands::constants(c, &g),
        Command::Spectra(c) => commands::spectra(c, &g),
        Command::Verify(c) => commands::verify(c, &g),
        Command::Dimension(c) => commands::dimension(c, &g),
    };
    let outcome: Outcome = match result {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = RunReport::new(name, outcome, &g, started.elapsed());
    report.emit(&g);
    ExitCode::from(if report.pass() { 0 } else { 1 })
}
