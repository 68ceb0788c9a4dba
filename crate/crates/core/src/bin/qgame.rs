//! Command-line front end: `qgame <experiment> [flags]`.
//!
//! Exit codes: 0 on success, 1 for usage errors, 2 when a computation fails.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qgame::experiment::{emit, parse_angles, parse_game_file, run_experiment, Flags, Format};
use qgame::Error;

#[derive(Parser)]
#[command(name = "qgame", version, about = "Quantum game experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Win probability of every penny-flip move sequence
    PennyFlip(Common),
    /// One-shot payoffs for given strategies
    Pd(Common),
    /// Payoffs of the miracle move against classical mixtures
    MiracleCurve(Common),
    /// Entanglement level where the miracle move stops paying
    CriticalGamma(Common),
    /// Payoffs of a fixed profile across entanglement levels
    GammaSweep(Common),
    /// The mixed equilibrium and its verification
    MixedNe(Common),
    /// Symmetric equilibrium among strategies with β = 0
    RestrictedNe(Common),
    /// The minority game, classical and optionally quantum
    Minority(MinorityArgs),
    /// Best replies to a pure profile
    BestResponse(Common),
    /// Nash verification of the mixed pair or a pure profile
    VerifyNe(Common),
    /// Classical matrix analysis
    Analyze(Common),
    /// Payoffs under bit-flip noise
    Noise(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// Entanglement level in radians, 0 to π/2
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<f64>,
    /// Alice's strategy as theta,alpha,beta (radians)
    #[arg(long, allow_hyphen_values = true)]
    alice: Option<String>,
    /// Bob's strategy as theta,alpha,beta (radians)
    #[arg(long, allow_hyphen_values = true)]
    bob: Option<String>,
    /// Output format: csv or json
    #[arg(long, default_value = "csv")]
    format: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// JSON game file
    #[arg(long)]
    game: Option<std::path::PathBuf>,
    /// Number of sample points for curves and sweeps
    #[arg(long)]
    points: Option<usize>,
}

#[derive(Args, Clone)]
struct MinorityArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 4)]
    players: usize,
    /// Also run the symmetric quantum search
    #[arg(long)]
    quantum: bool,
}

fn flags(c: &Common) -> Result<Flags, Error> {
    let game = match &c.game {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::GameFile(format!("{}: {e}", path.display())))?;
            Some(parse_game_file(&text)?)
        }
        None => None,
    };
    Ok(Flags {
        gamma: c.gamma,
        alice: c
            .alice
            .as_deref()
            .map(|s| parse_angles("--alice", s))
            .transpose()?,
        bob: c
            .bob
            .as_deref()
            .map(|s| parse_angles("--bob", s))
            .transpose()?,
        seed: c.seed,
        game,
        points: c.points,
        ..Flags::default()
    })
}

fn execute(cli: Cli) -> Result<String, Error> {
    let (name, common, extra) = match &cli.command {
        Command::PennyFlip(c) => ("penny-flip", c, None),
        Command::Pd(c) => ("pd", c, None),
        Command::MiracleCurve(c) => ("miracle-curve", c, None),
        Command::CriticalGamma(c) => ("critical-gamma", c, None),
        Command::GammaSweep(c) => ("gamma-sweep", c, None),
        Command::MixedNe(c) => ("mixed-ne", c, None),
        Command::RestrictedNe(c) => ("restricted-ne", c, None),
        Command::Minority(m) => ("minority", &m.common, Some((m.players, m.quantum))),
        Command::BestResponse(c) => ("best-response", c, None),
        Command::VerifyNe(c) => ("verify-ne", c, None),
        Command::Analyze(c) => ("analyze", c, None),
        Command::Noise(c) => ("noise", c, None),
    };
    let format: Format = common.format.parse()?;
    let mut f = flags(common)?;
    if let Some((players, quantum)) = extra {
        f.players = Some(players);
        f.quantum = quantum;
    }
    emit(&run_experiment(name, &f)?, format)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            let line = msg
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("usage error");
            eprintln!("{line}");
            return ExitCode::from(1);
        }
    };
    match execute(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_usage() { 1 } else { 2 })
        }
    }
}
