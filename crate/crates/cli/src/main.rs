use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use photon_heat_cli::{cmd_compare_power, cmd_solve, cmd_sweep_t1, load_config, to_csv_string, write_csv_file, CliError};

#[derive(Parser)]
#[command(name = "photon-heat", version, about = "Photonic heat transport between two resistors in a cavity")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the CSV here instead of the config's `output` (or stdout)
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Log solver progress to stderr
    #[arg(long, short, global = true)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a single point at the config's t1
    Solve { config: PathBuf },
    /// Sweep T1 and solve resistor 2's temperature self-consistently
    SweepT1 { config: PathBuf },
    /// Compare quantum, two-level and circuit powers at T2 = T1 - offset
    ComparePower { config: PathBuf },
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (config, command): (_, fn(_) -> _) = match &cli.command {
        Command::Solve { config } => (config, cmd_solve),
        Command::SweepT1 { config } => (config, cmd_sweep_t1),
        Command::ComparePower { config } => (config, cmd_compare_power),
    };
    let cfg = load_config(config)?;
    let table = command(&cfg)?;
    let text = to_csv_string(&table)?;
    let is_solve = matches!(cli.command, Command::Solve { .. });
    match cli.output.or(cfg.output_path) {
        Some(path) => {
            write_csv_file(&table, &path)?;
            if is_solve {
                print!("{text}");
            }
            log::info!("wrote {} rows to {}", table.rows.len(), path.display());
        }
        None => print!("{text}"),
    }
    std::io::stdout().flush().map_err(|e| CliError::Output(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = if cli.verbose { "debug" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
