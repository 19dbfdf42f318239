//! Command line front end: run one scenario, sweep a grid, or solve a small
//! instance exactly. Outputs are deterministic byte-for-byte for a fixed
//! config and seed. `RIS_ADMIT_LOG` controls log verbosity.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;

use ris_admit::experiment::{export_report, run_sweep, ReportFormat, SweepConfig};
use ris_admit::oracle::{exhaustive_optimal, DEFAULT_MAX_USERS};
use ris_admit::workload::{generate_scenario, Scenario, ScenarioConfig};
use ris_admit::{run_admission_control, AdmissionResult, Error, Result};

#[derive(Parser)]
#[command(name = "ris-admit", version, about = "Admission control for a RIS-assisted edge cell")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run admission control on one generated scenario.
    Run(RunArgs),
    /// Run the full sweep grid and write report.csv and report.json.
    Sweep(SweepArgs),
    /// Solve a small scenario exactly by enumerating every admission set.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct ScenarioOverrides {
    /// Force the panel on or off, overriding the config.
    #[arg(long, value_enum)]
    ris: Option<Toggle>,
    /// Override the sector count.
    #[arg(long, value_parser = clap::value_parser!(usize))]
    sectors: Option<usize>,
    /// Override the user count.
    #[arg(long)]
    users: Option<usize>,
}

impl ScenarioOverrides {
    fn apply(&self, cfg: &mut ScenarioConfig) {
        if let Some(toggle) = self.ris {
            cfg.ris.enabled = toggle.as_bool();
        }
        if let Some(sectors) = self.sectors {
            cfg.sector_count = sectors as u8;
        }
        if let Some(users) = self.users {
            cfg.n_users = users;
        }
    }
}

#[derive(Args)]
struct RunArgs {
    /// Scenario config file (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Override the config's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    format: OutputFormat,
    #[command(flatten)]
    overrides: ScenarioOverrides,
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep config file (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output directory for report.csv and report.json.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct OracleArgs {
    /// Scenario config file (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Refuse scenarios with more users than this.
    #[arg(long, default_value_t = DEFAULT_MAX_USERS)]
    max_users: usize,
    #[command(flatten)]
    overrides: ScenarioOverrides,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Toggle {
    On,
    Off,
}

impl Toggle {
    fn as_bool(self) -> bool {
        matches!(self, Toggle::On)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Csv,
}

fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

fn write_output(out: Option<&Path>, payload: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, payload)?,
        None => std::io::stdout().write_all(payload.as_bytes())?,
    }
    Ok(())
}

fn result_to_csv(scenario: &Scenario, result: &AdmissionResult) -> Result<String> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record([
        "user_id",
        "class",
        "sector",
        "admitted",
        "ris_assigned",
        "ris_elements",
        "compute_share",
        "rate_bps",
        "delay_s",
        "utility",
    ])?;
    for (user, outcome) in scenario.users.iter().zip(&result.outcomes) {
        writer.write_record([
            outcome.user_id.to_string(),
            user.class.name().to_string(),
            user.sector.to_string(),
            outcome.admitted.to_string(),
            outcome.ris_assigned.to_string(),
            outcome.ris_elements.to_string(),
            outcome.compute_share.to_string(),
            outcome.rate_bps.to_string(),
            outcome.delay_s.to_string(),
            outcome.utility.to_string(),
        ])?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::InvalidConfig(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn cmd_run(args: RunArgs) -> Result<()> {
    let mut cfg: ScenarioConfig = load_json(&args.config)?;
    args.overrides.apply(&mut cfg);
    let seed = args.seed.unwrap_or(cfg.seed);
    let scenario = generate_scenario(&cfg, seed)?;
    let result = run_admission_control(&scenario, &cfg.weights, &cfg.thresholds, &cfg.channel)?;
    log::info!(
        "admitted {}/{} users, objective {}",
        result.admitted_count(),
        scenario.users.len(),
        result.objective_value
    );
    let payload = match args.format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&result)?;
            s.push('\n');
            s
        }
        OutputFormat::Csv => result_to_csv(&scenario, &result)?,
    };
    write_output(args.out.as_deref(), &payload)
}

fn cmd_sweep(args: SweepArgs) -> Result<()> {
    let cfg: SweepConfig = load_json(&args.config)?;
    let report = run_sweep(&cfg)?;
    fs::create_dir_all(&args.out)?;
    export_report(&report, &args.out.join("report.csv"), ReportFormat::Csv)?;
    export_report(&report, &args.out.join("report.json"), ReportFormat::Json)?;
    log::info!("wrote {} cells to {}", report.cells.len(), args.out.display());
    Ok(())
}

fn cmd_oracle(args: OracleArgs) -> Result<()> {
    let mut cfg: ScenarioConfig = load_json(&args.config)?;
    args.overrides.apply(&mut cfg);
    let scenario = generate_scenario(&cfg, cfg.seed)?;
    let result =
        exhaustive_optimal(&scenario, &cfg.weights, &cfg.thresholds, &cfg.channel, args.max_users)?;
    let mut payload = serde_json::to_string_pretty(&result)?;
    payload.push('\n');
    write_output(None, &payload)
}

fn main() {
    env_logger::Builder::from_env(
        env_logger::Env::new().filter_or("RIS_ADMIT_LOG", "warn"),
    )
    .format_timestamp(None)
    .init();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            process::exit(code);
        }
    };

    let outcome = match cli.command {
        Command::Run(args) => cmd_run(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Oracle(args) => cmd_oracle(args),
    };
    if let Err(err) = outcome {
        eprintln!("error: {err}");
        process::exit(err.exit_code());
    }
}
