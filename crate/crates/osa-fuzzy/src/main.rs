use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use osa_fuzzy::fls::{RuleBase, RuleBaseConfig, CANONICAL_RULEBASE_TOML};
use osa_fuzzy::model::{select_user, Scenario};
use osa_fuzzy::report;
use osa_fuzzy::sim::{
    decision_surface, generate_scenario, sweep_arrival_rates, TrafficConfig,
    DEFAULT_INTERFERENCE_RADIUS, DEFAULT_STEP_X1, DEFAULT_STEP_X2,
};

const EXIT_RUNTIME: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(
    name = "osa-fuzzy",
    about = "Fuzzy-logic opportunistic spectrum access: evaluate possibilities, select users, emit decision surfaces and traffic sweeps"
)]
struct Cli {
    /// Rule-base config file; defaults to the bundled rule table.
    #[arg(long, global = true)]
    rulebase: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,

    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the possibility for one input triple.
    Evaluate {
        #[arg(long)]
        utilization: f64,
        #[arg(long)]
        mobility: f64,
        #[arg(long)]
        distance: f64,
    },
    /// Evaluate a scenario file and report the chosen user.
    Select { scenario: PathBuf },
    /// Write a decision-surface grid at a fixed normalized distance.
    Surface {
        #[arg(long)]
        x3: f64,
        #[arg(long, default_value_t = DEFAULT_STEP_X1)]
        step_x1: f64,
        #[arg(long, default_value_t = DEFAULT_STEP_X2)]
        step_x2: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sweep arrival rates through the traffic simulation.
    Traffic {
        /// Comma-separated arrival rates.
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<f64>,
        #[arg(long, default_value_t = 5)]
        channels: usize,
        /// Admission threshold on the possibility score.
        #[arg(long, default_value_t = 0.0)]
        theta: f64,
        /// Mean call holding time.
        #[arg(long, default_value_t = 1.0)]
        holding: f64,
        #[arg(long, default_value_t = 1000.0)]
        duration: f64,
        #[arg(long, default_value_t = DEFAULT_INTERFERENCE_RADIUS)]
        radius: f64,
        /// Scenario file; a seeded 20-user scenario is generated if absent.
        #[arg(long)]
        scenario: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check a rule-base config against all structural invariants.
    Validate {
        #[arg(id = "config")]
        path: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

struct CliError {
    message: String,
    usage: bool,
}

impl CliError {
    fn exit_code(&self) -> u8 {
        if self.usage {
            EXIT_USAGE
        } else {
            EXIT_RUNTIME
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

fn usage_err(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        usage: true,
    }
}

fn runtime_err(message: impl Into<String>) -> CliError {
    CliError {
        message: message.into(),
        usage: false,
    }
}

fn load_rulebase(path: &Option<PathBuf>) -> Result<RuleBase<f64>, CliError> {
    let text = match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| usage_err(format!("cannot read rule base {}: {e}", p.display())))?,
        None => CANONICAL_RULEBASE_TOML.to_string(),
    };
    RuleBaseConfig::from_toml_str(&text)
        .and_then(|c| c.build())
        .map_err(|e| usage_err(format!("invalid rule base: {e}")))
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Evaluate {
            utilization,
            mobility,
            distance,
        } => {
            for (name, v) in [
                ("utilization", utilization),
                ("mobility", mobility),
                ("distance", distance),
            ] {
                if !v.is_finite() {
                    return Err(usage_err(format!("--{name} must be finite")));
                }
            }
            let rulebase = load_rulebase(&cli.rulebase)?;
            let y = rulebase
                .infer([utilization, mobility, distance])
                .map_err(|e| runtime_err(e.to_string()))?;
            match cli.format {
                Format::Csv => println!("{}", report::sig6(y)),
                Format::Json => println!("{}", serde_json::json!({ "possibility": y })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Select { scenario } => {
            let rulebase = load_rulebase(&cli.rulebase)?;
            let text = fs::read_to_string(&scenario)
                .map_err(|e| usage_err(format!("cannot read {}: {e}", scenario.display())))?;
            let scenario: Scenario<f64> = Scenario::from_toml_str(&text)
                .map_err(|e| usage_err(format!("invalid scenario: {e}")))?;
            let decision =
                select_user(&scenario, &rulebase).map_err(|e| runtime_err(e.to_string()))?;
            match cli.format {
                Format::Csv => print!("{}", report::decision_csv(&decision)),
                Format::Json => println!("{}", report::decision_json(&decision)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Surface {
            x3,
            step_x1,
            step_x2,
            out,
        } => {
            if !(0.0..=10.0).contains(&x3) {
                return Err(usage_err("--x3 must lie in [0,10]"));
            }
            if step_x1 <= 0.0 || step_x2 <= 0.0 {
                return Err(usage_err("grid steps must be positive"));
            }
            let rulebase = load_rulebase(&cli.rulebase)?;
            let grid = decision_surface(&rulebase, x3, step_x1, step_x2)
                .map_err(|e| runtime_err(e.to_string()))?;
            let body = match cli.format {
                Format::Csv => report::surface_csv(&grid),
                Format::Json => format!("{}\n", report::surface_json(&grid)),
            };
            fs::write(&out, body)
                .map_err(|e| runtime_err(format!("cannot write {}: {e}", out.display())))?;
            println!("wrote {} cells to {}", grid.cells.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Traffic {
            lambda,
            channels,
            theta,
            holding,
            duration,
            radius,
            scenario,
            out,
        } => {
            if lambda.iter().any(|l| !(*l > 0.0)) {
                return Err(usage_err("arrival rates must be positive"));
            }
            let rulebase = load_rulebase(&cli.rulebase)?;
            let scenario = match scenario {
                Some(p) => {
                    let text = fs::read_to_string(&p)
                        .map_err(|e| usage_err(format!("cannot read {}: {e}", p.display())))?;
                    Scenario::from_toml_str(&text)
                        .map_err(|e| usage_err(format!("invalid scenario: {e}")))?
                }
                None => generate_scenario(cli.seed, 20, 100.0),
            };
            let base = TrafficConfig {
                arrival_rate: lambda[0],
                mean_holding_time: holding,
                channel_count: channels,
                admission_threshold: theta,
                interference_radius: radius,
                sim_duration: duration,
                seed: cli.seed,
            };
            let series = sweep_arrival_rates(&scenario, &rulebase, &base, &lambda)
                .map_err(|e| usage_err(e.to_string()))?;
            let body = match cli.format {
                Format::Csv => report::traffic_csv(&series),
                Format::Json => format!("{}\n", report::traffic_json(&series)),
            };
            fs::write(&out, body)
                .map_err(|e| runtime_err(format!("cannot write {}: {e}", out.display())))?;
            println!("wrote {} sweep points to {}", series.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Validate { path } => {
            let text = fs::read_to_string(&path)
                .map_err(|e| usage_err(format!("cannot read {}: {e}", path.display())))?;
            match validate_rulebase(&text) {
                Ok(summary) => {
                    println!("{summary}");
                    Ok(ExitCode::SUCCESS)
                }
                Err(diagnostic) => {
                    eprintln!("{diagnostic}");
                    Ok(ExitCode::from(EXIT_RUNTIME))
                }
            }
        }
    }
}

/// Structural validation: parse, rule count and completeness, centroid
/// ranges, and a sampled partition-of-unity check per input variable.
/// The partition check covers only the inputs: it is what guarantees a
/// positive total firing strength for every input triple.
fn validate_rulebase(text: &str) -> Result<String, String> {
    let config = RuleBaseConfig::from_toml_str(text).map_err(|e| e.to_string())?;
    let rulebase: RuleBase<f64> = config.build().map_err(|e| e.to_string())?;
    for variable in rulebase.inputs().iter() {
        let (lo, hi) = variable.universe();
        for i in 0..=1000 {
            let x = lo + (hi - lo) * i as f64 / 1000.0;
            let sum: f64 = variable.degrees(x).iter().sum();
            if (sum - 1.0).abs() > 1e-9 {
                return Err(format!(
                    "variable `{}`: label degrees sum to {sum} at x = {x}, not a partition of unity",
                    variable.name()
                ));
            }
        }
    }
    Ok(format!("{} rules, complete", rulebase.rules().len()))
}
