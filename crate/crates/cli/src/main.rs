use clap::{Parser, Subcommand};
use serde_json::json;
use specrad::bounds::{BoundsError, Tolerances};
use specrad::harness::{run_suite, Model, SuiteResult, TrialConfig, ALL_PROPERTIES};
use specrad::linalg::LinalgError;
use specrad_cli::formats::{parse_input, parse_matrix_market, FormatError, ParsedInput};
use specrad_cli::report::{build_report, render_text};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exit codes: 0 success, 1 fuzz violations, 2 parse/validation errors,
/// 3 solver non-convergence.
#[derive(Parser)]
#[command(
    name = "specrad",
    version,
    about = "Spectral radii of graph, digraph and matrix inputs, with sharp row-support upper bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct ToleranceArgs {
    /// Relative tolerance for bound-equals-radius checks
    #[arg(long, default_value_t = 1e-8)]
    tolerance_gap: f64,
    /// Relative tolerance for expression-equality and argmax ties
    #[arg(long, default_value_t = 1e-9)]
    tolerance_eq: f64,
}

impl ToleranceArgs {
    fn tolerances(&self) -> Tolerances {
        Tolerances {
            gap_tol: self.tolerance_gap,
            eq_tol: self.tolerance_eq,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Exact radii, bounds, gaps and diagnostics for a graph, digraph or
    /// matrix file (format auto-detected)
    Report {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        /// Reject signed matrices instead of routing them through the
        /// modulus bound
        #[arg(long)]
        require_nonnegative: bool,
        #[command(flatten)]
        tolerances: ToleranceArgs,
    },
    /// Matrix-only report; the input must be a Matrix Market file
    CheckMatrix {
        path: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        require_nonnegative: bool,
        #[command(flatten)]
        tolerances: ToleranceArgs,
    },
    /// Degree-regularity classification of an undirected graph
    Classify {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Run the property suite over randomly generated instances
    Fuzz {
        /// gnp | random-regular | bipartite-semiregular | digraph-gnp |
        /// nonneg-matrix | signed-matrix
        #[arg(long, default_value = "gnp")]
        model: String,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        size_min: usize,
        #[arg(long, default_value_t = 20)]
        size_max: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        /// Resample until connected / strongly connected / irreducible
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        tolerances: ToleranceArgs,
    },
}

enum CliError {
    Io { path: String, message: String },
    Format(FormatError),
    Validation(String),
    Solver(LinalgError),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "io",
            CliError::Format(_) => "parse",
            CliError::Validation(_) => "validation",
            CliError::Solver(_) => "solver",
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Solver(_) => 3,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Io { path, message } => format!("{path}: {message}"),
            CliError::Format(e) => e.to_string(),
            CliError::Validation(m) => m.clone(),
            CliError::Solver(e) => e.to_string(),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Format(e)
    }
}

impl From<BoundsError> for CliError {
    fn from(e: BoundsError) -> Self {
        match e {
            BoundsError::Solver(s) => CliError::Solver(s),
            other => CliError::Validation(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let object = json!({
                "error": {
                    "code": err.exit_code(),
                    "kind": err.kind(),
                    "message": err.message(),
                }
            });
            eprintln!("{object}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn emit(value: &serde_json::Value, json: bool) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("valid tree"));
    } else {
        print!("{}", render_text(value));
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Report {
            path,
            json,
            require_nonnegative,
            tolerances,
        } => {
            let input = parse_input(&read_input(&path)?)?;
            let report = build_report(
                &path.display().to_string(),
                &input,
                &tolerances.tolerances(),
                require_nonnegative,
            )?;
            emit(&report, json);
            Ok(0)
        }
        Command::CheckMatrix {
            path,
            json,
            require_nonnegative,
            tolerances,
        } => {
            let matrix = parse_matrix_market(&read_input(&path)?)?;
            let report = build_report(
                &path.display().to_string(),
                &ParsedInput::Matrix(matrix),
                &tolerances.tolerances(),
                require_nonnegative,
            )?;
            emit(&report, json);
            Ok(0)
        }
        Command::Classify { path, json } => {
            let input = parse_input(&read_input(&path)?)?;
            let ParsedInput::Graph(g) = input else {
                return Err(CliError::Validation(format!(
                    "classify expects an undirected graph, got a {}",
                    input.kind_label()
                )));
            };
            let value = match specrad::graphs::classify(&g) {
                specrad::GraphClass::Regular(r) => json!({
                    "classification": { "type": "regular", "degree": r }
                }),
                specrad::GraphClass::BipartiteSemiRegular { r, s, parts } => json!({
                    "classification": {
                        "type": "bipartite-semi-regular",
                        "degrees": [r, s],
                        "parts": [parts.0, parts.1],
                    }
                }),
                specrad::GraphClass::Other => json!({
                    "classification": { "type": "other" }
                }),
            };
            emit(&value, json);
            Ok(0)
        }
        Command::Fuzz {
            model,
            trials,
            seed,
            size_min,
            size_max,
            density,
            connected,
            json,
            tolerances,
        } => {
            let model: Model = model.parse().map_err(CliError::Validation)?;
            let config = TrialConfig {
                model,
                size_range: (size_min, size_max),
                density,
                degree: None,
                trials,
                seed,
                tolerances: tolerances.tolerances(),
                require_connected: connected,
            };
            let result = run_suite(&config, &ALL_PROPERTIES)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            // wall time goes to stderr so stdout stays byte-reproducible
            eprintln!("wall time: {:?}", result.wall_time);
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&result).expect("suite results serialize")
                );
            } else {
                print!("{}", suite_text(&result));
            }
            Ok(if result.passed() { 0 } else { 1 })
        }
    }
}

fn suite_text(result: &SuiteResult) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "model: {}\nseed: {}\ntrials: {}\nsize: [{}, {}]\ndensity: {}\n",
        result.config.model,
        result.config.seed,
        result.config.trials,
        result.config.size_range.0,
        result.config.size_range.1,
        result.config.density,
    ));
    for (property, counts) in &result.properties {
        out.push_str(&format!(
            "property {}: pass {} fail {} skip {}\n",
            property.label(),
            counts.pass,
            counts.fail,
            counts.skip
        ));
    }
    out.push_str(&format!("violations: {}\n", result.violations.len()));
    for v in &result.violations {
        out.push_str(&format!(
            "  trial {} seed {} property {}: {}\n",
            v.trial_index,
            v.trial_seed,
            v.property.label(),
            v.observed.detail
        ));
    }
    out
}
