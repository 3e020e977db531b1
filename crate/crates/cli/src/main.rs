use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use instanton::{exit_code, generate_config, read_reports, reports_json, run, summary, Check, RunError, RunSpec, EXIT_INPUT};
use instanton_core::FieldSpec;

#[derive(Parser)]
#[command(name = "instanton", version, about = "Verifies instanton constructions from skew lines in P^3")]
struct Cli {
    /// Prime field modulus (default 32003).
    #[arg(long, global = true, env = "INSTANTON_P", conflicts_with = "rationals")]
    p: Option<u64>,
    /// Work over the rationals.
    #[arg(long, global = true, env = "INSTANTON_RATIONALS")]
    rationals: bool,
    /// Seed for configurations, coefficients and extension classes.
    #[arg(long, global = true, env = "INSTANTON_SEED", default_value_t = 42)]
    seed: u64,
    /// Line configuration file (JSON); a random one is generated otherwise.
    #[arg(long, global = true, env = "INSTANTON_CONFIG")]
    config: Option<PathBuf>,
    /// Where to write JSON output.
    #[arg(long, global = true, env = "INSTANTON_OUT")]
    out: Option<PathBuf>,
    /// Ruling lines sampled by the claims check.
    #[arg(long, global = true, env = "INSTANTON_SAMPLES", default_value_t = 50)]
    samples: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a random configuration of skew lines with no 5-secant.
    GenConfig {
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Run one check.
    Check {
        #[arg(value_enum)]
        name: Check,
    },
    /// Run the standard checks.
    Verify {
        #[arg(value_parser = ["all"])]
        what: String,
    },
    /// Summarize a report file; exits 0 when every report passed.
    Report { path: PathBuf },
}

impl Cli {
    fn field(&self) -> Result<FieldSpec, RunError> {
        match (self.p, self.rationals) {
            (_, true) => Ok(FieldSpec::rationals()),
            (Some(p), false) => FieldSpec::prime(p).map_err(|e| RunError::Input(e.to_string())),
            (None, false) => Ok(FieldSpec::default()),
        }
    }

    fn spec(&self, checks: Vec<Check>) -> Result<RunSpec, RunError> {
        let field = self.field()?;
        if let Some(path) = &self.config {
            let file = instanton::read_config_file(path)?;
            if (self.p.is_some() || self.rationals) && file.field != field {
                return Err(RunError::Input(format!("--p/--rationals give {field} but the config is over {}", file.field)));
            }
        }
        Ok(RunSpec { field, seed: self.seed, config: self.config.clone(), checks, samples: self.samples, ..RunSpec::default() })
    }
}

fn write_out(out: &Option<PathBuf>, text: &str) -> Result<(), RunError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| RunError::Input(format!("{}: {e}", path.display()))),
        None => Ok(()),
    }
}

fn execute(cli: &Cli) -> Result<i32, RunError> {
    match &cli.command {
        Command::GenConfig { n } => {
            let spec = RunSpec { lines: *n, ..cli.spec(vec![])? };
            let mut text = serde_json::to_string_pretty(&generate_config(&spec)?).expect("config serializes");
            text.push('\n');
            match &cli.out {
                Some(_) => write_out(&cli.out, &text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Check { name } => {
            let reports = run(&cli.spec(vec![*name])?)?;
            print!("{}", summary(&reports));
            write_out(&cli.out, &reports_json(&reports))?;
            Ok(exit_code(&reports))
        }
        Command::Verify { .. } => {
            let reports = run(&cli.spec(Check::ALL.to_vec())?)?;
            print!("{}", summary(&reports));
            write_out(&cli.out, &reports_json(&reports))?;
            Ok(exit_code(&reports))
        }
        Command::Report { path } => {
            let reports = read_reports(path)?;
            print!("{}", summary(&reports));
            Ok(exit_code(&reports))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = execute(&cli).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        e.exit_code()
    });
    ExitCode::from(u8::try_from(code).unwrap_or(EXIT_INPUT as u8))
}
