//! Batch runner for the `instanton-core` verifiers: configuration files, check dispatch
//! and report files.

use std::fs;
use std::path::{Path, PathBuf};

use instanton_core::constructions::{
    build_g, check_cohomology_iy3, check_degeneracy, check_five_secant, check_l1l4x_resolution, check_x_divisor,
    general_sigma, thooft_instanton, triple_quadric, verify_claims, VerificationReport,
};
use instanton_core::geometry::{random_skew_config, ConfigFile, LineConfiguration, LineP3};
use instanton_core::{Field, FieldSpec, PrimeField, Rationals};
use serde_json::Value;

/// Exit status of a run that produced reports.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    /// Unreadable or unparseable input.
    #[error("invalid input: {0}")]
    Input(String),
    /// The verifiers rejected the configuration.
    #[error("{0}")]
    Precondition(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => EXIT_INPUT,
            RunError::Precondition(_) => EXIT_PRECONDITION,
        }
    }
}

fn precondition(e: instanton_core::Error) -> RunError {
    RunError::Precondition(e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, clap::ValueEnum)]
pub enum Check {
    /// The residual curve X in the intersection of two quadrics.
    XDivisor,
    /// Resolution of the ideal of four lines and X.
    Resolution,
    /// Cohomology of I_Y(3) for five lines.
    Cohomology,
    /// The intersection of three quadrics through L5.
    TripleQuadric,
    /// Degeneracy loci of the theta morphisms.
    Degeneracy,
    /// The saturated image of sigma equals I_Y.
    SigmaEpi,
    /// The sheaf G built from sigma.
    BuildG,
    /// A 't Hooft instanton from all lines of the configuration.
    Thooft,
    /// Absence of a line meeting five of the lines.
    FiveSecant,
    /// Intersection lengths with sampled ruling lines.
    Claims,
}

impl Check {
    pub const ALL: [Check; 7] =
        [Check::XDivisor, Check::Resolution, Check::Cohomology, Check::TripleQuadric, Check::SigmaEpi, Check::BuildG, Check::Thooft];

    pub fn name(self) -> &'static str {
        match self {
            Check::XDivisor => "x-divisor",
            Check::Resolution => "resolution",
            Check::Cohomology => "cohomology",
            Check::TripleQuadric => "triple-quadric",
            Check::Degeneracy => "degeneracy",
            Check::SigmaEpi => "sigma-epi",
            Check::BuildG => "build-g",
            Check::Thooft => "thooft",
            Check::FiveSecant => "five-secant",
            Check::Claims => "claims",
        }
    }
}

/// Everything that determines the output of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunSpec {
    /// Used when no configuration file is given.
    pub field: FieldSpec,
    pub seed: u64,
    pub config: Option<PathBuf>,
    pub checks: Vec<Check>,
    pub samples: usize,
    /// Number of lines of a generated configuration.
    pub lines: usize,
}

impl Default for RunSpec {
    fn default() -> Self {
        RunSpec { field: FieldSpec::default(), seed: 42, config: None, checks: Check::ALL.to_vec(), samples: 50, lines: 5 }
    }
}

pub fn read_config_file(path: &Path) -> Result<ConfigFile, RunError> {
    let text = fs::read_to_string(path).map_err(|e| RunError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| RunError::Input(format!("{}: {e}", path.display())))
}

fn load<F: Field>(field: &F, spec: &RunSpec, file: Option<&ConfigFile>) -> Result<LineConfiguration<F>, RunError> {
    match file {
        Some(file) => LineConfiguration::from_file(field, file).map_err(|e| RunError::Input(e.to_string())),
        None => random_skew_config(field, spec.lines, spec.seed).map_err(precondition),
    }
}

/// A random configuration as a file, for `gen-config`.
pub fn generate_config(spec: &RunSpec) -> Result<ConfigFile, RunError> {
    match spec.field {
        FieldSpec::Prime { p } => {
            let f = PrimeField::new(p).map_err(|e| RunError::Input(e.to_string()))?;
            Ok(load(&f, spec, None)?.to_file())
        }
        FieldSpec::Rationals { .. } => Ok(load(&Rationals, spec, None)?.to_file()),
    }
}

fn run_check<F: Field>(cfg: &LineConfiguration<F>, check: Check, spec: &RunSpec) -> instanton_core::Result<VerificationReport> {
    let seed = spec.seed;
    let mut report = match check {
        Check::XDivisor => check_x_divisor(cfg)?,
        Check::Resolution => {
            if cfg.len() < 4 {
                return Err(instanton_core::Error::Precondition(format!("need four lines, got {}", cfg.len())));
            }
            let ls: [&LineP3<F>; 4] = std::array::from_fn(|i| cfg.line(i));
            check_l1l4x_resolution(ls)?
        }
        Check::Cohomology => check_cohomology_iy3(cfg)?,
        Check::TripleQuadric => triple_quadric(cfg, [0, 1, 2, 3, 4])?,
        Check::Degeneracy => check_degeneracy(cfg)?,
        Check::SigmaEpi => general_sigma(cfg, seed)?.1,
        Check::BuildG => {
            let (sigma, epi) = general_sigma(cfg, seed)?;
            if !epi.passed() {
                return Ok(epi);
            }
            build_g(&sigma)?.1
        }
        Check::Thooft => thooft_instanton(cfg.lines(), seed)?.1,
        Check::FiveSecant => check_five_secant(cfg)?,
        Check::Claims => {
            let (sigma, _) = general_sigma(cfg, seed)?;
            verify_claims(&sigma, spec.samples, seed)?
        }
    };
    report.check = check.name().into();
    report.seed = Some(seed);
    report.detail("config", cfg.to_file().lines);
    Ok(report)
}

fn run_all<F: Field>(cfg: &LineConfiguration<F>, spec: &RunSpec) -> Result<Vec<VerificationReport>, RunError> {
    let mut checks = spec.checks.clone();
    checks.sort_by_key(|c| c.name());
    checks.dedup();
    let results: Vec<_> = std::thread::scope(|s| {
        let handles: Vec<_> = checks.iter().map(|&c| s.spawn(move || run_check(cfg, c, spec))).collect();
        handles.into_iter().map(|h| h.join().expect("verifier thread panicked")).collect()
    });
    results.into_iter().zip(&checks).map(|(r, c)| r.map_err(|e| RunError::Precondition(format!("{}: {e}", c.name())))).collect()
}

/// Runs the requested checks, ordered by name.
pub fn run(spec: &RunSpec) -> Result<Vec<VerificationReport>, RunError> {
    let file = spec.config.as_deref().map(read_config_file).transpose()?;
    let field = file.as_ref().map_or(spec.field, |f| f.field);
    match field {
        FieldSpec::Prime { p } => {
            let f = PrimeField::new(p).map_err(|e| RunError::Input(e.to_string()))?;
            run_all(&load(&f, spec, file.as_ref())?, spec)
        }
        FieldSpec::Rationals { .. } => run_all(&load(&Rationals, spec, file.as_ref())?, spec),
    }
}

pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().all(|r| r.passed()) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

/// One line per report, with the failed assertions.
pub fn summary(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        out.push_str(&format!("{status} {:<15} {}", r.check, r.field));
        if !r.a.is_empty() {
            let a: Vec<String> = r.a.iter().map(Value::to_string).collect();
            out.push_str(&format!(" a=({})", a.join(", ")));
        }
        let failures = r.failures();
        if !failures.is_empty() {
            out.push_str(&format!(" failed: {}", failures.join(", ")));
        }
        out.push('\n');
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    out.push_str(&format!("{passed}/{} checks passed\n", reports.len()));
    out
}

/// A single report as an object, several as an array.
pub fn reports_json(reports: &[VerificationReport]) -> String {
    let value = match reports {
        [one] => serde_json::to_value(one),
        many => serde_json::to_value(many),
    }
    .expect("reports serialize");
    let mut text = serde_json::to_string_pretty(&value).expect("reports serialize");
    text.push('\n');
    text
}

/// Reads a report file written by [`reports_json`].
pub fn read_reports(path: &Path) -> Result<Vec<VerificationReport>, RunError> {
    let text = fs::read_to_string(path).map_err(|e| RunError::Input(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| RunError::Input(format!("{}: {e}", path.display())))?;
    let parse = |v: Value| serde_json::from_value::<VerificationReport>(v).map_err(|e| RunError::Input(e.to_string()));
    match value {
        Value::Array(items) => items.into_iter().map(parse).collect(),
        other => Ok(vec![parse(other)?]),
    }
}
