//! The `wavepacket-am` command line.
//!
//! ```text
//! wavepacket-am scenario <NAME> [--set key=value]... [--out DIR] [--render] [--format json|csv]
//! wavepacket-am invariants [--seed N] [--cases M] [--out DIR]
//! wavepacket-am boost-file <IN.csv> <OUT.csv> [--set ux=..] [--set uy=..] [--set uz=..]
//! ```
//!
//! Scenario keys and defaults are listed in [`crate::scenarios`]. Without
//! `--out` the report goes to stdout; with it, `report.json` (or
//! `report.csv`) is written to `DIR` and a one-line-per-check summary is
//! printed. `--render` writes per-frame field CSV and PPM files next to the
//! report, or into the current directory.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! and input errors.

use std::fs;
use std::io::{BufReader, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::invariants::{run_invariants, DEFAULT_CASES, DEFAULT_SEED};
use crate::minkowski::{Boost, Vec3};
use crate::scenarios::{parse_override, render, resolve_params, run_scenario, ScenarioReport};
use crate::spectrum::{boost_spectrum, read_csv, write_csv};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "wavepacket-am",
    version,
    about = "Angular momentum of relativistic wavepackets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a worked example and check it against closed forms.
    Scenario {
        /// plane-wave, two-wave, bessel, bessel-boost or stv2d
        name: String,
        /// Override a parameter (repeatable).
        #[arg(long = "set", value_name = "KEY=VALUE")]
        set: Vec<String>,
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        /// Also write field CSV/PPM files for each frame.
        #[arg(long)]
        render: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Randomized checks of the frame-independence identities.
    Invariants {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_CASES)]
        cases: usize,
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Boost a spectrum CSV into a frame moving with `(ux, uy, uz)`.
    BoostFile {
        input: PathBuf,
        output: PathBuf,
        #[arg(long = "set", value_name = "KEY=VALUE")]
        set: Vec<String>,
    },
}

/// Everything a `scenario` run needs.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub scenario: String,
    pub overrides: Vec<(String, f64)>,
    pub out_dir: Option<PathBuf>,
    pub format: ReportFormat,
    pub render: bool,
}

impl RunConfig {
    pub fn new(scenario: impl Into<String>) -> Self {
        RunConfig {
            scenario: scenario.into(),
            overrides: Vec::new(),
            out_dir: None,
            format: ReportFormat::Json,
            render: false,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match cli.command {
        Command::Scenario {
            name,
            set,
            out: dir,
            render,
            format,
        } => parse_overrides(&set).and_then(|overrides| {
            cmd_scenario(
                &RunConfig {
                    scenario: name,
                    overrides,
                    out_dir: dir,
                    format,
                    render,
                },
                out,
            )
        }),
        Command::Invariants { seed, cases, out: dir } => cmd_invariants(seed, cases, dir.as_deref(), out),
        Command::BoostFile { input, output, set } => parse_overrides(&set)
            .and_then(|o| boost_velocity(&o))
            .and_then(|u| cmd_boost_file(&input, u, &output)),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_overrides(set: &[String]) -> Result<Vec<(String, f64)>> {
    set.iter().map(|s| parse_override(s)).collect()
}

fn boost_velocity(overrides: &[(String, f64)]) -> Result<Vec3> {
    let mut u = Vec3::zeros();
    for (key, value) in overrides {
        match key.as_str() {
            "ux" => u.x = *value,
            "uy" => u.y = *value,
            "uz" => u.z = *value,
            _ => {
                return Err(Error::UnknownKey {
                    key: key.clone(),
                    known: "ux, uy, uz".to_string(),
                })
            }
        }
    }
    Ok(u)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::io(path, e))
}

fn summary(report: &ScenarioReport, out: &mut dyn Write) -> std::io::Result<()> {
    for c in &report.checks {
        writeln!(
            out,
            "{} {:<44} err {:.3e} tol {:.0e}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.err,
            c.tolerance
        )?;
    }
    for w in &report.warnings {
        writeln!(out, "warning: {w}")?;
    }
    let failed = report.failures().count();
    writeln!(
        out,
        "{}: {} checks, {} failed",
        report.scenario,
        report.checks.len(),
        failed
    )
}

/// Runs a scenario and writes its report; returns the exit code.
pub fn cmd_scenario(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let params = resolve_params(&cfg.scenario, &cfg.overrides)?;
    let report = run_scenario(&cfg.scenario, &params)?;
    let text = match cfg.format {
        ReportFormat::Json => report.to_json() + "\n",
        ReportFormat::Csv => report.to_csv(),
    };
    let stdout_err = |e: std::io::Error| Error::io("<stdout>", e);
    match &cfg.out_dir {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
            let name = match cfg.format {
                ReportFormat::Json => "report.json",
                ReportFormat::Csv => "report.csv",
            };
            write_file(&dir.join(name), &text)?;
            summary(&report, out).map_err(stdout_err)?;
        }
        None => out.write_all(text.as_bytes()).map_err(stdout_err)?,
    }
    if cfg.render {
        let dir = cfg.out_dir.clone().unwrap_or_else(|| PathBuf::from("."));
        render(&cfg.scenario, &params, &dir)?;
    }
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

/// Runs the randomized invariants and prints the largest error of each.
pub fn cmd_invariants(seed: u64, cases: usize, out_dir: Option<&Path>, out: &mut dyn Write) -> Result<i32> {
    let report = run_invariants(seed, cases)?;
    let stdout_err = |e: std::io::Error| Error::io("<stdout>", e);
    for c in &report.checks {
        writeln!(
            out,
            "{} {:<40} max err {:.3e} tol {:.0e}",
            if c.pass { "PASS" } else { "FAIL" },
            c.name,
            c.max_error,
            c.tolerance
        )
        .map_err(stdout_err)?;
    }
    writeln!(out, "seed {seed}, {cases} cases").map_err(stdout_err)?;
    if let Some(dir) = out_dir {
        fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
        write_file(&dir.join("invariants.json"), &(report.to_json() + "\n"))?;
    }
    Ok(if report.passed() { EXIT_PASS } else { EXIT_FAIL })
}

/// Boosts every sample of a spectrum CSV.
pub fn cmd_boost_file(input: &Path, u: Vec3, output: &Path) -> Result<i32> {
    let b = Boost::new(u)?;
    let file = fs::File::open(input).map_err(|e| Error::io(input, e))?;
    let cloud = read_csv(BufReader::new(file)).map_err(|e| match e {
        Error::Csv { line, message } => Error::Csv {
            line,
            message: format!("{}: {message}", input.display()),
        },
        other => other,
    })?;
    let boosted = boost_spectrum(&cloud.into(), &b);
    let mut buf = Vec::new();
    write_csv(&mut buf, &boosted).map_err(|e| Error::io(output, e))?;
    fs::write(output, buf).map_err(|e| Error::io(output, e))?;
    Ok(EXIT_PASS)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("wavepacket-am").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn two_wave_passes() {
        let (code, out, _) = run_args(&["scenario", "two-wave"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["scenario"], "two-wave");
        assert_eq!(v["params"]["kz"], 0.8);
    }

    #[test]
    fn unknown_scenario_lists_names() {
        let (code, _, err) = run_args(&["scenario", "bogus"]);
        assert_eq!(code, 2);
        assert!(err.contains("stv2d") && err.contains("two-wave"));
    }

    #[test]
    fn unknown_key_is_named() {
        let (code, _, err) = run_args(&["scenario", "two-wave", "--set", "kq=1"]);
        assert_eq!(code, 2);
        assert!(err.contains("kq"));
    }

    #[test]
    fn zero_cases_is_usage_error() {
        assert_eq!(run_args(&["invariants", "--cases", "0"]).0, 2);
    }

    #[test]
    fn superluminal_boost_file_is_usage_error() {
        let dir = tempfile::tempdir().unwrap();
        let input = dir.path().join("in.csv");
        fs::write(&input, "kx,ky,kz,mass,re_a,im_a,sigma,weight\n0,0,1,0,1,0,1,1\n").unwrap();
        let output = dir.path().join("out.csv");
        let (code, _, err) = run_args(&[
            "boost-file",
            input.to_str().unwrap(),
            output.to_str().unwrap(),
            "--set",
            "uz=1",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("boost"));
    }

    #[test]
    fn help_exits_zero() {
        let (code, out, _) = run_args(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("scenario"));
    }
}
