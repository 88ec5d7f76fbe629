//! Command-line front end for the `handsaw` library.

pub mod args;
pub mod commands;
pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::json;

use crate::args::{Cli, Command, PyramidCommand};
use crate::commands::Outcome;
use crate::verify::Scale;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Everything a run writes, so it can be checked without a subprocess.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(argv: I) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    RunOutput { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => RunOutput { code: EXIT_USAGE, stdout: String::new(), stderr: text },
            };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.workers {
        pool = pool.num_threads(k.max(1));
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => return RunOutput { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    };
    pool.install(|| dispatch(&cli))
}

fn dispatch(cli: &Cli) -> RunOutput {
    let outcome = match &cli.command {
        Command::Pyramid(PyramidCommand::Info(a)) => commands::pyramid_info(a),
        Command::FixedPoints(a) => commands::fixed_points(a),
        Command::Tangent(a) => commands::tangent(a),
        Command::Smallness(a) => commands::smallness(a),
        Command::Betti(a) => commands::betti(a),
        Command::Strata(a) => commands::strata_cmd(a),
        Command::Character(a) => commands::character(a),
        Command::Kl(a) => commands::kl(a),
        Command::Multiplicity(a) => commands::multiplicity(a),
        Command::Verify(a) => Ok(verify_outcome(if a.quick { Scale::Quick } else { Scale::Full }, cli.seed)),
    };
    match outcome {
        Ok(o) => RunOutput {
            code: if o.passed { EXIT_OK } else { EXIT_FAILED },
            stdout: if cli.json {
                let mut s = serde_json::to_string_pretty(&o.json).expect("json values serialize");
                s.push('\n');
                s
            } else {
                o.text
            },
            stderr: String::new(),
        },
        Err(e) => RunOutput { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

pub fn verify_outcome(scale: Scale, seed: u64) -> Outcome {
    let reports = verify::run_all(scale, seed);
    let passed = reports.iter().all(|r| r.passed);
    let label = match scale {
        Scale::Quick => "quick",
        Scale::Full => "full",
    };
    let mut text = String::new();
    for r in &reports {
        writeln!(text, "{}", r.line()).unwrap();
        for d in &r.details {
            writeln!(text, "      {d}").unwrap();
        }
    }
    let count = reports.iter().filter(|r| r.passed).count();
    writeln!(text, "verify ({label}, seed {seed}): {count}/{} criteria passed", reports.len()).unwrap();
    let json = json!({
        "scale": label,
        "seed": seed,
        "passed": passed,
        "criteria": reports.iter().map(verify::CriterionReport::to_json).collect::<Vec<_>>(),
    });
    Outcome { text, json, passed }
}
