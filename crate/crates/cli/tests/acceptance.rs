//! Acceptance suite: one PASS/FAIL line per criterion, full-scale grids.
//! Runs without the libtest harness so the lines always reach stdout.

use std::process::Command;
use std::time::{Duration, Instant};

use handsaw_cli::args::DEFAULT_SEED;
use handsaw_cli::verify::{run_criterion, Scale, CRITERIA};

const BETTI_BUDGET: Duration = Duration::from_secs(60);
const KL_BUDGET: Duration = Duration::from_secs(30);
const SUITE_BUDGET: Duration = Duration::from_secs(300);

fn verify_quick(workers: usize) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_handsaw"))
        .args(["verify", "--quick", "--workers", &workers.to_string()])
        .output()
        .expect("run handsaw");
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn main() {
    let start = Instant::now();
    let mut failed = Vec::new();
    let mut lines = Vec::new();
    for &(id, _) in &CRITERIA {
        let t = Instant::now();
        let report = run_criterion(id, Scale::Full, DEFAULT_SEED);
        let elapsed = t.elapsed();
        let mut passed = report.passed;
        let budget = match id {
            2 => Some(BETTI_BUDGET),
            7 => Some(KL_BUDGET),
            _ => None,
        };
        let mut line = report.line();
        if let Some(b) = budget {
            if elapsed > b {
                passed = false;
                line = format!("[FAIL] {}. {} (took {elapsed:?}, budget {b:?})", id, report.title);
            }
        }
        lines.push(line);
        for d in &report.details {
            lines.push(format!("      {d}"));
        }
        if !passed {
            failed.push(id);
        }
    }

    let first = verify_quick(1);
    let second = verify_quick(4);
    let deterministic = first == second && !first.is_empty();
    lines.push(format!(
        "[{}] 10. verify --quick is byte-identical with 1 and 4 workers",
        if deterministic { "PASS" } else { "FAIL" }
    ));
    if !deterministic {
        failed.push(10);
    }

    let total = start.elapsed();
    let in_budget = total <= SUITE_BUDGET;
    lines.push(format!("[{}] suite finished within {SUITE_BUDGET:?}", if in_budget { "PASS" } else { "FAIL" }));
    for l in &lines {
        println!("{l}");
    }
    if !in_budget || !failed.is_empty() {
        eprintln!("acceptance failed: criteria {failed:?}, total {total:?}");
        std::process::exit(1);
    }
    println!("acceptance: all criteria passed");
}
