//! Runs AC1 to AC11 at full level and prints one line per criterion.
//! Exits non-zero if any criterion fails or overruns its time bound.

use std::process::ExitCode;
use std::time::Duration;

use covers_core::verify::{run_check, Level, CHECK_TITLES};

fn time_bound(id: usize) -> Option<Duration> {
    match id {
        1 => Some(Duration::from_secs(5)),
        4 => Some(Duration::from_secs(600)),
        10 => Some(Duration::from_secs(1)),
        _ => None,
    }
}

fn main() -> ExitCode {
    let mut failures = 0;
    for id in 1..=CHECK_TITLES.len() {
        let mut outcome = run_check(id, Level::Full);
        if let Some(bound) = time_bound(id) {
            if outcome.elapsed > bound {
                outcome.passed = false;
                outcome.detail = format!("{} (took {:?}, bound {bound:?})", outcome.detail, outcome.elapsed);
            }
        }
        println!("{} [{:.2?}]", outcome.line(), outcome.elapsed);
        if !outcome.passed {
            failures += 1;
        }
    }
    println!("acceptance: {} passed, {failures} failed", CHECK_TITLES.len() - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
