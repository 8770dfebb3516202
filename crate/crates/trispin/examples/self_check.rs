//! Runs the full cross-validation battery in process.
//!
//! Equivalent to `trispin verify --trials 100 --seed 42`.
//!
//! ```bash
//! cargo run --release --example self_check
//! ```

use std::time::Instant;

use trispin::verify::run_battery;

fn main() {
    let trials = 100;
    let seed = 42;
    eprintln!("running the battery with {trials} trials per check, seed {seed}");

    let start = Instant::now();
    let report = run_battery(trials, seed);
    for check in &report.checks {
        if check.passed {
            println!("ok   {}", check.name);
        } else {
            println!("FAIL {}: {}", check.name, check.detail);
        }
    }
    let passed = report.checks.iter().filter(|c| c.passed).count();
    println!("{passed}/{} checks passed", report.checks.len());
    eprintln!("elapsed: {:.1} s", start.elapsed().as_secs_f64());

    if !report.all_passed() {
        std::process::exit(1);
    }
}
