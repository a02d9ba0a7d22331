//! Runs the four solver cross-check suites and prints one line each.
//!
//!     cargo run --release --example property_suites [SEED]

use anyhow::{ensure, Result};
use digraph_widths::report::{run_suite, Suite, DEFAULT_SEED};

pub fn run_example_with(seed: u64) -> Result<bool> {
    let mut ok = true;
    for suite in Suite::ALL {
        let r = run_suite(suite, seed);
        println!("{:<14} {:>6}/{:<6} {:>8.2}s", suite.name(), r.passed, r.total, r.seconds);
        for f in r.failures.iter().take(3) {
            println!("  instance {}: {}\n    {}", f.instance, f.detail, f.graph);
        }
        ok &= r.ok();
    }
    Ok(ok)
}

pub fn run_example() -> Result<()> {
    ensure!(run_example_with(DEFAULT_SEED)?, "a suite failed");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let seed = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(DEFAULT_SEED);
    ensure!(run_example_with(seed)?, "a suite failed");
    Ok(())
}
