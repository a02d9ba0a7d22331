//! Reproduces the bound table for both families as plain text; the JSON form
//! is what `dwidth report` prints.
//!
//!     cargo run --release --example bound_table [N_EXACT] [N_CERT]

use anyhow::Result;
use digraph_widths::cliquewidth::CwFamily;
use digraph_widths::pursuit::DEFAULT_BUDGET;
use digraph_widths::report::{run_report, Bound, ReportEntry};

fn bound(b: Bound) -> String {
    match b {
        Bound::Finite(v) => v.to_string(),
        Bound::Unbounded => "inf".into(),
        Bound::Unknown => "?".into(),
    }
}

fn line(e: &ReportEntry) -> String {
    format!(
        "  {:<5} claimed {:>4}  {:<16} n={:<4} value {:<4} {:<16} {:.3}s",
        e.measure,
        bound(e.claimed_bound),
        serde_json::to_value(e.provenance).unwrap().as_str().unwrap().to_string(),
        e.n.map_or("-".into(), |n| n.to_string()),
        e.value.map_or("-".into(), |v| v.to_string()),
        serde_json::to_value(e.status).unwrap().as_str().unwrap().to_string(),
        e.seconds
    )
}

pub fn run_example_with(n_exact: usize, n_cert: usize) -> Result<bool> {
    let mut ok = true;
    for family in [CwFamily::SwitchAll, CwFamily::Zadeh] {
        let r = run_report(family, n_exact, n_cert, DEFAULT_BUDGET)?;
        println!("{}:", r.family);
        for e in &r.entries {
            println!("{}", line(e));
        }
        ok &= r.all_verified;
    }
    Ok(ok)
}

pub fn run_example() -> Result<()> {
    anyhow::ensure!(run_example_with(1, 6)?, "some entry failed");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>());
    let n_exact = args.next().transpose()?.unwrap_or(1);
    let n_cert = args.next().transpose()?.unwrap_or(6);
    anyhow::ensure!(run_example_with(n_exact, n_cert)?, "some entry failed");
    Ok(())
}
