//! Exact width measures of small graphs, with the cop-side witness replayed.
//!
//!     cargo run --release --example solve_small_graphs

use anyhow::{bail, Result};
use digraph_widths::families::{gen_complete_bipartite, gen_directed_cycle, gen_random_digraph};
use digraph_widths::graph::Graph;
use digraph_widths::pursuit::{
    measure, replay_visible_strategy, solve, verify_sweep, GameConfig, SweepSemantics, Variant,
    Witness, DEFAULT_BUDGET,
};

fn row(label: &str, g: &Graph) -> Result<()> {
    let mut cells = Vec::new();
    for v in Variant::ALL {
        let m = measure(g, v, DEFAULT_BUDGET)?;
        cells.push(format!("{v}={}", m.value));
    }
    println!("{label:<22} {}", cells.join("  "));
    Ok(())
}

pub fn run_example() -> Result<()> {
    row("2-cycle", &gen_directed_cycle(2)?)?;
    row("5-cycle", &gen_directed_cycle(5)?)?;
    for k in 1..=3 {
        row(&format!("K_{k},{k}"), &gen_complete_bipartite(k, k)?)?;
    }
    for seed in 0..3 {
        row(&format!("random(6, 0.4, {seed})"), &gen_random_digraph(6, 0.4, seed)?)?;
    }

    // Every cops win comes with a witness that replays.
    let g = gen_random_digraph(6, 0.4, 1)?;
    for v in Variant::ALL {
        let k = measure(&g, v, DEFAULT_BUDGET)?.cops;
        let config = GameConfig::new(v, k);
        let out = solve(&g, &config)?;
        let ok = match &out.witness {
            Some(Witness::Positional(s)) if v.is_visible() => replay_visible_strategy(&g, &config, s).is_ok(),
            Some(Witness::Positional(s)) => {
                digraph_widths::pursuit::verify_ent_strategy(&g, s, k).winning
            }
            Some(Witness::Sweep(cert)) => {
                let sem = if v == Variant::Dpw { SweepSemantics::Dpw } else { SweepSemantics::Kw };
                verify_sweep(&g, cert, sem, true)?.verified
            }
            None => false,
        };
        if !ok {
            bail!("{v} witness with {k} cops failed to replay");
        }
        println!("{v}: {k} cops, witness replays, {} states", out.states_explored);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
