//! Entanglement: the one-cop characterization, the exact solver, and the
//! three-cop strategy on the switch-all graphs checked against every robber.
//!
//!     cargo run --release --example entanglement_strategy

use anyhow::{ensure, Result};
use digraph_widths::families::{gen_directed_cycle, gen_switch_all};
use digraph_widths::graph::Graph;
use digraph_widths::pursuit::{
    ent_strategy_switch_all, entanglement_is_one, measure, solve_entanglement, verify_ent_strategy,
    FeedbackStrategy, Variant, DEFAULT_BUDGET,
};

pub fn run_example() -> Result<()> {
    let bowtie = Graph::from_named_edges(
        &["m", "a", "b"],
        [("m", "a"), ("a", "m"), ("m", "b"), ("b", "m")],
    )?;
    let triangle = Graph::from_named_edges(
        &["a", "b", "c"],
        [("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"), ("a", "c"), ("c", "a")],
    )?;
    for (label, g) in [("4-cycle", gen_directed_cycle(4)?), ("bowtie", bowtie), ("bidirected triangle", triangle)] {
        let ent = measure(&g, Variant::Ent, DEFAULT_BUDGET)?.value;
        println!("{label:<20} ent = {ent}, one-cop characterization: {}", entanglement_is_one(&g));
    }

    let cycle = gen_directed_cycle(6)?;
    let chase = FeedbackStrategy::new(&cycle, &cycle.empty_set()).expect("a cycle has a feedback vertex");
    println!("one chaser on a 6-cycle: {}", verify_ent_strategy(&cycle, &chase, 1).winning);

    let g1 = gen_switch_all(1)?;
    println!("exact: 3 cops on G_1 -> {:?}", solve_entanglement(&g1, 3, DEFAULT_BUDGET)?.winner);

    for n in 1..=8 {
        let g = gen_switch_all(n)?;
        let s = ent_strategy_switch_all(n)?;
        let v = verify_ent_strategy(&g, &s, 3);
        let feedback: Vec<&str> = s.feedback_vertices().iter().map(|v| g.name(v)).collect();
        println!(
            "n = {n}: strategy wins: {} ({} positions), chase on {}",
            v.winning,
            v.positions_explored,
            feedback.join(" ")
        );
        ensure!(v.winning);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
