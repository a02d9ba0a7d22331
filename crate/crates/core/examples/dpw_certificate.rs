//! The four-cop clearing sequence for the switch-all graphs, checked under
//! both invisible-robber update rules, plus an exact cross-check at n = 1.
//!
//!     cargo run --release --example dpw_certificate

use anyhow::{ensure, Result};
use digraph_widths::families::gen_switch_all;
use digraph_widths::pursuit::{
    dpw_sweep_certificate_switch_all, solve, verify_sweep, GameConfig, SweepCertificate,
    SweepSemantics, Variant,
};

pub fn run_example() -> Result<()> {
    let g1 = gen_switch_all(1)?;
    let cert = dpw_sweep_certificate_switch_all(1)?;
    for (i, p) in cert.named(&g1).iter().enumerate().take(8) {
        println!("step {i:>2}: {{{}}}", p.join(", "));
    }
    println!("...");

    for n in [1, 2, 4, 8, 16] {
        let g = gen_switch_all(n)?;
        let cert = dpw_sweep_certificate_switch_all(n)?;
        let dpw = verify_sweep(&g, &cert, SweepSemantics::Dpw, true)?;
        let kw = verify_sweep(&g, &cert, SweepSemantics::Kw, true)?;
        println!(
            "n = {n:>2}: {:>3} placements, max {} cops, dpw verified {}, kw verified {}",
            dpw.steps, dpw.max_placement, dpw.verified, kw.verified
        );
        ensure!(dpw.verified && kw.verified);
    }

    // Visiting f_1 before g_1 lets the robber back onto f_1.
    let literal = SweepCertificate::from_named(
        &g1,
        4,
        &[
            &["r"],
            &["r", "s"],
            &["r", "s", "e_1"],
            &["r", "s", "e_1", "d_1"],
            &["r", "s", "e_1"],
            &["r", "s", "e_1", "f_1"],
            &["r", "s", "e_1"],
            &["r", "s", "e_1", "g_1"],
        ],
    )?;
    let r = verify_sweep(&g1, &literal, SweepSemantics::Dpw, true)?;
    println!("f-before-g order: first recontamination at step {:?}", r.first_violation);

    let exact = solve(&g1, &GameConfig::new(Variant::Dpw, 4))?;
    println!("exact DPW game on G_1 with 4 cops: {:?}", exact.winner);
    ensure!(exact.cops_win());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
