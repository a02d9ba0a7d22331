//! Cliquewidth expressions for both families: colour counts, edge-exact
//! comparison with the generators, and the S-expression text form.
//!
//!     cargo run --example cliquewidth_expressions

use anyhow::{ensure, Result};
use digraph_widths::cliquewidth::{
    build_switch_all_expr, eval, parse_expr, verify_expr, verify_family_expr, CwExpr, CwFamily,
};
use digraph_widths::families::gen_switch_all;

pub fn run_example() -> Result<()> {
    let tiny = CwExpr::connect("a", "b", CwExpr::union(CwExpr::port("a", "u"), CwExpr::port("b", "v")));
    println!("{tiny}");
    let parsed = parse_expr(&tiny.to_string())?;
    println!("edges: {:?}\n", eval(&parsed)?.graph.edges().collect::<Vec<_>>());

    for family in [CwFamily::SwitchAll, CwFamily::Zadeh] {
        for n in 1..=8 {
            let r = verify_family_expr(family, n)?;
            ensure!(r.equal, "{} n = {n} differs: {r:?}", family.name());
            if n == 1 || n == 8 {
                println!(
                    "{:<10} n = {n}: {} colours, {} vertices, {} edges, equal = {}",
                    family.name(),
                    r.colour_count,
                    r.vertex_count,
                    r.edge_count,
                    r.equal
                );
            }
        }
    }

    // Negative control: drop the final x-connections.
    let CwExpr::Connect { child, .. } = build_switch_all_expr(1)? else { unreachable!() };
    let r = verify_expr(&child, &gen_switch_all(1)?)?;
    println!("\ntruncated expression: equal = {}, missing {:?}", r.equal, r.missing_edges);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
