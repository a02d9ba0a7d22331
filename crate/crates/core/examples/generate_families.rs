//! Builds the two counterexample families and a few auxiliary graphs, and
//! shows the JSON and DOT encodings.
//!
//!     cargo run --example generate_families

use anyhow::Result;
use digraph_widths::families::{
    gen_complete_bipartite, gen_random_digraph, gen_switch_all, gen_zadeh, is_bidirectional_clique,
    ZadehLayout,
};
use digraph_widths::graph::{parse_graph, serialize_graph, to_dot};

pub fn run_example() -> Result<()> {
    for n in [1, 2, 4, 8] {
        let g = gen_switch_all(n)?;
        let z = gen_zadeh(n)?;
        let l = ZadehLayout::new(n);
        let ks: Vec<usize> = (1..=n).map(|i| l.k(i)).collect();
        println!(
            "n = {n}: G_n {:>3} vertices {:>4} edges | Z_n {:>3} vertices {:>4} edges, k-clique: {}",
            g.vertex_count(),
            g.edge_count(),
            z.vertex_count(),
            z.edge_count(),
            is_bidirectional_clique(&z, &ks)
        );
    }

    let g1 = gen_switch_all(1)?;
    let sccs: Vec<Vec<&str>> = g1
        .sccs()
        .into_iter()
        .filter(|c| g1.is_nontrivial_component(c))
        .map(|c| c.into_iter().map(|v| g1.name(v)).collect())
        .collect();
    println!("cyclic components of G_1: {sccs:?}");

    let k22 = gen_complete_bipartite(2, 2)?;
    println!("K_2,2 as JSON: {}", serialize_graph(&k22));
    print!("K_2,2 as DOT:\n{}", to_dot(&k22));

    // same seed, same graph
    let r = gen_random_digraph(6, 0.3, 42)?;
    assert_eq!(r, gen_random_digraph(6, 0.3, 42)?);
    assert_eq!(parse_graph(serialize_graph(&r).as_bytes())?, r);
    println!("random digraph (v=6, p=0.3, seed=42): {} edges", r.edge_count());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
