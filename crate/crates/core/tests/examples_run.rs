// Each example doubles as a smoke test: its `run_example` runs here too.

#[path = "../examples/generate_families.rs"]
mod generate_families;
#[path = "../examples/solve_small_graphs.rs"]
mod solve_small_graphs;
#[path = "../examples/dpw_certificate.rs"]
mod dpw_certificate;
#[path = "../examples/entanglement_strategy.rs"]
mod entanglement_strategy;
#[path = "../examples/cliquewidth_expressions.rs"]
mod cliquewidth_expressions;
#[allow(dead_code)]
#[path = "../examples/bound_table.rs"]
mod bound_table;
#[allow(dead_code)]
#[path = "../examples/property_suites.rs"]
mod property_suites;

#[test]
fn generate_families_runs() {
    generate_families::run_example().unwrap();
}

#[test]
fn solve_small_graphs_runs() {
    solve_small_graphs::run_example().unwrap();
}

#[test]
fn dpw_certificate_runs() {
    dpw_certificate::run_example().unwrap();
}

#[test]
fn entanglement_strategy_runs() {
    entanglement_strategy::run_example().unwrap();
}

#[test]
fn cliquewidth_expressions_runs() {
    cliquewidth_expressions::run_example().unwrap();
}

#[test]
fn bound_table_small_verifies() {
    assert!(bound_table::run_example_with(1, 3).unwrap());
}

#[test]
fn property_suites_pass_at_another_seed() {
    assert!(property_suites::run_example_with(7).unwrap());
}
