use serde::Serialize;

use crate::graph::Graph;

use super::{solve, GameConfig, SolveError, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MeasureOutcome {
    pub variant: Variant,
    pub value: u32,
    /// Least winning cop count (`value + offset`).
    pub cops: usize,
    pub states_explored: u64,
}

/// Exact width measure with default settings (monotone, normalized moves).
pub fn measure(graph: &Graph, variant: Variant, budget: u64) -> Result<MeasureOutcome, SolveError> {
    measure_with(graph, &GameConfig::new(variant, 0).budget(budget))
}

/// Tries `0, 1, …, |V|` cops with the settings of `template` (its `cops` is
/// ignored) and reports the least winning count, shifted by the measure's
/// offset. The empty graph measures 0.
pub fn measure_with(graph: &Graph, template: &GameConfig) -> Result<MeasureOutcome, SolveError> {
    let variant = template.variant;
    let offset = variant.cop_offset();
    let mut states = 0;
    for cops in 0..=graph.vertex_count() {
        let out = solve(graph, &GameConfig { cops, ..*template })?;
        states += out.states_explored;
        if out.cops_win() {
            return Ok(MeasureOutcome {
                variant,
                value: (cops as u32).saturating_sub(offset),
                cops,
                states_explored: states,
            });
        }
    }
    unreachable!("|V| cops win every game on G");
}
