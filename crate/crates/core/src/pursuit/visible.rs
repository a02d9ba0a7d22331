//! Visible-robber games (treewidth on the symmetric closure, DAG-width on the
//! digraph itself), decided by a backward attractor over cop positions.
//!
//! A cop position is `(C, v)` with `v ∉ C`. The cops announce `C'`; the robber
//! then runs to any `w ∈ Reach_{G−(C∩C')}(v) ∖ C'`, and is captured when that
//! set is empty. Under `require_monotone` a move with
//! `Reach_{G−(C∩C')}(v) ∩ (C ∖ C') ≠ ∅` is never played, since it hands the
//! robber the play.

use std::collections::VecDeque;

use crate::graph::{Graph, VertexSet};

use super::mask::{bits, MaskGraph, Placements};
use super::strategy::{explore_acyclic, ids, CopStrategy, PositionalStrategy, ReplayFailure};
use super::{
    check_cops, set_of, GameConfig, MoveSet, SolveError, SolveOutcome, Winner, Witness,
};

const NONE: u32 = u32::MAX;

fn arena(graph: &Graph, config: &GameConfig) -> Result<Graph, SolveError> {
    if !config.variant.is_visible() {
        return Err(SolveError::WrongVariant {
            variant: config.variant,
            solver: "visible-robber",
        });
    }
    check_cops(graph, config.cops)?;
    Ok(if config.variant == super::Variant::Tw {
        graph.symmetric_closure()
    } else {
        graph.clone()
    })
}

struct VisibleGame {
    g: MaskGraph,
    pl: Placements,
    monotone: bool,
    moves: MoveSet,
    /// `reach[p * n + v]`: robber component of `v` with placement `p` blocked.
    reach: Vec<u64>,
    add: Vec<u32>,
    remove: Vec<u32>,
}

impl VisibleGame {
    fn new(g: MaskGraph, config: &GameConfig) -> Result<Self, SolveError> {
        let n = g.n;
        let pl = Placements::new(n, config.cops, config.budget)?;
        let p_count = pl.len();
        let mut reach = vec![0u64; p_count * n];
        let mut add = vec![NONE; p_count * n];
        let mut remove = vec![NONE; p_count * n];
        for (p, &c) in pl.masks.iter().enumerate() {
            for v in 0..n {
                let bit = 1u64 << v;
                if c & bit == 0 {
                    reach[p * n + v] = g.reach(c, bit);
                    if (c.count_ones() as usize) < config.cops {
                        add[p * n + v] = pl.index_of(c | bit) as u32;
                    }
                } else {
                    remove[p * n + v] = pl.index_of(c & !bit) as u32;
                }
            }
        }
        Ok(VisibleGame {
            g,
            pl,
            monotone: config.require_monotone,
            moves: config.moves,
            reach,
            add,
            remove,
        })
    }

    /// Calls `f(next_placement, robber_responses)` for every admissible cop
    /// move at `(p, v)` until it returns true. Returns whether it did.
    fn any_move(&self, p: usize, v: usize, mut f: impl FnMut(usize, u64) -> bool) -> bool {
        let n = self.g.n;
        let c = self.pl.masks[p];
        match self.moves {
            MoveSet::Normalized => {
                for u in bits(c) {
                    let q = self.remove[p * n + u] as usize;
                    let r = self.reach[q * n + v];
                    if self.monotone && r & (1 << u) != 0 {
                        continue;
                    }
                    if f(q, r) {
                        return true;
                    }
                }
                let r = self.reach[p * n + v];
                for u in 0..n {
                    let q = self.add[p * n + u];
                    if q != NONE && f(q as usize, r & !(1 << u)) {
                        return true;
                    }
                }
                false
            }
            MoveSet::Full => {
                for (q, &next) in self.pl.masks.iter().enumerate() {
                    let kept = self.pl.index_of(c & next);
                    let r = self.reach[kept * n + v];
                    if self.monotone && r & c & !next != 0 {
                        continue;
                    }
                    if f(q, r & !next) {
                        return true;
                    }
                }
                false
            }
        }
    }

    /// Least fixed point of the cop attractor to capture. `choice[pos]` is the
    /// winning move, or `NONE` if the robber wins from `pos`.
    fn attractor(&self) -> Vec<u32> {
        let n = self.g.n;
        let mut choice = vec![NONE; self.pl.len() * n];
        loop {
            let mut changed = false;
            // Larger placements first: captures happen there.
            for p in (0..self.pl.len()).rev() {
                let c = self.pl.masks[p];
                for v in 0..n {
                    let idx = p * n + v;
                    if c & (1 << v) != 0 || choice[idx] != NONE {
                        continue;
                    }
                    let mut picked = NONE;
                    let won = self.any_move(p, v, |q, responses| {
                        let ok = bits(responses).all(|w| choice[q * n + w] != NONE);
                        if ok {
                            picked = q as u32;
                        }
                        ok
                    });
                    if won {
                        choice[idx] = picked;
                        changed = true;
                    }
                }
            }
            if !changed {
                return choice;
            }
        }
    }

    fn positions(&self) -> u64 {
        self.pl
            .masks
            .iter()
            .map(|c| (self.g.n - c.count_ones() as usize) as u64)
            .sum()
    }

    /// The strategy restricted to positions reachable from the start.
    fn extract(&self, choice: &[u32]) -> PositionalStrategy {
        let n = self.g.n;
        let mut strategy = PositionalStrategy::new();
        let mut seen = vec![false; choice.len()];
        let mut queue: VecDeque<usize> = (0..n).collect();
        seen[..n].fill(true);
        while let Some(idx) = queue.pop_front() {
            let (p, v) = (idx / n, idx % n);
            let q = choice[idx] as usize;
            let c = self.pl.masks[p];
            let next = self.pl.masks[q];
            strategy.insert(set_of(n, c), v, set_of(n, next));
            let kept = self.pl.index_of(c & next);
            for w in bits(self.reach[kept * n + v] & !next) {
                let child = q * n + w;
                if !seen[child] {
                    seen[child] = true;
                    queue.push_back(child);
                }
            }
        }
        strategy
    }
}

/// Decides the treewidth game (on the symmetric closure) or the DAG-width
/// game with `config.cops` cops. The robber picks the start vertex.
pub fn solve_visible(graph: &Graph, config: &GameConfig) -> Result<SolveOutcome, SolveError> {
    let arena = arena(graph, config)?;
    let g = MaskGraph::new(&arena)?;
    let n = g.n;
    if n == 0 {
        return Ok(SolveOutcome {
            winner: Winner::Cops,
            witness: Some(Witness::Positional(PositionalStrategy::new())),
            states_explored: 0,
        });
    }
    let game = VisibleGame::new(g, config)?;
    let choice = game.attractor();
    // Placement index 0 is the empty placement.
    let cops_win = (0..n).all(|v| choice[v] != NONE);
    Ok(SolveOutcome {
        winner: if cops_win { Winner::Cops } else { Winner::Robber },
        witness: cops_win.then(|| Witness::Positional(game.extract(&choice))),
        states_explored: game.positions(),
    })
}

/// Replays a cop strategy against every robber behaviour in the visible game
/// described by `config`. Succeeds iff every play is monotone (when required),
/// legal under the configured move set, and ends with a capture. Returns the
/// number of positions visited.
pub fn replay_visible_strategy(
    graph: &Graph,
    config: &GameConfig,
    strategy: &dyn CopStrategy,
) -> Result<usize, ReplayFailure> {
    let arena = arena(graph, config).map_err(|e| ReplayFailure::InvalidGame(e.to_string()))?;
    let n = arena.vertex_count();
    let starts = (0..n).map(|v| (VertexSet::empty(n), v));
    explore_acyclic(starts, |(cops, v)| {
        let next = strategy
            .next_placement(cops, *v)
            .ok_or_else(|| ReplayFailure::MissingMove {
                cops: ids(cops),
                robber: *v,
            })?;
        let changed = cops.difference(&next).len() + next.difference(cops).len();
        let legal = next.universe() == n
            && next.len() <= config.cops
            && (config.moves == MoveSet::Full || changed == 1);
        if !legal {
            return Err(ReplayFailure::IllegalMove {
                cops: ids(cops),
                robber: *v,
                next: ids(&next),
            });
        }
        let kept = cops.intersection(&next);
        let run = arena.reach_unchecked(&kept, &VertexSet::singleton(n, *v));
        if config.require_monotone && !run.is_disjoint(&cops.difference(&next)) {
            return Err(ReplayFailure::NonMonotone {
                cops: ids(cops),
                robber: *v,
                next: ids(&next),
            });
        }
        Ok(run
            .difference(&next)
            .iter()
            .map(|w| (next.clone(), w))
            .collect())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_complete_bipartite, gen_directed_cycle};
    use crate::pursuit::Variant;

    fn wins(graph: &Graph, variant: Variant, cops: usize) -> bool {
        solve_visible(graph, &GameConfig::new(variant, cops))
            .unwrap()
            .cops_win()
    }

    #[test]
    fn treewidth_of_k22() {
        let g = gen_complete_bipartite(2, 2).unwrap();
        assert!(wins(&g, Variant::Tw, 3));
        assert!(!wins(&g, Variant::Tw, 2));
    }

    #[test]
    fn dagw_single_vertex() {
        let g = Graph::new(vec!["v".into()], []).unwrap();
        assert!(wins(&g, Variant::Dagw, 1));
        assert!(!wins(&g, Variant::Dagw, 0));
    }

    /// Hand analysis: one cop on a 3-cycle must eventually lift and the
    /// robber runs around to the vacated vertex; two cops block the cycle
    /// and chase the robber down the remaining path.
    #[test]
    fn dagw_three_cycle() {
        let g = gen_directed_cycle(3).unwrap();
        assert!(!wins(&g, Variant::Dagw, 1));
        assert!(wins(&g, Variant::Dagw, 2));
    }

    #[test]
    fn empty_graph_is_won_vacuously() {
        let g = Graph::new(vec![], []).unwrap();
        assert!(wins(&g, Variant::Tw, 0));
    }

    #[test]
    fn rejects_wrong_variant_and_too_many_cops() {
        let g = gen_directed_cycle(3).unwrap();
        assert!(matches!(
            solve_visible(&g, &GameConfig::new(Variant::Kw, 1)),
            Err(SolveError::WrongVariant { .. })
        ));
        assert!(matches!(
            solve_visible(&g, &GameConfig::new(Variant::Dagw, 4)),
            Err(SolveError::TooManyCops { .. })
        ));
    }

    #[test]
    fn budget_is_enforced() {
        let g = gen_complete_bipartite(3, 3).unwrap();
        let config = GameConfig::new(Variant::Tw, 4).budget(10);
        assert!(matches!(
            solve_visible(&g, &config),
            Err(SolveError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn witnesses_replay() {
        let g = gen_complete_bipartite(2, 3).unwrap();
        for moves in [MoveSet::Normalized, MoveSet::Full] {
            let config = GameConfig::new(Variant::Tw, 3).moves(moves);
            let out = solve_visible(&g, &config).unwrap();
            let Some(Witness::Positional(strategy)) = out.witness else {
                panic!("cops should win with a witness");
            };
            assert!(replay_visible_strategy(&g, &config, &strategy).is_ok());
        }
    }

    #[test]
    fn replay_rejects_idle_strategy() {
        let g = gen_directed_cycle(3).unwrap();
        let config = GameConfig::new(Variant::Dagw, 2);
        let idle = |c: &VertexSet, _v: usize| Some(c.clone());
        assert!(matches!(
            replay_visible_strategy(&g, &config, &idle),
            Err(ReplayFailure::IllegalMove { .. })
        ));
        let full = config.moves(MoveSet::Full);
        assert!(matches!(
            replay_visible_strategy(&g, &full, &idle),
            Err(ReplayFailure::Cycle { .. })
        ));
    }
}
