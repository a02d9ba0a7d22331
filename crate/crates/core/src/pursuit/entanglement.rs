//! The entanglement game. The robber must leave its vertex along an edge every
//! round; the cops may stay put, put a new cop on the robber's vertex, or move
//! one cop there. Finite plays (the robber gets stuck) are won by the cops,
//! infinite plays by the robber. Cops need not play monotonically.

use std::collections::VecDeque;

use serde::Serialize;

use crate::families::{gen_switch_all, FamilyError, SwitchAllLayout};
use crate::graph::{Graph, VertexSet};

use super::mask::{bits, MaskGraph, Placements};
use super::strategy::{explore_acyclic, ids, CopStrategy, PositionalStrategy, ReplayFailure};
use super::{set_of, SolveError, SolveOutcome, Winner, Witness};

const NONE: u32 = u32::MAX;

/// Decides whether `k` cops catch the robber, which picks the start vertex.
/// A cops win carries a positional strategy over the reachable positions.
pub fn solve_entanglement(graph: &Graph, k: usize, budget: u64) -> Result<SolveOutcome, SolveError> {
    super::check_cops(graph, k)?;
    let g = MaskGraph::new(graph)?;
    let n = g.n;
    if n == 0 {
        return Ok(SolveOutcome {
            winner: Winner::Cops,
            witness: Some(Witness::Positional(PositionalStrategy::new())),
            states_explored: 0,
        });
    }
    let pl = Placements::new(n, k, budget)?;
    let moves_from = |p: usize, v: usize| -> Vec<usize> {
        let c = pl.masks[p];
        let mut out = vec![p];
        if (c.count_ones() as usize) < k {
            out.push(pl.index_of(c | 1 << v));
        }
        out.extend(bits(c).map(|w| pl.index_of((c & !(1 << w)) | 1 << v)));
        out
    };

    let mut choice = vec![NONE; pl.len() * n];
    loop {
        let mut changed = false;
        for p in 0..pl.len() {
            let c = pl.masks[p];
            for v in 0..n {
                let idx = p * n + v;
                if c & (1 << v) != 0 || choice[idx] != NONE {
                    continue;
                }
                let winning = moves_from(p, v).into_iter().find(|&q| {
                    bits(g.succ[v] & !pl.masks[q]).all(|w| choice[q * n + w] != NONE)
                });
                if let Some(q) = winning {
                    choice[idx] = q as u32;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }

    let states_explored = pl.masks.iter().map(|c| (n - c.count_ones() as usize) as u64).sum();
    if !(0..n).all(|v| choice[v] != NONE) {
        return Ok(SolveOutcome {
            winner: Winner::Robber,
            witness: None,
            states_explored,
        });
    }
    let mut strategy = PositionalStrategy::new();
    let mut seen = vec![false; choice.len()];
    let mut queue: VecDeque<usize> = (0..n).collect();
    seen[..n].fill(true);
    while let Some(idx) = queue.pop_front() {
        let (p, v) = (idx / n, idx % n);
        let q = choice[idx] as usize;
        strategy.insert(set_of(n, pl.masks[p]), v, set_of(n, pl.masks[q]));
        for w in bits(g.succ[v] & !pl.masks[q]) {
            let child = q * n + w;
            if !seen[child] {
                seen[child] = true;
                queue.push_back(child);
            }
        }
    }
    Ok(SolveOutcome {
        winner: Winner::Cops,
        witness: Some(Witness::Positional(strategy)),
        states_explored,
    })
}

/// Smallest vertex of a cyclic component whose removal leaves it acyclic.
fn feedback_vertex(graph: &Graph, component: &[usize]) -> Option<usize> {
    let n = graph.vertex_count();
    component.iter().copied().find(|&v| {
        let rest = VertexSet::from_ids(n, component.iter().copied().filter(|&w| w != v));
        graph
            .induced_subgraph(&rest)
            .expect("component ids are in range")
            .is_acyclic()
    })
}

/// Whether one cop suffices, via the component characterization: the graph
/// has a cycle and every strongly connected component has a vertex whose
/// removal makes it acyclic.
pub fn entanglement_is_one(graph: &Graph) -> bool {
    let comps = graph.sccs();
    comps.iter().any(|c| graph.is_nontrivial_component(c))
        && comps
            .iter()
            .filter(|c| graph.is_nontrivial_component(c))
            .all(|c| feedback_vertex(graph, c).is_some())
}

/// Cops permanently occupy `park` vertices as the robber steps on them; one
/// more cop, the chaser, jumps onto the robber only when the robber stands on the
/// feedback vertex of its component in `G − park`, and otherwise waits.
#[derive(Debug, Clone, PartialEq)]
pub struct FeedbackStrategy {
    park: VertexSet,
    feedback: VertexSet,
}

impl FeedbackStrategy {
    /// `None` if some component of `G − park` has no single feedback vertex.
    pub fn new(graph: &Graph, park: &VertexSet) -> Option<Self> {
        let n = graph.vertex_count();
        let (rest, old_id) = graph
            .induced_subgraph_with_map(&VertexSet::full(n).difference(park))
            .ok()?;
        let mut feedback = VertexSet::empty(n);
        for comp in rest.sccs() {
            if rest.is_nontrivial_component(&comp) {
                feedback.insert(old_id[feedback_vertex(&rest, &comp)?]);
            }
        }
        Some(FeedbackStrategy {
            park: park.clone(),
            feedback,
        })
    }

    /// Cops the strategy may use: one per park vertex plus the chaser.
    pub fn cops(&self) -> usize {
        self.park.len() + 1
    }

    pub fn feedback_vertices(&self) -> &VertexSet {
        &self.feedback
    }
}

impl CopStrategy for FeedbackStrategy {
    fn next_placement(&self, cops: &VertexSet, robber: usize) -> Option<VertexSet> {
        let mut next = cops.clone();
        if self.park.contains(robber) {
            next.insert(robber);
        } else if self.feedback.contains(robber) {
            if let Some(chaser) = cops.difference(&self.park).first() {
                next.remove(chaser);
            }
            next.insert(robber);
        }
        Some(next)
    }
}

/// The three-cop strategy on the switch-all graph `G_n`: park on `r` and `s`,
/// chase with the third.
pub fn ent_strategy_switch_all(n: usize) -> Result<FeedbackStrategy, FamilyError> {
    let graph = gen_switch_all(n)?;
    let l = SwitchAllLayout::new(n);
    let park = VertexSet::from_ids(l.vertex_count(), [l.r(), l.s()]);
    FeedbackStrategy::new(&graph, &park).ok_or_else(|| {
        FamilyError::InvalidParameter("G_n − {r, s} lacks feedback vertices".into())
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntVerification {
    pub cops: usize,
    pub winning: bool,
    #[serde(serialize_with = "display_failure")]
    pub failure: Option<ReplayFailure>,
    pub positions_explored: usize,
}

fn display_failure<S: serde::Serializer>(f: &Option<ReplayFailure>, s: S) -> Result<S::Ok, S::Error> {
    match f {
        Some(f) => s.serialize_some(&f.to_string()),
        None => s.serialize_none(),
    }
}

/// Plays `strategy` with `k` cops against every robber behaviour. Wins iff
/// every move is legal and no play revisits a position.
pub fn verify_ent_strategy(graph: &Graph, strategy: &dyn CopStrategy, k: usize) -> EntVerification {
    let n = graph.vertex_count();
    let mut explored = 0;
    let result = explore_acyclic((0..n).map(|v| (VertexSet::empty(n), v)), |(cops, v)| {
        explored += 1;
        let v = *v;
        let next = strategy
            .next_placement(cops, v)
            .ok_or_else(|| ReplayFailure::MissingMove {
                cops: ids(cops),
                robber: v,
            })?;
        let legal = next.universe() == n
            && next.len() <= k
            && (next == *cops || {
                let gained = next.difference(cops);
                let lost = cops.difference(&next);
                gained.len() == 1 && gained.contains(v) && lost.len() <= 1
            });
        if !legal {
            return Err(ReplayFailure::IllegalMove {
                cops: ids(cops),
                robber: v,
                next: ids(&next),
            });
        }
        Ok(graph
            .successors(v)
            .iter()
            .filter(|&&w| !next.contains(w))
            .map(|&w| (next.clone(), w))
            .collect())
    });
    EntVerification {
        cops: k,
        winning: result.is_ok(),
        failure: result.err(),
        positions_explored: explored,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_directed_cycle, gen_random_dag};
    use crate::pursuit::DEFAULT_BUDGET;

    fn wins(g: &Graph, k: usize) -> bool {
        solve_entanglement(g, k, DEFAULT_BUDGET).unwrap().cops_win()
    }

    #[test]
    fn acyclic_needs_no_cops() {
        for seed in 0..5 {
            let g = gen_random_dag(6, 0.5, seed).unwrap();
            assert!(wins(&g, 0));
            assert!(!entanglement_is_one(&g));
        }
    }

    #[test]
    fn cycles() {
        let g = gen_directed_cycle(4).unwrap();
        assert!(!wins(&g, 0));
        assert!(wins(&g, 1));
        assert!(entanglement_is_one(&g));
    }

    #[test]
    fn two_cycles_sharing_a_vertex() {
        let g = Graph::from_named_edges(
            &["m", "a", "b"],
            [("m", "a"), ("a", "m"), ("m", "b"), ("b", "m")],
        )
        .unwrap();
        assert!(entanglement_is_one(&g));
        assert!(wins(&g, 1));
    }

    /// Bidirected triangle: every vertex removal leaves a 2-cycle.
    #[test]
    fn triangle_needs_two() {
        let g = Graph::from_named_edges(
            &["a", "b", "c"],
            [("a", "b"), ("b", "a"), ("b", "c"), ("c", "b"), ("a", "c"), ("c", "a")],
        )
        .unwrap();
        assert!(!entanglement_is_one(&g));
        assert!(!wins(&g, 1));
        assert!(wins(&g, 2));
    }

    #[test]
    fn solver_witness_replays() {
        let g = gen_directed_cycle(3).unwrap();
        let out = solve_entanglement(&g, 1, DEFAULT_BUDGET).unwrap();
        let Some(Witness::Positional(s)) = out.witness else {
            panic!("expected a strategy");
        };
        assert!(verify_ent_strategy(&g, &s, 1).winning);
    }

    #[test]
    fn feedback_strategy_on_cycle() {
        let g = gen_directed_cycle(5).unwrap();
        let s = FeedbackStrategy::new(&g, &g.empty_set()).unwrap();
        assert_eq!(s.cops(), 1);
        assert!(verify_ent_strategy(&g, &s, 1).winning);
        let none = verify_ent_strategy(&g, &s, 0);
        assert!(!none.winning);
        assert!(matches!(none.failure, Some(ReplayFailure::IllegalMove { .. })));
    }

    #[test]
    fn idle_cops_lose_on_cycle() {
        let g = gen_directed_cycle(3).unwrap();
        let idle = |c: &VertexSet, _: usize| Some(c.clone());
        let out = verify_ent_strategy(&g, &idle, 0);
        assert!(matches!(out.failure, Some(ReplayFailure::Cycle { .. })));
    }

    #[test]
    fn illegal_jump_is_reported() {
        let g = gen_directed_cycle(3).unwrap();
        // places a cop away from the robber
        let cheat = |c: &VertexSet, v: usize| {
            let mut next = c.clone();
            next.insert((v + 1) % 3);
            Some(next)
        };
        let out = verify_ent_strategy(&g, &cheat, 3);
        assert!(matches!(out.failure, Some(ReplayFailure::IllegalMove { robber: 0, .. })));
    }

    #[test]
    fn switch_all_strategy() {
        for n in 1..=3 {
            let g = gen_switch_all(n).unwrap();
            let s = ent_strategy_switch_all(n).unwrap();
            assert_eq!(s.cops(), 3);
            let out = verify_ent_strategy(&g, &s, 3);
            assert!(out.winning, "n = {n}: {:?}", out.failure);
        }
    }
}
