//! Invisible-robber games (Kelly-width, directed pathwidth). The cops see
//! nothing, so the game is a one-player search over `(C, R)` where `R` is the
//! set of vertices the robber might occupy.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::graph::Graph;

use super::mask::{bits, MaskGraph, Placements};
use super::sweep::SweepSemantics;
use super::{check_cops, set_of, GameConfig, MoveSet, SolveError, SolveOutcome, Variant, Winner, Witness};
use super::SweepCertificate;

/// A search state `(C, R)` packed into one word: two 32-bit halves when the
/// graph has at most 32 vertices, which halves the memory of the search.
trait Packed: Copy + Eq + Hash {
    fn pack(c: u64, r: u64) -> Self;
    fn unpack(self) -> (u64, u64);
}

impl Packed for u64 {
    #[inline]
    fn pack(c: u64, r: u64) -> Self {
        c | r << 32
    }
    #[inline]
    fn unpack(self) -> (u64, u64) {
        (self & 0xffff_ffff, self >> 32)
    }
}

impl Packed for u128 {
    #[inline]
    fn pack(c: u64, r: u64) -> Self {
        c as u128 | (r as u128) << 64
    }
    #[inline]
    fn unpack(self) -> (u64, u64) {
        (self as u64, (self >> 64) as u64)
    }
}

#[inline]
fn step(g: &MaskGraph, semantics: SweepSemantics, c: u64, next: u64, r: u64) -> u64 {
    let kept = c & next;
    let spread = match semantics {
        SweepSemantics::Dpw => g.reach(kept, r),
        SweepSemantics::Kw => r | g.reach(kept, r & next),
    };
    spread & !next
}

/// Breadth-first search from `(∅, V)` for a placement sequence that empties
/// the robber space. The returned witness is a shortest such sequence.
pub fn solve_invisible(graph: &Graph, config: &GameConfig) -> Result<SolveOutcome, SolveError> {
    let semantics = match config.variant {
        Variant::Dpw => SweepSemantics::Dpw,
        Variant::Kw => SweepSemantics::Kw,
        variant => {
            return Err(SolveError::WrongVariant {
                variant,
                solver: "invisible-robber",
            })
        }
    };
    check_cops(graph, config.cops)?;
    let g = MaskGraph::new(graph)?;
    if g.n <= 32 {
        search::<u64>(&g, config, semantics)
    } else {
        search::<u128>(&g, config, semantics)
    }
}

fn search<S: Packed>(g: &MaskGraph, config: &GameConfig, semantics: SweepSemantics) -> Result<SolveOutcome, SolveError> {
    let n = g.n;
    let k = config.cops;
    let full = match config.moves {
        MoveSet::Full => Some(Placements::new(n, k, config.budget)?),
        MoveSet::Normalized => None,
    };

    let start = S::pack(0, g.all());
    let mut parent: HashMap<S, S> = HashMap::new();
    parent.insert(start, start);
    let mut queue = VecDeque::from([start]);
    let mut goal = (g.all() == 0).then_some(start);
    let mut successors = Vec::new();

    while goal.is_none() {
        let Some(state) = queue.pop_front() else { break };
        let (c, r) = state.unpack();
        successors.clear();
        match &full {
            Some(pl) => successors.extend(pl.masks.iter().copied()),
            None => {
                successors.extend(bits(c).map(|u| c & !(1 << u)));
                if (c.count_ones() as usize) < k {
                    successors.extend(bits(g.all() & !c).map(|u| c | 1 << u));
                }
            }
        }
        for &next in &successors {
            let r2 = step(g, semantics, c, next, r);
            if config.require_monotone && r2 & !r != 0 {
                continue;
            }
            let s = S::pack(next, r2);
            if parent.contains_key(&s) {
                continue;
            }
            parent.insert(s, state);
            if parent.len() as u64 > config.budget {
                return Err(SolveError::BudgetExceeded {
                    budget: config.budget,
                    required: parent.len() as u64,
                });
            }
            if r2 == 0 {
                goal = Some(s);
                break;
            }
            queue.push_back(s);
        }
    }

    let states_explored = parent.len() as u64;
    let Some(goal) = goal else {
        return Ok(SolveOutcome {
            winner: Winner::Robber,
            witness: None,
            states_explored,
        });
    };
    let mut placements = Vec::new();
    let mut s = goal;
    while s != start {
        placements.push(set_of(n, s.unpack().0));
        s = parent[&s];
    }
    placements.reverse();
    Ok(SolveOutcome {
        winner: Winner::Cops,
        witness: Some(Witness::Sweep(SweepCertificate { cops: k, placements })),
        states_explored,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_directed_cycle, gen_random_dag, gen_switch_all};
    use crate::pursuit::verify_sweep;

    fn run(graph: &Graph, variant: Variant, cops: usize, monotone: bool) -> SolveOutcome {
        solve_invisible(graph, &GameConfig::new(variant, cops).monotone(monotone)).unwrap()
    }

    fn check_witness(graph: &Graph, variant: Variant, out: &SolveOutcome, monotone: bool) {
        let Some(Witness::Sweep(cert)) = &out.witness else {
            panic!("cops win without a sweep witness");
        };
        let sem = if variant == Variant::Dpw {
            SweepSemantics::Dpw
        } else {
            SweepSemantics::Kw
        };
        let report = verify_sweep(graph, cert, sem, monotone).unwrap();
        assert!(report.verified, "{report:?}");
    }

    #[test]
    fn kw_self_loop() {
        let g = Graph::new(vec!["v".into()], [(0, 0)]).unwrap();
        let out = run(&g, Variant::Kw, 1, true);
        assert!(out.cops_win());
        check_witness(&g, Variant::Kw, &out, true);
    }

    #[test]
    fn kw_two_cycle() {
        let g = gen_directed_cycle(2).unwrap();
        assert!(!run(&g, Variant::Kw, 1, true).cops_win());
        let out = run(&g, Variant::Kw, 2, true);
        assert!(out.cops_win());
        check_witness(&g, Variant::Kw, &out, true);
    }

    #[test]
    fn dpw_dags_need_one_cop() {
        for seed in 0..10 {
            let g = gen_random_dag(7, 0.4, seed).unwrap();
            let out = run(&g, Variant::Dpw, 1, true);
            assert!(out.cops_win(), "seed {seed}");
            check_witness(&g, Variant::Dpw, &out, true);
        }
    }

    #[test]
    fn zero_cops_lose_unless_empty() {
        let g = gen_directed_cycle(3).unwrap();
        assert!(!run(&g, Variant::Dpw, 0, false).cops_win());
        let empty = Graph::new(vec![], []).unwrap();
        let out = run(&empty, Variant::Dpw, 0, true);
        assert!(out.cops_win());
        assert_eq!(out.witness, Some(Witness::Sweep(SweepCertificate { cops: 0, placements: vec![] })));
    }

    #[test]
    fn full_and_normalized_agree_on_cycles() {
        for len in 2..=4 {
            let g = gen_directed_cycle(len).unwrap();
            for variant in [Variant::Dpw, Variant::Kw] {
                for k in 0..=2 {
                    let base = GameConfig::new(variant, k);
                    let a = solve_invisible(&g, &base).unwrap().winner;
                    let b = solve_invisible(&g, &base.moves(MoveSet::Full)).unwrap().winner;
                    assert_eq!(a, b, "cycle {len}, {variant}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn switch_all_n1_four_cops() {
        let g = gen_switch_all(1).unwrap();
        let out = run(&g, Variant::Dpw, 4, true);
        assert!(out.cops_win());
        check_witness(&g, Variant::Dpw, &out, true);
    }

    /// More than 32 vertices takes the wide state encoding.
    #[test]
    fn long_path_and_cycle() {
        let path = crate::families::gen_directed_path(40).unwrap();
        let out = run(&path, Variant::Dpw, 1, true);
        assert!(out.cops_win());
        check_witness(&path, Variant::Dpw, &out, true);
        let cycle = gen_directed_cycle(40).unwrap();
        assert!(!run(&cycle, Variant::Dpw, 1, true).cops_win());
        assert!(run(&cycle, Variant::Dpw, 2, true).cops_win());
    }

    #[test]
    fn wrong_variant() {
        let g = gen_directed_cycle(2).unwrap();
        assert!(matches!(
            solve_invisible(&g, &GameConfig::new(Variant::Tw, 1)),
            Err(SolveError::WrongVariant { .. })
        ));
    }
}
