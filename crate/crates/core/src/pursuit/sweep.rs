//! Open-loop clearing sequences for the invisible-robber games and their
//! verifier.
//!
//! Starting from `R = V` with no cops, each placement `C'` following `C`
//! updates the robber space to
//!
//! * directed pathwidth: `R' = Reach_{G−(C∩C')}(R) ∖ C'`
//! * Kelly-width (inert robber): `R' = (R ∪ Reach_{G−(C∩C')}(R ∩ C')) ∖ C'`
//!
//! A step is monotone when `R' ⊆ R`: no cleared vertex, and no vertex a cop
//! just left, is regained by the robber.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{FamilyError, SwitchAllLayout};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SweepSemantics {
    Dpw,
    Kw,
}

/// Placements `C_1, C_2, …` played in order after the empty start placement.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCertificate {
    pub cops: usize,
    pub placements: Vec<VertexSet>,
}

impl SweepCertificate {
    pub fn from_named(graph: &Graph, cops: usize, placements: &[&[&str]]) -> Result<Self, crate::graph::GraphError> {
        let placements = placements
            .iter()
            .map(|names| graph.named_set(names.iter().copied()))
            .collect::<Result<_, _>>()?;
        Ok(SweepCertificate { cops, placements })
    }

    pub fn named(&self, graph: &Graph) -> Vec<Vec<String>> {
        self.placements
            .iter()
            .map(|c| c.iter().map(|v| graph.name(v).to_string()).collect())
            .collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("placement {step} has {size} cops, budget is {budget}")]
    OverBudget { step: usize, size: usize, budget: usize },
    #[error("placement {step} is not a vertex set of this graph")]
    ForeignPlacement { step: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub semantics: SweepSemantics,
    pub cops: usize,
    pub steps: usize,
    pub max_placement: usize,
    pub require_monotone: bool,
    pub cleared: bool,
    pub monotone: bool,
    /// Index into the placement list of the first recontaminating step.
    pub first_violation: Option<usize>,
    pub remaining_robber_space: usize,
    pub verified: bool,
}

pub(crate) fn sweep_step(
    graph: &Graph,
    semantics: SweepSemantics,
    cops: &VertexSet,
    next: &VertexSet,
    robber: &VertexSet,
) -> VertexSet {
    let kept = cops.intersection(next);
    let spread = match semantics {
        SweepSemantics::Dpw => graph.reach_unchecked(&kept, robber),
        SweepSemantics::Kw => {
            let flushed = graph.reach_unchecked(&kept, &robber.intersection(next));
            robber.union(&flushed)
        }
    };
    spread.difference(next)
}

/// Replays `cert` from `(∅, V)` and reports whether the robber space is
/// emptied and whether every step was monotone.
pub fn verify_sweep(
    graph: &Graph,
    cert: &SweepCertificate,
    semantics: SweepSemantics,
    require_monotone: bool,
) -> Result<SweepReport, CertificateError> {
    let n = graph.vertex_count();
    for (step, c) in cert.placements.iter().enumerate() {
        if c.universe() != n {
            return Err(CertificateError::ForeignPlacement { step });
        }
        if c.len() > cert.cops {
            return Err(CertificateError::OverBudget {
                step,
                size: c.len(),
                budget: cert.cops,
            });
        }
    }
    let mut cops = graph.empty_set();
    let mut robber = graph.all_vertices();
    let mut first_violation = None;
    for (step, next) in cert.placements.iter().enumerate() {
        let after = sweep_step(graph, semantics, &cops, next, &robber);
        if first_violation.is_none() && !after.is_subset(&robber) {
            first_violation = Some(step);
        }
        cops = next.clone();
        robber = after;
    }
    let cleared = robber.is_empty();
    let monotone = first_violation.is_none();
    Ok(SweepReport {
        semantics,
        cops: cert.cops,
        steps: cert.placements.len(),
        max_placement: cert.placements.iter().map(VertexSet::len).max().unwrap_or(0),
        require_monotone,
        cleared,
        monotone,
        first_violation,
        remaining_robber_space: robber.len(),
        verified: cleared && (monotone || !require_monotone),
    })
}

/// Four-cop clearing sequence for the switch-all graph `G_n`.
///
/// Two cops settle on `r` and `s`. Layer by layer a third cop holds `e_i`
/// while the fourth visits `d_i, g_i, f_i, h_i, k_i` (`g_i` before `f_i`,
/// since `g_i → f_i` would otherwise recontaminate `f_i`). Finally a single
/// roaming cop sweeps `x`, then `a_m, t_m` for `m = 2n, …, 1`, and ends on `c`.
pub fn dpw_sweep_certificate_switch_all(n: usize) -> Result<SweepCertificate, FamilyError> {
    if n == 0 {
        return Err(FamilyError::InvalidParameter("n must be at least 1".into()));
    }
    let l = SwitchAllLayout::new(n);
    let universe = l.vertex_count();
    let mut placements = Vec::new();
    let mut current = VertexSet::empty(universe);
    let add = |current: &mut VertexSet, v: usize, out: &mut Vec<VertexSet>| {
        current.insert(v);
        out.push(current.clone());
    };
    let remove = |current: &mut VertexSet, v: usize, out: &mut Vec<VertexSet>| {
        current.remove(v);
        out.push(current.clone());
    };

    add(&mut current, l.r(), &mut placements);
    add(&mut current, l.s(), &mut placements);
    for i in 1..=n {
        if i > 1 {
            remove(&mut current, l.k(i - 1), &mut placements);
            remove(&mut current, l.e(i - 1), &mut placements);
        }
        add(&mut current, l.e(i), &mut placements);
        for v in [l.d(i), l.g(i), l.f(i), l.h(i)] {
            add(&mut current, v, &mut placements);
            remove(&mut current, v, &mut placements);
        }
        add(&mut current, l.k(i), &mut placements);
    }
    remove(&mut current, l.k(n), &mut placements);
    remove(&mut current, l.e(n), &mut placements);
    add(&mut current, l.x(), &mut placements);
    remove(&mut current, l.x(), &mut placements);
    for m in (1..=2 * n).rev() {
        for v in [l.a(m), l.t(m)] {
            add(&mut current, v, &mut placements);
            remove(&mut current, v, &mut placements);
        }
    }
    add(&mut current, l.c(), &mut placements);
    Ok(SweepCertificate {
        cops: 4,
        placements,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{gen_directed_cycle, gen_switch_all};

    #[test]
    fn empty_certificate_does_not_clear() {
        let g = gen_directed_cycle(3).unwrap();
        let cert = SweepCertificate {
            cops: 1,
            placements: vec![],
        };
        let report = verify_sweep(&g, &cert, SweepSemantics::Dpw, true).unwrap();
        assert!(!report.cleared);
        assert!(!report.verified);
        assert_eq!(report.remaining_robber_space, 3);
    }

    #[test]
    fn self_loop_cleared_by_one_cop() {
        let g = Graph::new(vec!["v".into()], [(0, 0)]).unwrap();
        let cert = SweepCertificate::from_named(&g, 1, &[&["v"]]).unwrap();
        let report = verify_sweep(&g, &cert, SweepSemantics::Kw, true).unwrap();
        assert!(report.cleared && report.monotone && report.verified);
    }

    #[test]
    fn over_budget_placement_is_an_error() {
        let g = gen_directed_cycle(3).unwrap();
        let cert = SweepCertificate::from_named(&g, 1, &[&["v_0", "v_1"]]).unwrap();
        assert_eq!(
            verify_sweep(&g, &cert, SweepSemantics::Dpw, true).unwrap_err(),
            CertificateError::OverBudget {
                step: 0,
                size: 2,
                budget: 1
            }
        );
    }

    /// Two-cycle u ↔ w: hand simulation of both update rules.
    #[test]
    fn two_cycle_hand_simulation() {
        let g = gen_directed_cycle(2).unwrap();
        // one cop walking u then w recontaminates u
        let walk = SweepCertificate::from_named(&g, 1, &[&["v_0"], &[], &["v_1"]]).unwrap();
        for sem in [SweepSemantics::Dpw, SweepSemantics::Kw] {
            let report = verify_sweep(&g, &walk, sem, true).unwrap();
            assert!(!report.cleared, "{sem:?}");
            assert!(!report.monotone, "{sem:?}");
        }
        let dpw = verify_sweep(&g, &walk, SweepSemantics::Dpw, true).unwrap();
        // lifting the cop from v_0 lets the robber back on it
        assert_eq!(dpw.first_violation, Some(1));
        let kw = verify_sweep(&g, &walk, SweepSemantics::Kw, true).unwrap();
        // inert robber: lifting is harmless, the flush from v_1 is not
        assert_eq!(kw.first_violation, Some(2));

        let pair = SweepCertificate::from_named(&g, 2, &[&["v_0"], &["v_0", "v_1"]]).unwrap();
        for sem in [SweepSemantics::Dpw, SweepSemantics::Kw] {
            assert!(verify_sweep(&g, &pair, sem, true).unwrap().verified);
        }
    }

    #[test]
    fn switch_all_certificate_shape() {
        let cert = dpw_sweep_certificate_switch_all(1).unwrap();
        let g = gen_switch_all(1).unwrap();
        let named = cert.named(&g);
        assert_eq!(named[0], vec!["r"]);
        assert_eq!(named[1], vec!["s", "r"]);
        assert_eq!(named[2], vec!["s", "r", "e_1"]);
        assert!(cert.placements.iter().all(|c| c.len() <= 4));
        let last = cert.placements.last().unwrap();
        assert!(last.contains(g.id_of("c").unwrap()));
        // c is placed exactly once, at the very end
        let c = g.id_of("c").unwrap();
        assert_eq!(cert.placements.iter().filter(|p| p.contains(c)).count(), 1);
    }

    #[test]
    fn switch_all_certificate_clears_small_n() {
        for n in 1..=3 {
            let g = gen_switch_all(n).unwrap();
            let cert = dpw_sweep_certificate_switch_all(n).unwrap();
            for sem in [SweepSemantics::Dpw, SweepSemantics::Kw] {
                let report = verify_sweep(&g, &cert, sem, true).unwrap();
                assert!(report.verified, "n = {n}, {sem:?}: {report:?}");
            }
        }
    }

    /// The proof's literal layer order (f before g) recontaminates f_i.
    #[test]
    fn literal_layer_order_is_not_monotone() {
        let n = 1;
        let g = gen_switch_all(n).unwrap();
        let cert = SweepCertificate::from_named(
            &g,
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
        )
        .unwrap();
        let report = verify_sweep(&g, &cert, SweepSemantics::Dpw, true).unwrap();
        assert_eq!(report.first_violation, Some(6));
    }
}
