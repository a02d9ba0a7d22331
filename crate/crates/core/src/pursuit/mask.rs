//! Single-word bitmask view of a graph for the exact solvers.

use std::collections::HashMap;

use crate::graph::Graph;

use super::SolveError;

pub(crate) const MAX_VERTICES: usize = 64;

pub(crate) struct MaskGraph {
    pub n: usize,
    pub succ: Vec<u64>,
}

impl MaskGraph {
    pub fn new(graph: &Graph) -> Result<Self, SolveError> {
        let n = graph.vertex_count();
        if n > MAX_VERTICES {
            return Err(SolveError::TooManyVertices {
                count: n,
                max: MAX_VERTICES,
            });
        }
        let succ = (0..n)
            .map(|v| graph.successors(v).iter().fold(0u64, |m, &w| m | 1 << w))
            .collect();
        Ok(MaskGraph { n, succ })
    }

    pub fn all(&self) -> u64 {
        crate::graph::low_bits(self.n)
    }

    /// Vertices reachable from `sources` avoiding `blocked`.
    #[inline]
    pub fn reach(&self, blocked: u64, sources: u64) -> u64 {
        let mut seen = sources & !blocked;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.succ[v];
            }
            next &= !blocked & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }
}

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

/// All placements of at most `k` cops on `n` vertices, ordered by size and
/// then lexicographically by member ids.
pub(crate) struct Placements {
    pub masks: Vec<u64>,
    index: HashMap<u64, u32>,
}

impl Placements {
    pub fn new(n: usize, k: usize, budget: u64) -> Result<Self, SolveError> {
        let k = k.min(n);
        let total: u64 = (0..=k).map(|size| binomial(n, size)).sum();
        if total.saturating_mul(n.max(1) as u64) > budget {
            return Err(SolveError::BudgetExceeded {
                budget,
                required: total.saturating_mul(n.max(1) as u64),
            });
        }
        let mut masks = Vec::with_capacity(total as usize);
        let mut combo = Vec::with_capacity(k);
        for size in 0..=k {
            push_combinations(n, size, 0, &mut combo, &mut masks);
        }
        let index = masks
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as u32))
            .collect();
        Ok(Placements { masks, index })
    }

    pub fn len(&self) -> usize {
        self.masks.len()
    }

    #[inline]
    pub fn index_of(&self, mask: u64) -> usize {
        self.index[&mask] as usize
    }
}

fn push_combinations(n: usize, size: usize, start: usize, combo: &mut Vec<usize>, out: &mut Vec<u64>) {
    if combo.len() == size {
        out.push(combo.iter().fold(0u64, |m, &v| m | 1 << v));
        return;
    }
    for v in start..n {
        if n - v < size - combo.len() {
            break;
        }
        combo.push(v);
        push_combinations(n, size, v + 1, combo, out);
        combo.pop();
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64) / (i as u64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn placements_are_complete_and_ordered() {
        let p = Placements::new(5, 2, u64::MAX).unwrap();
        assert_eq!(p.len(), 1 + 5 + 10);
        assert_eq!(p.masks[0], 0);
        assert_eq!(p.masks[1], 0b1);
        assert_eq!(p.masks[6], 0b11);
        for (i, &m) in p.masks.iter().enumerate() {
            assert_eq!(p.index_of(m), i);
        }
    }

    #[test]
    fn placements_respect_budget() {
        assert!(matches!(
            Placements::new(20, 10, 1000),
            Err(SolveError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(14, 4), 1001);
        assert_eq!(binomial(30, 15), 155117520);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn reach_on_path() {
        let g = Graph::new(
            vec!["a".into(), "b".into(), "c".into()],
            [(0, 1), (1, 2)],
        )
        .unwrap();
        let m = MaskGraph::new(&g).unwrap();
        assert_eq!(m.reach(0, 0b001), 0b111);
        assert_eq!(m.reach(0b010, 0b001), 0b001);
        assert_eq!(m.reach(0b001, 0b001), 0);
    }
}
