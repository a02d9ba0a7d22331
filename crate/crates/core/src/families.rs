//! Deterministic constructors for the counterexample graph families and a few
//! auxiliary instances.
//!
//! Vertex ids follow a fixed canonical order per family (see
//! [`SwitchAllLayout`] and [`ZadehLayout`]); certificates and cliquewidth
//! checks rely on it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
}

fn require_positive(what: &str, value: usize) -> Result<(), FamilyError> {
    if value == 0 {
        Err(FamilyError::InvalidParameter(format!("{what} must be at least 1")))
    } else {
        Ok(())
    }
}

/// A family member together with its parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilyId {
    SwitchAll { n: usize },
    Zadeh { n: usize },
    CompleteBipartite { a: usize, b: usize },
    DirectedCycle { n: usize },
    DirectedPath { n: usize },
    RandomDigraph { v: usize, p: f64, seed: u64 },
}

impl FamilyId {
    pub fn build(&self) -> Result<Graph, FamilyError> {
        match *self {
            FamilyId::SwitchAll { n } => gen_switch_all(n),
            FamilyId::Zadeh { n } => gen_zadeh(n),
            FamilyId::CompleteBipartite { a, b } => gen_complete_bipartite(a, b),
            FamilyId::DirectedCycle { n } => gen_directed_cycle(n),
            FamilyId::DirectedPath { n } => gen_directed_path(n),
            FamilyId::RandomDigraph { v, p, seed } => gen_random_digraph(v, p, seed),
        }
    }
}

/// Canonical vertex ids of the switch-all graph `G_n`: `x, s, c, r`, then
/// `t_1..t_2n`, `a_1..a_2n`, then per layer `d_i, e_i, f_i, g_i, h_i, k_i`.
#[derive(Debug, Clone, Copy)]
pub struct SwitchAllLayout {
    pub n: usize,
}

impl SwitchAllLayout {
    pub fn new(n: usize) -> Self {
        SwitchAllLayout { n }
    }

    pub fn vertex_count(&self) -> usize {
        10 * self.n + 4
    }

    pub fn x(&self) -> usize {
        0
    }
    pub fn s(&self) -> usize {
        1
    }
    pub fn c(&self) -> usize {
        2
    }
    pub fn r(&self) -> usize {
        3
    }

    pub fn t(&self, i: usize) -> usize {
        debug_assert!((1..=2 * self.n).contains(&i));
        3 + i
    }

    pub fn a(&self, i: usize) -> usize {
        debug_assert!((1..=2 * self.n).contains(&i));
        3 + 2 * self.n + i
    }

    fn layer(&self, i: usize, offset: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        4 + 4 * self.n + 6 * (i - 1) + offset
    }

    pub fn d(&self, i: usize) -> usize {
        self.layer(i, 0)
    }
    pub fn e(&self, i: usize) -> usize {
        self.layer(i, 1)
    }
    pub fn f(&self, i: usize) -> usize {
        self.layer(i, 2)
    }
    pub fn g(&self, i: usize) -> usize {
        self.layer(i, 3)
    }
    pub fn h(&self, i: usize) -> usize {
        self.layer(i, 4)
    }
    pub fn k(&self, i: usize) -> usize {
        self.layer(i, 5)
    }

    pub fn names(&self) -> Vec<String> {
        let n = self.n;
        let mut names: Vec<String> = ["x", "s", "c", "r"].map(String::from).to_vec();
        names.extend((1..=2 * n).map(|i| format!("t_{i}")));
        names.extend((1..=2 * n).map(|i| format!("a_{i}")));
        for i in 1..=n {
            for p in ["d", "e", "f", "g", "h", "k"] {
                names.push(format!("{p}_{i}"));
            }
        }
        names
    }
}

/// The graph underlying the switch-all counterexample games.
pub fn gen_switch_all(n: usize) -> Result<Graph, FamilyError> {
    require_positive("n", n)?;
    let l = SwitchAllLayout::new(n);
    let mut edges = Vec::new();
    let (x, s, c, r) = (l.x(), l.s(), l.c(), l.r());
    edges.extend([(l.t(1), s), (l.t(1), r), (l.t(1), c)]);
    for i in 2..=2 * n {
        edges.extend([(l.t(i), s), (l.t(i), r), (l.t(i), l.t(i - 1))]);
    }
    for i in 1..=2 * n {
        edges.push((l.a(i), l.t(i)));
    }
    edges.extend([(c, s), (c, r)]);
    for i in 1..=n {
        edges.extend([(l.d(i), s), (l.d(i), r), (l.d(i), l.e(i))]);
        edges.extend((1..=2 * i).map(|j| (l.d(i), l.a(j))));
        edges.extend([(l.e(i), l.d(i)), (l.e(i), l.h(i))]);
        edges.extend([(l.g(i), l.f(i)), (l.g(i), l.k(i))]);
        edges.push((l.k(i), x));
        edges.extend((i + 1..=n).map(|j| (l.k(i), l.g(j))));
        edges.push((l.f(i), l.e(i)));
        edges.push((l.h(i), l.k(i)));
    }
    edges.push((s, x));
    edges.extend((1..=n).map(|j| (s, l.f(j))));
    edges.push((r, x));
    edges.extend((1..=n).map(|j| (r, l.g(j))));
    edges.push((x, x));
    Ok(Graph::new(l.names(), edges).expect("switch-all layout is consistent"))
}

/// Canonical vertex ids of Zadeh's graph `Z_n`: `s, t, k_{n+1}`, then per
/// layer `k_i` followed by, for `j = 0, 1`:
/// `c_i^j, A_i^j, b_{i,0}^j, b_{i,1}^j, d_i^j, h_i^j`.
#[derive(Debug, Clone, Copy)]
pub struct ZadehLayout {
    pub n: usize,
}

impl ZadehLayout {
    pub fn new(n: usize) -> Self {
        ZadehLayout { n }
    }

    pub fn vertex_count(&self) -> usize {
        13 * self.n + 3
    }

    pub fn s(&self) -> usize {
        0
    }
    pub fn t(&self) -> usize {
        1
    }

    fn base(&self, i: usize) -> usize {
        debug_assert!((1..=self.n).contains(&i));
        3 + 13 * (i - 1)
    }

    /// `k_i` for `1 ≤ i ≤ n+1`.
    pub fn k(&self, i: usize) -> usize {
        if i == self.n + 1 {
            2
        } else {
            self.base(i)
        }
    }

    fn half(&self, i: usize, j: usize, offset: usize) -> usize {
        debug_assert!(j < 2);
        self.base(i) + 1 + 6 * j + offset
    }

    pub fn c(&self, i: usize, j: usize) -> usize {
        self.half(i, j, 0)
    }
    pub fn big_a(&self, i: usize, j: usize) -> usize {
        self.half(i, j, 1)
    }
    /// `b_{i,which}^j`.
    pub fn b(&self, i: usize, which: usize, j: usize) -> usize {
        debug_assert!(which < 2);
        self.half(i, j, 2 + which)
    }
    pub fn d(&self, i: usize, j: usize) -> usize {
        self.half(i, j, 4)
    }
    pub fn h(&self, i: usize, j: usize) -> usize {
        self.half(i, j, 5)
    }

    pub fn names(&self) -> Vec<String> {
        let n = self.n;
        let mut names = vec!["s".to_string(), "t".to_string(), format!("k_{}", n + 1)];
        for i in 1..=n {
            names.push(format!("k_{i}"));
            for j in 0..2 {
                names.push(format!("c_{i}^{j}"));
                names.push(format!("A_{i}^{j}"));
                names.push(format!("b_{{{i},0}}^{j}"));
                names.push(format!("b_{{{i},1}}^{j}"));
                names.push(format!("d_{i}^{j}"));
                names.push(format!("h_{i}^{j}"));
            }
        }
        names
    }
}

/// The graph underlying the counterexample to Zadeh's least-entered rule.
pub fn gen_zadeh(n: usize) -> Result<Graph, FamilyError> {
    require_positive("n", n)?;
    let l = ZadehLayout::new(n);
    let (s, t) = (l.s(), l.t());
    let ks = || (1..=n).map(|m| l.k(m));
    let mut edges = vec![(t, t), (s, t), (l.k(n + 1), t)];
    edges.extend(ks().map(|k| (s, k)));
    for i in 1..=n {
        for j in 0..2 {
            edges.extend([(l.d(i, j), l.h(i, j)), (l.d(i, j), s)]);
            edges.extend([
                (l.big_a(i, j), l.d(i, j)),
                (l.big_a(i, j), l.b(i, 0, j)),
                (l.big_a(i, j), l.b(i, 1, j)),
            ]);
            for which in 0..2 {
                let b = l.b(i, which, j);
                edges.extend([(b, t), (b, l.big_a(i, j))]);
                edges.extend(ks().map(|k| (b, k)));
            }
            edges.push((l.c(i, j), l.big_a(i, j)));
        }
        let k = l.k(i);
        edges.extend([(k, l.c(i, 0)), (k, l.c(i, 1)), (k, t)]);
        edges.extend(ks().filter(|&m| m != k).map(|m| (k, m)));
        edges.push((l.h(i, 0), t));
        edges.extend((i + 2..=n).map(|m| (l.h(i, 0), l.k(m))));
        edges.push((l.h(i, 1), l.k(i + 1)));
    }
    Ok(Graph::new(l.names(), edges).expect("zadeh layout is consistent"))
}

/// `K_{a,b}` as a symmetric digraph; sides are named `u_1..u_a` and `w_1..w_b`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> Result<Graph, FamilyError> {
    require_positive("a", a)?;
    require_positive("b", b)?;
    let names = (1..=a)
        .map(|i| format!("u_{i}"))
        .chain((1..=b).map(|i| format!("w_{i}")))
        .collect();
    let edges = (0..a).flat_map(|u| (a..a + b).flat_map(move |w| [(u, w), (w, u)]));
    Ok(Graph::new(names, edges).expect("bipartite layout is consistent"))
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v_{i}")).collect()
}

pub fn gen_directed_cycle(n: usize) -> Result<Graph, FamilyError> {
    require_positive("n", n)?;
    Ok(Graph::new(numbered(n), (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle"))
}

pub fn gen_directed_path(n: usize) -> Result<Graph, FamilyError> {
    require_positive("n", n)?;
    Ok(Graph::new(numbered(n), (1..n).map(|i| (i - 1, i))).expect("valid path"))
}

fn check_probability(p: f64) -> Result<(), FamilyError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(FamilyError::InvalidParameter(format!(
            "probability {p} outside [0, 1]"
        )))
    }
}

/// Random digraph on `v` vertices without self-loops.
///
/// The generator is ChaCha8 seeded with `seed` (`ChaCha8Rng::seed_from_u64`).
/// Ordered pairs `(u, w)`, `u != w`, are visited row-major; each draws one
/// `f64` uniform in `[0, 1)` and becomes an edge when the draw is below `p`.
pub fn gen_random_digraph(v: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    require_positive("v", v)?;
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..v {
        for w in 0..v {
            if u != w && rng.gen::<f64>() < p {
                edges.push((u, w));
            }
        }
    }
    Ok(Graph::new(numbered(v), edges).expect("valid random graph"))
}

/// Random DAG: same draw discipline as [`gen_random_digraph`] restricted to
/// pairs `u < w`, so the identity order is topological.
pub fn gen_random_dag(v: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    require_positive("v", v)?;
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..v {
        for w in u + 1..v {
            if rng.gen::<f64>() < p {
                edges.push((u, w));
            }
        }
    }
    Ok(Graph::new(numbered(v), edges).expect("valid random dag"))
}

/// Every labelled digraph on `v` vertices, self-loops included: graph number
/// `code` has edge `(i, j)` iff bit `i * v + j` of `code` is set.
pub fn enumerate_digraphs(v: usize) -> impl Iterator<Item = Graph> {
    assert!(v * v < 32, "exhaustive enumeration is limited to tiny graphs");
    let names = numbered(v);
    (0u32..1 << (v * v)).map(move |code| {
        let edges = (0..v * v)
            .filter(|bit| code >> bit & 1 == 1)
            .map(|bit| (bit / v, bit % v));
        Graph::new(names.clone(), edges).expect("valid enumerated graph")
    })
}

/// A `K_{k,k}` inside the symmetric closure of `G_n`: `A = {a_1..a_k}` and
/// `B = {d_i : ⌈k/2⌉ ≤ i ≤ ⌈k/2⌉ + k − 1}`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BipartiteWitness {
    pub k: usize,
    pub n: usize,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

pub fn bipartite_witness(k: usize) -> Result<BipartiteWitness, FamilyError> {
    require_positive("k", k)?;
    let half = k.div_ceil(2);
    let n = half + k - 1;
    let l = SwitchAllLayout::new(n);
    Ok(BipartiteWitness {
        k,
        n,
        side_a: (1..=k).map(|j| l.a(j)).collect(),
        side_b: (half..half + k).map(|i| l.d(i)).collect(),
    })
}

/// Checks the witness by direct adjacency tests in an undirected (symmetric)
/// graph: complete between the sides, independent within each side.
pub fn check_bipartite_witness(closure: &Graph, witness: &BipartiteWitness) -> bool {
    let sides_ok = witness.side_a.len() == witness.k && witness.side_b.len() == witness.k;
    let all = |xs: &[usize], ys: &[usize], want: bool| {
        xs.iter()
            .all(|&u| ys.iter().all(|&w| u == w || closure.has_edge(u, w) == want))
    };
    let self_loops = witness
        .side_a
        .iter()
        .chain(&witness.side_b)
        .any(|&v| closure.has_edge(v, v));
    sides_ok
        && !self_loops
        && all(&witness.side_a, &witness.side_b, true)
        && all(&witness.side_b, &witness.side_a, true)
        && all(&witness.side_a, &witness.side_a, false)
        && all(&witness.side_b, &witness.side_b, false)
}

/// True iff `members` are pairwise joined in both directions and carry no
/// self-loops.
pub fn is_bidirectional_clique(graph: &Graph, members: &[usize]) -> bool {
    members.iter().all(|&u| {
        !graph.has_edge(u, u)
            && members
                .iter()
                .all(|&w| u == w || (graph.has_edge(u, w) && graph.has_edge(w, u)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_graph, serialize_graph};

    #[test]
    fn switch_all_sizes() {
        for n in 1..=64 {
            assert_eq!(gen_switch_all(n).unwrap().vertex_count(), 10 * n + 4);
        }
        assert_eq!(gen_switch_all(3).unwrap().vertex_count(), 34);
        assert!(gen_switch_all(0).is_err());
    }

    /// Independent count of the edge table at n = 1, row by row.
    #[test]
    fn switch_all_edge_count_n1() {
        let rows = [
            ("t_1", 3),
            ("t_2", 3),
            ("a_1", 1),
            ("a_2", 1),
            ("c", 2),
            ("d_1", 3 + 2),
            ("e_1", 2),
            ("g_1", 2),
            ("k_1", 1),
            ("f_1", 1),
            ("h_1", 1),
            ("s", 1 + 1),
            ("r", 1 + 1),
            ("x", 1),
        ];
        let expected: usize = rows.iter().map(|(_, c)| c).sum();
        assert_eq!(expected, 27);
        let g = gen_switch_all(1).unwrap();
        assert_eq!(g.edge_count(), 27);
        for (name, count) in rows {
            assert_eq!(g.successors(g.id_of(name).unwrap()).len(), count, "{name}");
        }
    }

    #[test]
    fn switch_all_successors_of_d2() {
        let g = gen_switch_all(2).unwrap();
        let got: Vec<&str> = g
            .successors(g.id_of("d_2").unwrap())
            .iter()
            .map(|&w| g.name(w))
            .collect();
        let mut got = got;
        got.sort();
        let mut want = vec!["s", "r", "e_2", "a_1", "a_2", "a_3", "a_4"];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn zadeh_shape() {
        for n in 1..=16 {
            let g = gen_zadeh(n).unwrap();
            assert_eq!(g.vertex_count(), 13 * n + 3);
            let l = ZadehLayout::new(n);
            let ks: Vec<usize> = (1..=n).map(|i| l.k(i)).collect();
            assert!(is_bidirectional_clique(&g, &ks));
        }
        assert_eq!(gen_zadeh(3).unwrap().vertex_count(), 42);
        assert!(gen_zadeh(0).is_err());
    }

    #[test]
    fn zadeh_h_successors() {
        let g = gen_zadeh(3).unwrap();
        let succ = |name: &str| -> Vec<&str> {
            let mut v: Vec<&str> = g
                .successors(g.id_of(name).unwrap())
                .iter()
                .map(|&w| g.name(w))
                .collect();
            v.sort();
            v
        };
        assert_eq!(succ("h_1^0"), vec!["k_3", "t"]);
        assert_eq!(succ("h_2^0"), vec!["t"]);
        assert_eq!(succ("h_3^1"), vec!["k_4"]);
        assert_eq!(succ("b_{2,1}^0"), vec!["A_2^0", "k_1", "k_2", "k_3", "t"]);
        assert_eq!(succ("k_2"), vec!["c_2^0", "c_2^1", "k_1", "k_3", "t"]);
    }

    #[test]
    fn bipartite() {
        let g = gen_complete_bipartite(1, 1).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (2, 2));
        let g = gen_complete_bipartite(2, 2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 8));
        let g = gen_complete_bipartite(3, 3).unwrap();
        assert_eq!(g.symmetric_closure(), g);
    }

    #[test]
    fn witness_examples() {
        let w = bipartite_witness(2).unwrap();
        let l = SwitchAllLayout::new(2);
        assert_eq!(w.n, 2);
        assert_eq!(w.side_a, vec![l.a(1), l.a(2)]);
        assert_eq!(w.side_b, vec![l.d(1), l.d(2)]);

        let w = bipartite_witness(3).unwrap();
        assert_eq!((w.n, w.side_a.len(), w.side_b.len()), (4, 3, 3));

        let w = bipartite_witness(1).unwrap();
        let l = SwitchAllLayout::new(1);
        assert_eq!((w.n, w.side_a.clone(), w.side_b.clone()), (1, vec![l.a(1)], vec![l.d(1)]));
        assert!(gen_switch_all(1).unwrap().has_edge(l.d(1), l.a(1)));
    }

    #[test]
    fn witness_checks_pass_up_to_eight() {
        for k in 1..=8 {
            let w = bipartite_witness(k).unwrap();
            let closure = gen_switch_all(w.n).unwrap().symmetric_closure();
            assert!(check_bipartite_witness(&closure, &w), "k = {k}");
        }
    }

    #[test]
    fn witness_check_rejects_bad_sides() {
        let mut w = bipartite_witness(3).unwrap();
        let l = SwitchAllLayout::new(w.n);
        // d_1 only reaches a_1, a_2
        w.side_b[0] = l.d(1);
        let closure = gen_switch_all(w.n).unwrap().symmetric_closure();
        assert!(!check_bipartite_witness(&closure, &w));
    }

    #[test]
    fn random_digraphs() {
        assert_eq!(gen_random_digraph(5, 0.0, 1).unwrap().edge_count(), 0);
        assert_eq!(gen_random_digraph(3, 1.0, 1).unwrap().edge_count(), 6);
        assert_eq!(
            gen_random_digraph(6, 0.4, 42).unwrap(),
            gen_random_digraph(6, 0.4, 42).unwrap()
        );
        assert!(gen_random_digraph(3, 1.5, 0).is_err());
        assert!(gen_random_dag(8, 0.5, 3).unwrap().is_acyclic());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_digraphs(2).count(), 16);
        let all: Vec<Graph> = enumerate_digraphs(2).collect();
        assert_eq!(all[0].edge_count(), 0);
        assert_eq!(all[15].edge_count(), 4);
    }

    #[test]
    fn families_round_trip_json() {
        let ids = [
            FamilyId::SwitchAll { n: 3 },
            FamilyId::Zadeh { n: 2 },
            FamilyId::CompleteBipartite { a: 2, b: 3 },
            FamilyId::DirectedCycle { n: 4 },
            FamilyId::DirectedPath { n: 4 },
            FamilyId::RandomDigraph { v: 7, p: 0.3, seed: 9 },
        ];
        for id in ids {
            let g = id.build().unwrap();
            assert_eq!(parse_graph(serialize_graph(&g).as_bytes()).unwrap(), g, "{id:?}");
        }
    }
}
