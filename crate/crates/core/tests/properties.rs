use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use digraph_widths::cliquewidth::{eval, parse_expr, CwExpr, LabelledGraph};
use digraph_widths::graph::{parse_graph, serialize_graph};
use digraph_widths::pursuit::{measure, solve, GameConfig, Variant, DEFAULT_BUDGET};
use digraph_widths::{Graph, VertexSet};

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (0..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let names = (1..=n).map(|i| format!("v_{i}")).collect();
            let edges = (0..n * n).filter(|&i| bits[i]).map(|i| (i / n, i % n));
            Graph::new(names, edges).unwrap()
        })
    })
}

fn graph_with_sets(max: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet, VertexSet)> {
    graph(max).prop_flat_map(|g| {
        let n = g.vertex_count();
        let set = move || proptest::collection::vec(any::<bool>(), n)
            .prop_map(move |b| VertexSet::from_ids(n, (0..n).filter(|&i| b[i])));
        (Just(g), set(), set(), set())
    })
}

#[derive(Debug, Clone)]
enum Shape {
    Leaf(u8),
    Union(Box<Shape>, Box<Shape>),
    Recolour(u8, u8, Box<Shape>),
    Connect(u8, u8, Box<Shape>),
}

fn shape() -> impl Strategy<Value = Shape> {
    (0..3u8).prop_map(Shape::Leaf).prop_recursive(6, 32, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Shape::Union(Box::new(l), Box::new(r))),
            (0..3u8, 0..3u8, inner.clone()).prop_map(|(a, b, c)| Shape::Recolour(a, b, Box::new(c))),
            (0..3u8, 0..3u8, inner).prop_map(|(a, b, c)| Shape::Connect(a, b, Box::new(c))),
        ]
    })
}

const COLOURS: [&str; 3] = ["a", "b", "c'"];

// leaves get distinct names in left-to-right order
fn build(s: &Shape, next: &mut usize) -> CwExpr {
    match s {
        Shape::Leaf(c) => {
            *next += 1;
            CwExpr::port(COLOURS[*c as usize], format!("p{next}"))
        }
        Shape::Union(l, r) => {
            let l = build(l, next);
            CwExpr::union(l, build(r, next))
        }
        Shape::Recolour(a, b, c) => CwExpr::recolour(COLOURS[*a as usize], COLOURS[*b as usize], build(c, next)),
        Shape::Connect(a, b, c) => CwExpr::connect(COLOURS[*a as usize], COLOURS[*b as usize], build(c, next)),
    }
}

fn expr() -> impl Strategy<Value = CwExpr> {
    shape().prop_map(|s| build(&s, &mut 0))
}

type Named = (BTreeSet<(String, String)>, BTreeMap<String, String>);

fn by_name(lg: &LabelledGraph) -> Named {
    let g = &lg.graph;
    let edges = g.edges().map(|(v, w)| (g.name(v).to_string(), g.name(w).to_string())).collect();
    let colours = (0..g.vertex_count())
        .map(|v| (g.name(v).to_string(), lg.colour_of(v).as_str().to_string()))
        .collect();
    (edges, colours)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cops_win_is_monotone_in_k(g in graph(5)) {
        for variant in Variant::ALL {
            let wins: Vec<bool> = (0..=g.vertex_count())
                .map(|k| solve(&g, &GameConfig::new(variant, k)).unwrap().cops_win())
                .collect();
            prop_assert!(wins.windows(2).all(|w| !w[0] || w[1]), "{variant}: {wins:?}");
            prop_assert!(wins.last() == Some(&true), "{variant}: all cops must win");
            let first = wins.iter().position(|&w| w).unwrap() as u32;
            let value = measure(&g, variant, DEFAULT_BUDGET).unwrap().value;
            let expected = match variant {
                Variant::Tw | Variant::Dpw => first.saturating_sub(1),
                _ => first,
            };
            prop_assert_eq!(value, expected, "{}", variant);
        }
    }

    #[test]
    fn reachable_is_monotone_and_antitone((g, s, t, b) in graph_with_sets(8)) {
        let r = |blocked: &VertexSet, src: &VertexSet| g.reachable(blocked, src).unwrap();
        let base = r(&b, &s);
        prop_assert!(s.difference(&b).is_subset(&base));
        prop_assert!(base.is_disjoint(&b));
        // more sources reach more
        prop_assert!(base.is_subset(&r(&b, &s.union(&t))));
        // more blockers reach less
        prop_assert!(r(&b.union(&t), &s).is_subset(&base));
        // closed under unblocked successors
        for v in base.iter() {
            for &w in g.successors(v) {
                prop_assert!(b.contains(w) || base.contains(w));
            }
        }
    }

    #[test]
    fn symmetric_closure_is_symmetric(g in graph(7)) {
        let c = g.symmetric_closure();
        let n = g.vertex_count();
        for v in 0..n {
            for w in 0..n {
                prop_assert_eq!(c.has_edge(v, w), g.has_edge(v, w) || g.has_edge(w, v));
            }
        }
        prop_assert!(c.symmetric_closure() == c);
    }

    #[test]
    fn sccs_partition_in_topological_order(g in graph(8)) {
        let sccs = g.sccs();
        let mut index = vec![usize::MAX; g.vertex_count()];
        for (i, comp) in sccs.iter().enumerate() {
            prop_assert!(!comp.is_empty());
            for &v in comp {
                prop_assert_eq!(index[v], usize::MAX);
                index[v] = i;
            }
        }
        prop_assert!(index.iter().all(|&i| i != usize::MAX));
        for (v, w) in g.edges() {
            prop_assert!(index[v] <= index[w], "edge {v}->{w} goes backwards");
        }
        // members of one component reach each other
        let none = g.empty_set();
        for comp in &sccs {
            let from = g.reachable(&none, &VertexSet::singleton(g.vertex_count(), comp[0])).unwrap();
            let back: Vec<usize> = comp.iter().copied().filter(|&v| {
                g.reachable(&none, &VertexSet::singleton(g.vertex_count(), v)).unwrap().contains(comp[0])
            }).collect();
            prop_assert!(comp.iter().all(|&v| from.contains(v)));
            prop_assert_eq!(&back, comp);
        }
    }

    #[test]
    fn json_round_trip(g in graph(8)) {
        let text = serialize_graph(&g);
        prop_assert!(parse_graph(text.as_bytes()).unwrap() == g);
    }

    #[test]
    fn sexpr_round_trip(e in expr()) {
        prop_assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn union_commutes_up_to_names(ls in shape(), rs in shape()) {
        let mut next = 0;
        let l = build(&ls, &mut next);
        let r = build(&rs, &mut next);
        let lr = eval(&CwExpr::union(l.clone(), r.clone())).unwrap();
        let rl = eval(&CwExpr::union(r, l)).unwrap();
        prop_assert_eq!(by_name(&lr), by_name(&rl));
    }

    #[test]
    fn connect_is_idempotent(e in expr(), a in 0..3usize, b in 0..3usize) {
        let once = CwExpr::connect(COLOURS[a], COLOURS[b], e);
        let twice = CwExpr::connect(COLOURS[a], COLOURS[b], once.clone());
        prop_assert_eq!(by_name(&eval(&once).unwrap()), by_name(&eval(&twice).unwrap()));
    }

    #[test]
    fn recolour_empties_the_source(e in expr(), a in 0..3usize, b in 0..3usize) {
        prop_assume!(a != b);
        let before = eval(&e).unwrap();
        let after = eval(&CwExpr::recolour(COLOURS[a], COLOURS[b], e)).unwrap();
        prop_assert!(after.ports(&COLOURS[a].into()).is_empty());
        prop_assert_eq!(before.graph.edge_count(), after.graph.edge_count());
        let moved = before.ports(&COLOURS[a].into()).len() + before.ports(&COLOURS[b].into()).len();
        prop_assert_eq!(after.ports(&COLOURS[b].into()).len(), moved);
    }
}
