//! Expressions for the two counterexample families, built layer by layer.
//! Vertex names match the generators.

use crate::families::FamilyError;

use super::CwExpr;

/// Threads a growing expression through a sequence of operations.
struct Builder(CwExpr);

impl Builder {
    fn add(mut self, piece: CwExpr) -> Self {
        self.0 = CwExpr::union(self.0, piece);
        self
    }

    fn connect(mut self, pairs: &[(&str, &str)]) -> Self {
        for &(a, b) in pairs {
            self.0 = CwExpr::connect(a, b, self.0);
        }
        self
    }

    fn recolour(mut self, pairs: &[(&str, &str)]) -> Self {
        for &(a, b) in pairs {
            self.0 = CwExpr::recolour(a, b, self.0);
        }
        self
    }
}

fn ports(members: &[(&str, String)]) -> Builder {
    let mut it = members.iter().map(|(c, name)| CwExpr::port(*c, name.as_str()));
    let first = it.next().expect("at least one port");
    Builder(it.fold(first, CwExpr::union))
}

fn check(n: usize) -> Result<(), FamilyError> {
    if n == 0 {
        Err(FamilyError::InvalidParameter("n must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Ten colours. Between layers: `done` (finished vertices), `t` (head of the
/// `t`-chain), `a` (all `a_m`), `k` (all `k_j`), `r`, `s`. Inside a layer
/// the transient colours `t'`, `d`, `f`, `g'` mark the newest vertices.
pub fn build_switch_all_expr(n: usize) -> Result<CwExpr, FamilyError> {
    check(n)?;
    let mut main = ports(&[("r", "r".into()), ("s", "s".into()), ("t'", "c".into())])
        .connect(&[("t'", "r"), ("t'", "s")])
        .recolour(&[("t'", "t")]);
    for i in 1..=n {
        for m in [2 * i - 1, 2 * i] {
            let pair = ports(&[("a", format!("a_{m}")), ("t'", format!("t_{m}"))]).connect(&[("a", "t'")]);
            main = main
                .add(pair.0)
                .connect(&[("t'", "t"), ("t'", "r"), ("t'", "s")])
                .recolour(&[("t", "done"), ("t'", "t")]);
        }
        // h_i is briefly coloured k; no old k_j is present in the piece.
        let layer = ports(&[
            ("d", format!("d_{i}")),
            ("done", format!("e_{i}")),
            ("f", format!("f_{i}")),
            ("g'", format!("g_{i}")),
            ("k", format!("h_{i}")),
            ("t'", format!("k_{i}")),
        ])
        .connect(&[
            ("d", "done"),
            ("done", "d"),
            ("done", "k"),
            ("k", "t'"),
            ("g'", "f"),
            ("g'", "t'"),
            ("f", "done"),
        ])
        .recolour(&[("k", "done")]);
        main = main
            .add(layer.0)
            .connect(&[("d", "a"), ("d", "r"), ("d", "s"), ("s", "f"), ("r", "g'"), ("k", "g'")])
            .recolour(&[("d", "done"), ("f", "done"), ("g'", "done"), ("t'", "k")]);
    }
    let main = main
        .add(CwExpr::port("t'", "x"))
        .connect(&[("k", "t'"), ("t'", "t'"), ("r", "t'"), ("s", "t'")]);
    Ok(main.0)
}

/// Nine colours. Between layers: `K` (`k_1..k_i`), `B` (all `b`), `D` (all
/// `d`), `H` (`h^0` vertices still owed edges to later `k`), `H_l`/`H_r`
/// (the newest `h^0`/`h^1`), `Done`. `K'` and `C` mark the newest `k` and
/// `c` vertices.
pub fn build_zadeh_expr(n: usize) -> Result<CwExpr, FamilyError> {
    check(n)?;
    let mut main = Builder(CwExpr::port("K'", "k_1"));
    for i in 1..=n {
        if i > 1 {
            main = main.add(CwExpr::port("K'", format!("k_{i}")));
        }
        main = main
            .connect(&[("H", "K'"), ("H_r", "K'")])
            .recolour(&[("H_l", "H"), ("H_r", "Done")])
            .connect(&[("K", "K'"), ("K'", "K")]);
        for (j, h) in [(0, "H_l"), (1, "H_r")] {
            let half = ports(&[
                ("C", format!("c_{i}^{j}")),
                ("Done", format!("A_{i}^{j}")),
                ("B", format!("b_{{{i},0}}^{j}")),
                ("B", format!("b_{{{i},1}}^{j}")),
                ("D", format!("d_{i}^{j}")),
                (h, format!("h_{i}^{j}")),
            ])
            .connect(&[("C", "Done"), ("Done", "D"), ("Done", "B"), ("B", "Done"), ("D", h)]);
            main = main.add(half.0);
        }
        main = main
            .connect(&[("K'", "C")])
            .recolour(&[("K'", "K"), ("C", "Done")]);
    }
    let main = main
        .recolour(&[("H_l", "H")])
        .add(CwExpr::port("K'", "s"))
        .connect(&[("K'", "K"), ("D", "K'")])
        .recolour(&[("D", "Done")])
        .add(CwExpr::port("C", format!("k_{}", n + 1)))
        .add(CwExpr::port("D", "t"))
        .connect(&[
            ("H_r", "C"),
            ("C", "D"),
            ("D", "D"),
            ("K", "D"),
            ("B", "K"),
            ("B", "D"),
            ("K'", "D"),
            // h^0 → t; absent from the published connect list
            ("H", "D"),
        ]);
    Ok(main.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cliquewidth::{colours_used, eval, verify_family_expr, CwFamily};

    #[test]
    fn switch_all_small() {
        let g = eval(&build_switch_all_expr(1).unwrap()).unwrap().graph;
        assert_eq!(g.vertex_count(), 14);
        let g2 = eval(&build_switch_all_expr(2).unwrap()).unwrap().graph;
        assert!(g2.has_edge(g2.id_of("k_1").unwrap(), g2.id_of("g_2").unwrap()));
    }

    #[test]
    fn zadeh_small() {
        let g = eval(&build_zadeh_expr(1).unwrap()).unwrap().graph;
        assert_eq!(g.vertex_count(), 16);
        for n in 1..=3 {
            let g = eval(&build_zadeh_expr(n).unwrap()).unwrap().graph;
            let t = g.id_of("t").unwrap();
            assert!(g.has_edge(t, t));
        }
    }

    #[test]
    fn colour_counts() {
        assert_eq!(colours_used(&build_switch_all_expr(3).unwrap()), 10);
        assert_eq!(colours_used(&build_zadeh_expr(3).unwrap()), 9);
    }

    #[test]
    fn edge_exact_up_to_8() {
        for family in [CwFamily::SwitchAll, CwFamily::Zadeh] {
            for n in 1..=8 {
                let r = verify_family_expr(family, n).unwrap();
                assert!(r.equal, "{family:?} n = {n}: {r:?}");
                assert_eq!(r.colour_count, family.colour_bound());
            }
        }
    }

    #[test]
    fn zero_is_rejected() {
        assert!(build_switch_all_expr(0).is_err());
        assert!(build_zadeh_expr(0).is_err());
    }
}
