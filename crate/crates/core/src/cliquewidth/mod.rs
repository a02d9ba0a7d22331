//! Cliquewidth expressions: construction, evaluation, colour accounting and
//! edge-exact comparison against a target graph.
//!
//! `Connect(a, a, _)` is allowed and adds every ordered pair of `a`-ports,
//! self-loops included. The builders only use it on single-vertex classes.

mod builders;
mod sexpr;

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{gen_switch_all, gen_zadeh, FamilyError};
use crate::graph::{Graph, GraphError};

pub use builders::{build_switch_all_expr, build_zadeh_expr};
pub use sexpr::parse_expr;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colour(String);

impl Colour {
    pub fn new(label: impl Into<String>) -> Self {
        Colour(label.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Colour {
    fn from(s: &str) -> Self {
        Colour(s.to_string())
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CwExpr {
    /// A single vertex `name` with colour `colour`, no edges.
    Port { colour: Colour, name: String },
    Union(Box<CwExpr>, Box<CwExpr>),
    /// Every `from`-port becomes a `to`-port.
    Recolour { from: Colour, to: Colour, child: Box<CwExpr> },
    /// Adds an edge from every `from`-port to every `to`-port.
    Connect { from: Colour, to: Colour, child: Box<CwExpr> },
}

impl CwExpr {
    pub fn port(colour: impl Into<Colour>, name: impl Into<String>) -> Self {
        CwExpr::Port {
            colour: colour.into(),
            name: name.into(),
        }
    }

    pub fn union(left: CwExpr, right: CwExpr) -> Self {
        CwExpr::Union(Box::new(left), Box::new(right))
    }

    pub fn recolour(from: impl Into<Colour>, to: impl Into<Colour>, child: CwExpr) -> Self {
        CwExpr::Recolour {
            from: from.into(),
            to: to.into(),
            child: Box::new(child),
        }
    }

    pub fn connect(from: impl Into<Colour>, to: impl Into<Colour>, child: CwExpr) -> Self {
        CwExpr::Connect {
            from: from.into(),
            to: to.into(),
            child: Box::new(child),
        }
    }

    /// Number of operator nodes.
    pub fn size(&self) -> usize {
        match self {
            CwExpr::Port { .. } => 1,
            CwExpr::Union(l, r) => 1 + l.size() + r.size(),
            CwExpr::Recolour { child, .. } | CwExpr::Connect { child, .. } => 1 + child.size(),
        }
    }

    /// Every colour mentioned anywhere in the tree.
    pub fn colours(&self) -> BTreeSet<Colour> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            match e {
                CwExpr::Port { colour, .. } => {
                    out.insert(colour.clone());
                }
                CwExpr::Union(l, r) => {
                    stack.push(l);
                    stack.push(r);
                }
                CwExpr::Recolour { from, to, child } | CwExpr::Connect { from, to, child } => {
                    out.insert(from.clone());
                    out.insert(to.clone());
                    stack.push(child);
                }
            }
        }
        out
    }
}

/// Number of distinct colour labels in the expression.
pub fn colours_used(expr: &CwExpr) -> usize {
    expr.colours().len()
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum CwError {
    #[error("port name {0:?} occurs more than once")]
    DuplicateName(String),
    #[error("empty port name")]
    EmptyName,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// A graph with a colour on every vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub colours: Vec<Colour>,
}

impl LabelledGraph {
    pub fn colour_of(&self, v: usize) -> &Colour {
        &self.colours[v]
    }

    pub fn ports(&self, colour: &Colour) -> Vec<usize> {
        (0..self.colours.len()).filter(|&v| self.colours[v] == *colour).collect()
    }
}

#[derive(Default)]
struct Raw {
    names: Vec<String>,
    colour: Vec<usize>,
    edges: HashSet<(usize, usize)>,
}

#[derive(Default)]
struct Interner {
    ids: HashMap<Colour, usize>,
    labels: Vec<Colour>,
}

impl Interner {
    fn id(&mut self, c: &Colour) -> usize {
        if let Some(&i) = self.ids.get(c) {
            return i;
        }
        self.labels.push(c.clone());
        self.ids.insert(c.clone(), self.labels.len() - 1);
        self.labels.len() - 1
    }
}

fn eval_raw(expr: &CwExpr, colours: &mut Interner) -> Raw {
    match expr {
        CwExpr::Port { colour, name } => Raw {
            names: vec![name.clone()],
            colour: vec![colours.id(colour)],
            edges: HashSet::new(),
        },
        CwExpr::Union(l, r) => {
            let mut left = eval_raw(l, colours);
            let right = eval_raw(r, colours);
            let shift = left.names.len();
            left.names.extend(right.names);
            left.colour.extend(right.colour);
            left.edges.extend(right.edges.into_iter().map(|(v, w)| (v + shift, w + shift)));
            left
        }
        CwExpr::Recolour { from, to, child } => {
            let mut g = eval_raw(child, colours);
            let (a, b) = (colours.id(from), colours.id(to));
            for c in &mut g.colour {
                if *c == a {
                    *c = b;
                }
            }
            g
        }
        CwExpr::Connect { from, to, child } => {
            let mut g = eval_raw(child, colours);
            let (a, b) = (colours.id(from), colours.id(to));
            let class = |c| -> Vec<usize> { (0..g.colour.len()).filter(|&v| g.colour[v] == c).collect() };
            let (froms, tos) = (class(a), class(b));
            g.edges.extend(froms.iter().flat_map(|&v| tos.iter().map(move |&w| (v, w))));
            g
        }
    }
}

/// Evaluates an expression. Vertices keep their port names and appear in
/// left-to-right leaf order.
pub fn eval(expr: &CwExpr) -> Result<LabelledGraph, CwError> {
    let mut interner = Interner::default();
    let raw = eval_raw(expr, &mut interner);
    let colours = raw.colour.iter().map(|&c| interner.labels[c].clone()).collect();
    let graph = Graph::new(raw.names, raw.edges).map_err(|e| match e {
        GraphError::DuplicateName(name) => CwError::DuplicateName(name),
        GraphError::EmptyName(_) => CwError::EmptyName,
        other => unreachable!("evaluation produced an invalid graph: {other}"),
    })?;
    Ok(LabelledGraph { graph, colours })
}

/// The two families with known cliquewidth expressions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CwFamily {
    SwitchAll,
    Zadeh,
}

impl CwFamily {
    pub fn name(self) -> &'static str {
        match self {
            CwFamily::SwitchAll => "switch-all",
            CwFamily::Zadeh => "zadeh",
        }
    }

    /// The colour budget the construction is designed for.
    pub fn colour_bound(self) -> usize {
        match self {
            CwFamily::SwitchAll => 10,
            CwFamily::Zadeh => 9,
        }
    }

    pub fn build_expr(self, n: usize) -> Result<CwExpr, FamilyError> {
        match self {
            CwFamily::SwitchAll => build_switch_all_expr(n),
            CwFamily::Zadeh => build_zadeh_expr(n),
        }
    }

    pub fn build_graph(self, n: usize) -> Result<Graph, FamilyError> {
        match self {
            CwFamily::SwitchAll => gen_switch_all(n),
            CwFamily::Zadeh => gen_zadeh(n),
        }
    }
}

impl FromStr for CwFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "switch-all" => Ok(CwFamily::SwitchAll),
            "zadeh" => Ok(CwFamily::Zadeh),
            _ => Err(format!("unknown family {s:?} (expected switch-all or zadeh)")),
        }
    }
}

/// Outcome of comparing an evaluated expression with a target graph by
/// vertex name. Edges are listed as `(from, to)` name pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CwReport {
    pub family: Option<String>,
    pub n: Option<usize>,
    pub equal: bool,
    pub colour_count: usize,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub missing_edges: Vec<(String, String)>,
    pub extra_edges: Vec<(String, String)>,
    /// Names produced by the expression that the target lacks.
    pub unknown_names: Vec<String>,
    /// Target vertices the expression never produced.
    pub missing_vertices: Vec<String>,
}

pub fn verify_expr(expr: &CwExpr, target: &Graph) -> Result<CwReport, CwError> {
    let lg = eval(expr)?;
    let got = &lg.graph;
    let named = |g: &Graph| -> BTreeSet<(String, String)> {
        g.edges()
            .map(|(v, w)| (g.name(v).to_string(), g.name(w).to_string()))
            .collect()
    };
    let (want_edges, got_edges) = (named(target), named(got));
    let unknown_names: Vec<String> = got
        .names()
        .iter()
        .filter(|name| target.id_of(name).is_none())
        .cloned()
        .collect();
    let missing_vertices: Vec<String> = target
        .names()
        .iter()
        .filter(|name| got.id_of(name).is_none())
        .cloned()
        .collect();
    let missing_edges: Vec<_> = want_edges.difference(&got_edges).cloned().collect();
    let extra_edges: Vec<_> = got_edges.difference(&want_edges).cloned().collect();
    Ok(CwReport {
        family: None,
        n: None,
        equal: unknown_names.is_empty()
            && missing_vertices.is_empty()
            && missing_edges.is_empty()
            && extra_edges.is_empty(),
        colour_count: colours_used(expr),
        vertex_count: got.vertex_count(),
        edge_count: got.edge_count(),
        missing_edges,
        extra_edges,
        unknown_names,
        missing_vertices,
    })
}

/// Builds the family's expression at `n` and compares it with the generator.
pub fn verify_family_expr(family: CwFamily, n: usize) -> Result<CwReport, CwError> {
    let expr = family.build_expr(n)?;
    let target = family.build_graph(n)?;
    let mut report = verify_expr(&expr, &target)?;
    report.family = Some(family.name().to_string());
    report.n = Some(n);
    Ok(report)
}
