//! Immutable directed graphs with named vertices.
//!
//! Vertex ids are dense (`0..vertex_count`) and stable; every vertex carries a
//! unique, non-empty name. Self-loops are allowed, parallel edges are not.

mod io;
mod vertex_set;

use std::collections::{BTreeSet, HashMap};

use petgraph::algo::tarjan_scc;
use thiserror::Error;

pub use io::{parse_graph, serialize_graph, to_dot};
pub use vertex_set::VertexSet;
pub(crate) use vertex_set::low_bits;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph with {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("vertex set over {found} vertices used with a graph of {expected} vertices")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("duplicate vertex name {0:?}")]
    DuplicateName(String),
    #[error("empty vertex name at id {0}")]
    EmptyName(usize),
    #[error("unknown vertex name {0:?}")]
    UnknownName(String),
    #[error("dangling endpoint in edge [{from},{to}]")]
    DanglingEndpoint { from: usize, to: usize },
    #[error("duplicate edge [{from},{to}]")]
    DuplicateEdge { from: usize, to: usize },
    #[error("vertex ids must be dense from 0: entry {position} has id {found}")]
    NonDenseId { position: usize, found: usize },
    #[error("malformed graph JSON: {0}")]
    Json(String),
}

/// A finite directed graph.
#[derive(Clone)]
pub struct Graph {
    names: Vec<String>,
    succ: Vec<Vec<usize>>,
    succ_sets: Vec<VertexSet>,
    index: HashMap<String, usize>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.succ == other.succ
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("names", &self.names)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Builds a graph from vertex names and an edge list. Repeated edges are
    /// collapsed.
    pub fn new(
        names: Vec<String>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let n = names.len();
        let mut index = HashMap::with_capacity(n);
        for (id, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(GraphError::EmptyName(id));
            }
            if index.insert(name.clone(), id).is_some() {
                return Err(GraphError::DuplicateName(name.clone()));
            }
        }
        let mut adjacency = vec![BTreeSet::new(); n];
        for (from, to) in edges {
            if from >= n || to >= n {
                return Err(GraphError::DanglingEndpoint { from, to });
            }
            adjacency[from].insert(to);
        }
        let succ: Vec<Vec<usize>> = adjacency
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let succ_sets = succ
            .iter()
            .map(|s| VertexSet::from_ids(n, s.iter().copied()))
            .collect();
        Ok(Graph {
            names,
            succ,
            succ_sets,
            index,
        })
    }

    /// Graph on vertices named by `names` with edges given by name.
    pub fn from_named_edges<'a>(
        names: &[&str],
        edges: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Graph, GraphError> {
        let lookup: HashMap<&str, usize> =
            names.iter().enumerate().map(|(i, n)| (*n, i)).collect();
        let mut resolved = Vec::new();
        for (a, b) in edges {
            let from = *lookup
                .get(a)
                .ok_or_else(|| GraphError::UnknownName(a.to_string()))?;
            let to = *lookup
                .get(b)
                .ok_or_else(|| GraphError::UnknownName(b.to_string()))?;
            resolved.push((from, to));
        }
        Graph::new(names.iter().map(|s| s.to_string()).collect(), resolved)
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.succ.iter().map(Vec::len).sum()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn successors(&self, v: usize) -> &[usize] {
        &self.succ[v]
    }

    pub fn successor_set(&self, v: usize) -> &VertexSet {
        &self.succ_sets[v]
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        from < self.vertex_count() && self.succ_sets[from].contains(to)
    }

    /// All edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(v, ws)| ws.iter().map(move |&w| (v, w)))
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    /// A vertex set over this graph, rejecting out-of-range ids.
    pub fn vertex_set(
        &self,
        ids: impl IntoIterator<Item = usize>,
    ) -> Result<VertexSet, GraphError> {
        let mut set = self.empty_set();
        for v in ids {
            self.check_vertex(v)?;
            set.insert(v);
        }
        Ok(set)
    }

    /// A vertex set over this graph from vertex names.
    pub fn named_set<'a>(
        &self,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Result<VertexSet, GraphError> {
        let mut set = self.empty_set();
        for name in names {
            let v = self
                .id_of(name)
                .ok_or_else(|| GraphError::UnknownName(name.to_string()))?;
            set.insert(v);
        }
        Ok(set)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                count: self.vertex_count(),
            })
        }
    }

    fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
        if set.universe() == self.vertex_count() {
            Ok(())
        } else {
            Err(GraphError::UniverseMismatch {
                expected: self.vertex_count(),
                found: set.universe(),
            })
        }
    }

    /// Vertices reachable from `sources` by directed paths that avoid
    /// `blocked`. Blocked sources contribute nothing; every unblocked source
    /// is in the result.
    pub fn reachable(
        &self,
        blocked: &VertexSet,
        sources: &VertexSet,
    ) -> Result<VertexSet, GraphError> {
        self.check_set(blocked)?;
        self.check_set(sources)?;
        Ok(self.reach_unchecked(blocked, sources))
    }

    pub(crate) fn reach_unchecked(&self, blocked: &VertexSet, sources: &VertexSet) -> VertexSet {
        let mut seen = sources.difference(blocked);
        let mut stack: Vec<usize> = seen.iter().collect();
        while let Some(v) = stack.pop() {
            for &w in &self.succ[v] {
                if !blocked.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// The graph with every edge also present in reverse.
    pub fn symmetric_closure(&self) -> Graph {
        let reversed = self.edges().map(|(v, w)| (w, v));
        let edges: Vec<_> = self.edges().chain(reversed).collect();
        Graph::new(self.names.clone(), edges).expect("closure of a valid graph is valid")
    }

    /// Strongly connected components, listed in a topological order of the
    /// condensation: every edge stays inside a component or points to a later
    /// one. Members of each component are sorted ascending.
    pub fn sccs(&self) -> Vec<Vec<usize>> {
        let mut pg = petgraph::graph::DiGraph::<(), ()>::with_capacity(
            self.vertex_count(),
            self.edge_count(),
        );
        let nodes: Vec<_> = (0..self.vertex_count()).map(|_| pg.add_node(())).collect();
        for (v, w) in self.edges() {
            pg.add_edge(nodes[v], nodes[w], ());
        }
        // tarjan_scc emits components in reverse topological order.
        let mut comps: Vec<Vec<usize>> = tarjan_scc(&pg)
            .into_iter()
            .map(|c| {
                let mut ids: Vec<usize> = c.into_iter().map(|n| n.index()).collect();
                ids.sort_unstable();
                ids
            })
            .collect();
        comps.reverse();
        comps
    }

    /// Whether a component has an internal cycle (size > 1 or a self-loop).
    pub fn is_nontrivial_component(&self, component: &[usize]) -> bool {
        component.len() > 1 || component.first().is_some_and(|&v| self.has_edge(v, v))
    }

    /// Subgraph induced by `keep`, re-indexed densely in ascending id order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<Graph, GraphError> {
        Ok(self.induced_subgraph_with_map(keep)?.0)
    }

    /// Like [`Graph::induced_subgraph`], also returning the original id of
    /// each new vertex.
    pub fn induced_subgraph_with_map(
        &self,
        keep: &VertexSet,
    ) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(keep)?;
        let old_ids: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let names = old_ids.iter().map(|&v| self.names[v].clone()).collect();
        let edges = self
            .edges()
            .filter(|&(v, w)| keep.contains(v) && keep.contains(w))
            .map(|(v, w)| (new_id[v], new_id[w]));
        Ok((Graph::new(names, edges)?, old_ids))
    }

    /// True iff the graph has no directed cycle; a self-loop is a cycle.
    pub fn is_acyclic(&self) -> bool {
        self.sccs()
            .iter()
            .all(|c| !self.is_nontrivial_component(c))
    }
}
