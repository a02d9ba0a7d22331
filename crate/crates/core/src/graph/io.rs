use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<[usize; 2]>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexDoc {
    id: usize,
    name: String,
}

/// Compact JSON form: `{"vertices":[{"id":0,"name":"x"}],"edges":[[0,0]]}`,
/// vertices by id, edges sorted lexicographically.
pub fn serialize_graph(graph: &Graph) -> String {
    let doc = GraphDoc {
        vertices: graph
            .names()
            .iter()
            .enumerate()
            .map(|(id, name)| VertexDoc {
                id,
                name: name.clone(),
            })
            .collect(),
        edges: graph.edges().map(|(v, w)| [v, w]).collect(),
    };
    serde_json::to_string(&doc).expect("graph documents always serialize")
}

pub fn parse_graph(bytes: &[u8]) -> Result<Graph, GraphError> {
    let doc: GraphDoc =
        serde_json::from_slice(bytes).map_err(|e| GraphError::Json(e.to_string()))?;
    let n = doc.vertices.len();
    let mut names = vec![None; n];
    for (position, v) in doc.vertices.into_iter().enumerate() {
        if v.id >= n || names[v.id].is_some() {
            return Err(GraphError::NonDenseId {
                position,
                found: v.id,
            });
        }
        names[v.id] = Some(v.name);
    }
    let names: Vec<String> = names.into_iter().map(Option::unwrap).collect();
    let mut seen = HashSet::with_capacity(doc.edges.len());
    for &[from, to] in &doc.edges {
        if from >= n || to >= n {
            return Err(GraphError::DanglingEndpoint { from, to });
        }
        if !seen.insert((from, to)) {
            return Err(GraphError::DuplicateEdge { from, to });
        }
    }
    Graph::new(names, doc.edges.into_iter().map(|[v, w]| (v, w)))
}

/// Graphviz rendering; output is a pure function of the graph.
pub fn to_dot(graph: &Graph) -> String {
    let mut out = String::from("digraph G {\n");
    for (v, name) in graph.names().iter().enumerate() {
        let label = name.replace('\\', "\\\\").replace('"', "\\\"");
        writeln!(out, "  {v} [label=\"{label}\"];").unwrap();
    }
    for (v, w) in graph.edges() {
        writeln!(out, "  {v} -> {w};").unwrap();
    }
    out.push_str("}\n");
    out
}
