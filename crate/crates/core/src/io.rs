//! Plain-text graph files.
//!
//! Format: line 1 `graph <vertex_count>`, then `e <u> <v>` lines with 0-based
//! indices. `#` starts a comment. The writer emits edges with u < v in
//! ascending lexicographic order. Product graphs additionally carry their
//! grid shape in a `# rows <n> cols <t>` comment so coordinate-based tools
//! can recover the labeling.

use crate::graph::{Graph, GraphError, GridLabeling};

/// A parsed graph file: the graph plus the grid labeling, when the file
/// recorded one.
#[derive(Clone, Debug)]
pub struct GraphDocument {
    pub graph: Graph,
    pub labeling: Option<GridLabeling>,
}

pub fn load_graph(text: &str) -> Result<Graph, GraphError> {
    Ok(load_document(text)?.graph)
}

pub fn load_document(text: &str) -> Result<GraphDocument, GraphError> {
    let mut vertex_count: Option<usize> = None;
    let mut labeling = None;
    let mut edges = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let toks: Vec<&str> = comment.split_whitespace().collect();
            if let ["rows", r, "cols", c] = toks.as_slice() {
                if let (Ok(r), Ok(c)) = (r.parse::<usize>(), c.parse::<usize>()) {
                    if r >= 1 && c >= 1 {
                        labeling = Some(GridLabeling::new(r, c));
                    }
                }
            }
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match (vertex_count, toks.as_slice()) {
            (None, ["graph", n]) => {
                vertex_count =
                    Some(n.parse().map_err(|_| GraphError::MalformedHeader(line.into()))?);
            }
            (None, _) => return Err(GraphError::MalformedHeader(line.into())),
            (Some(_), ["e", u, v]) => {
                let u: usize = u.parse().map_err(|_| GraphError::MalformedLine(line.into()))?;
                let v: usize = v.parse().map_err(|_| GraphError::MalformedLine(line.into()))?;
                edges.push((u, v));
            }
            (Some(_), _) => return Err(GraphError::MalformedLine(line.into())),
        }
    }
    let n = vertex_count.ok_or_else(|| GraphError::MalformedHeader(String::new()))?;
    let graph = Graph::from_edges(n, edges)?;
    if let Some(lab) = labeling {
        if lab.rows * lab.cols != n {
            labeling = None;
        }
    }
    Ok(GraphDocument { graph, labeling })
}

pub fn save_graph(g: &Graph) -> String {
    save_document(g, None)
}

pub fn save_document(g: &Graph, labeling: Option<GridLabeling>) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    if let Some(lab) = labeling {
        out.push_str(&format!("# rows {} cols {}\n", lab.rows, lab.cols));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("e {u} {v}\n"));
    }
    out
}
