//! Simple undirected graphs as per-vertex neighbor bitsets, the standard
//! families (complete, path, cycle, hypercube), and the two graph products.
//!
//! Vertex indices are 0-based internally. Product graphs carry a
//! [`GridLabeling`] translating to the 1-based (row, column) coordinates used
//! in all user-facing output: row r of factor G, column c of factor H, with
//! index `(c-1)*rows + (r-1)` (column-major).

use crate::bitset::{VertexSet, MAX_VERTICES};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("family parameter must be positive")]
    ZeroParam,
    #[error("cycle requires at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("graph would have {0} vertices, cap is {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex index {index} out of range for {count} vertices")]
    IndexOutOfRange { index: usize, count: usize },
    #[error("malformed graph header: {0:?}")]
    MalformedHeader(String),
    #[error("malformed edge line: {0:?}")]
    MalformedLine(String),
}

/// Immutable simple undirected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Build from an edge list. Duplicate edges are deduplicated; self-loops
    /// and out-of-range endpoints are errors.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        if vertex_count > MAX_VERTICES {
            return Err(GraphError::TooLarge(vertex_count));
        }
        let mut adj = vec![VertexSet::empty(vertex_count); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count {
                return Err(GraphError::IndexOutOfRange { index: u, count: vertex_count });
            }
            if v >= vertex_count {
                return Err(GraphError::IndexOutOfRange { index: v, count: vertex_count });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.count()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges as (u, v) with u < v, ascending lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.vertex_count() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

/// Bijection between 1-based (row, column) grid coordinates and vertex
/// indices of an n-row, t-column product graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridLabeling {
    pub rows: usize,
    pub cols: usize,
}

impl GridLabeling {
    pub fn new(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1);
        GridLabeling { rows, cols }
    }

    /// (row, col) in 1..=rows x 1..=cols to vertex index (column-major).
    pub fn to_index(&self, row: usize, col: usize) -> usize {
        assert!((1..=self.rows).contains(&row), "row {row} out of 1..={}", self.rows);
        assert!((1..=self.cols).contains(&col), "col {col} out of 1..={}", self.cols);
        (col - 1) * self.rows + (row - 1)
    }

    pub fn to_coord(&self, index: usize) -> (usize, usize) {
        assert!(index < self.rows * self.cols);
        (index % self.rows + 1, index / self.rows + 1)
    }
}

/// The graph families the constructions and probes draw from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Complete,
    Path,
    Cycle,
    Hypercube,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFamilySpec {
    pub family: Family,
    pub param: usize,
}

/// Build a named base graph: K_n, P_t, C_t, or Q_d.
pub fn build_base_graph(spec: GraphFamilySpec) -> Result<Graph, GraphError> {
    let p = spec.param;
    if p == 0 {
        return Err(GraphError::ZeroParam);
    }
    match spec.family {
        Family::Complete => {
            let edges = (0..p).flat_map(|u| (u + 1..p).map(move |v| (u, v)));
            Graph::from_edges(p, edges)
        }
        Family::Path => Graph::from_edges(p, (1..p).map(|v| (v - 1, v))),
        Family::Cycle => {
            if p < 3 {
                return Err(GraphError::CycleTooShort(p));
            }
            Graph::from_edges(p, (0..p).map(|v| (v, (v + 1) % p)))
        }
        Family::Hypercube => {
            let n = 1usize
                .checked_shl(p as u32)
                .filter(|&n| n <= MAX_VERTICES)
                .ok_or(GraphError::TooLarge(usize::MAX))?;
            let edges = (0..n).flat_map(move |v| {
                (0..p).filter_map(move |b| {
                    let u = v ^ (1 << b);
                    (v < u).then_some((v, u))
                })
            });
            Graph::from_edges(n, edges)
        }
    }
}

/// Label of a hypercube vertex as a d-bit string, most significant bit first.
pub fn hypercube_label(v: usize, d: usize) -> String {
    (0..d).rev().map(|b| if v >> b & 1 == 1 { '1' } else { '0' }).collect()
}

fn product_graph(
    g: &Graph,
    h: &Graph,
    adjacent: impl Fn(usize, usize, usize, usize) -> bool,
) -> Result<(Graph, GridLabeling), GraphError> {
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let n = ng.checked_mul(nh).ok_or(GraphError::TooLarge(usize::MAX))?;
    let labeling = GridLabeling::new(ng, nh);
    let mut edges = Vec::new();
    for gh in 0..n {
        let (gu, hu) = (gh % ng, gh / ng);
        for gh2 in gh + 1..n {
            let (gv, hv) = (gh2 % ng, gh2 / ng);
            if adjacent(gu, hu, gv, hv) {
                edges.push((gh, gh2));
            }
        }
    }
    Ok((Graph::from_edges(n, edges)?, labeling))
}

/// Direct (tensor) product: (g,h) ~ (g',h') iff gg' in E(G) and hh' in E(H).
pub fn direct_product(g: &Graph, h: &Graph) -> Result<(Graph, GridLabeling), GraphError> {
    product_graph(g, h, |gu, hu, gv, hv| g.has_edge(gu, gv) && h.has_edge(hu, hv))
}

/// Cartesian product: one coordinate equal, the other adjacent.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<(Graph, GridLabeling), GraphError> {
    product_graph(g, h, |gu, hu, gv, hv| {
        (gu == gv && h.has_edge(hu, hv)) || (hu == hv && g.has_edge(gu, gv))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        build_base_graph(GraphFamilySpec { family: Family::Complete, param: n }).unwrap()
    }
    fn path(t: usize) -> Graph {
        build_base_graph(GraphFamilySpec { family: Family::Path, param: t }).unwrap()
    }
    fn cycle(t: usize) -> Graph {
        build_base_graph(GraphFamilySpec { family: Family::Cycle, param: t }).unwrap()
    }

    /// Brute-force isomorphism over all vertex permutations; test-only.
    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        let n = a.vertex_count();
        if n != b.vertex_count() || a.edge_count() != b.edge_count() {
            return false;
        }
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            (0..n).all(|u| (0..n).all(|v| a.has_edge(u, v) == b.has_edge(p[u], p[v])))
        })
    }

    fn permute(p: &mut Vec<usize>, k: usize, check: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if k == p.len() {
            return check(p);
        }
        for i in k..p.len() {
            p.swap(k, i);
            if permute(p, k + 1, check) {
                p.swap(k, i);
                return true;
            }
            p.swap(k, i);
        }
        false
    }

    #[test]
    fn base_families() {
        let k3 = complete(3);
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        assert!((0..3).all(|v| k3.degree(v) == 2));

        let q3 = build_base_graph(GraphFamilySpec { family: Family::Hypercube, param: 3 }).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        assert!((0..8).all(|v| q3.degree(v) == 3));

        let p1 = path(1);
        assert_eq!((p1.vertex_count(), p1.edge_count()), (1, 0));
    }

    #[test]
    fn family_errors() {
        assert_eq!(
            build_base_graph(GraphFamilySpec { family: Family::Cycle, param: 2 }),
            Err(GraphError::CycleTooShort(2))
        );
        assert_eq!(
            build_base_graph(GraphFamilySpec { family: Family::Path, param: 0 }),
            Err(GraphError::ZeroParam)
        );
    }

    #[test]
    fn direct_product_k2_k2() {
        let k2 = complete(2);
        let (g, _) = direct_product(&k2, &k2).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 2));
    }

    #[test]
    fn direct_product_k3_k2_is_c6() {
        let (g, _) = direct_product(&complete(3), &complete(2)).unwrap();
        assert!(isomorphic(&g, &cycle(6)));
    }

    #[test]
    fn direct_product_edge_counts() {
        // cycle adds n(n-1) = 6 edges over the path version for K3
        let (gc, _) = direct_product(&complete(3), &cycle(4)).unwrap();
        let (gp, _) = direct_product(&complete(3), &path(4)).unwrap();
        assert_eq!(gc.edge_count(), 24);
        assert_eq!(gp.edge_count(), 18);
        assert_eq!(gc.edge_count() - gp.edge_count(), 3 * 2);
    }

    #[test]
    fn cartesian_product_examples() {
        let k2 = complete(2);
        let (c4, _) = cartesian_product(&k2, &k2).unwrap();
        assert!(isomorphic(&c4, &cycle(4)));

        let (ladder, _) = cartesian_product(&k2, &path(3)).unwrap();
        assert_eq!((ladder.vertex_count(), ladder.edge_count()), (6, 7));

        let (sq, _) = cartesian_product(&k2, &k2).unwrap();
        let (cube, _) = cartesian_product(&sq, &k2).unwrap();
        let q3 = build_base_graph(GraphFamilySpec { family: Family::Hypercube, param: 3 }).unwrap();
        assert!(isomorphic(&cube, &q3));
    }

    #[test]
    fn labeling_bijection() {
        let lab = GridLabeling::new(4, 6);
        for r in 1..=4 {
            for c in 1..=6 {
                assert_eq!(lab.to_coord(lab.to_index(r, c)), (r, c));
            }
        }
        // column-major, (1,1) is index 0
        assert_eq!(lab.to_index(1, 1), 0);
        assert_eq!(lab.to_index(4, 1), 3);
        assert_eq!(lab.to_index(1, 2), 4);
    }

    #[test]
    fn hypercube_labels() {
        assert_eq!(hypercube_label(0, 3), "000");
        assert_eq!(hypercube_label(6, 3), "110");
        assert_eq!(hypercube_label(29, 5), "11101");
    }
}
