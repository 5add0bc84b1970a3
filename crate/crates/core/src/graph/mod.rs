//! Simple undirected graphs and the hole machinery built on them.
//!
//! Vertices are dense `0..vertex_count` indices. Every vertex also carries an
//! external integer label (what edge-list files and reports print) and,
//! optionally, a display name.

mod edgelist;
mod holes;
mod solvers;
mod triangles;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

pub use edgelist::{parse_edge_list, read_edge_list, to_edge_list_string, write_edge_list};
pub use holes::{
    hole_report, holes_matching, holes_matching_with, is_pythagorean_degrees, DegreeOrder,
    DegreeTriple, Hole, HoleReport,
};
pub use solvers::{
    chromatic_number, domination_number, greedy_coloring, independence_number, maximum_clique_size,
    maximum_cliques, vertex_cover_number, EXACT_SOLVER_CAP,
};
pub use triangles::{
    enumerate_triangles, for_each_triangle, primitive_degree, primitive_degrees,
    primitive_hole_number, Triangle,
};

/// An undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
    labels: Vec<u64>,
    names: Option<Vec<String>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from labelled endpoint pairs.
    ///
    /// The vertex set is the set of labels that occur, compacted to indices in
    /// ascending label order. Duplicate pairs (in either orientation) collapse
    /// to one edge.
    pub fn from_edges<I>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let edges: Vec<(u64, u64)> = edges.into_iter().collect();
        let mut index_of = BTreeMap::new();
        for &(u, v) in &edges {
            if u == v {
                return Err(Error::SelfLoop { label: u });
            }
            index_of.insert(u, 0usize);
            index_of.insert(v, 0usize);
        }
        let mut labels = Vec::with_capacity(index_of.len());
        for (i, (label, slot)) in index_of.iter_mut().enumerate() {
            *slot = i;
            labels.push(*label);
        }
        let pairs = edges.iter().map(|(u, v)| (index_of[u], index_of[v]));
        Ok(Self::from_index_edges(labels.len(), pairs)?.with_labels(labels))
    }

    /// Builds a graph on `vertex_count` vertices from index pairs. Labels
    /// default to the 1-based position of each vertex.
    pub fn from_index_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        assert!(vertex_count <= u32::MAX as usize);
        let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        index: x,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::SelfLoop {
                    label: u as u64 + 1,
                });
            }
            adjacency[u].push(v as u32);
            adjacency[v].push(u as u32);
        }
        let mut twice_edges = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            list.shrink_to_fit();
            twice_edges += list.len();
        }
        Ok(Graph {
            adjacency,
            labels: (1..=vertex_count as u64).collect(),
            names: None,
            edge_count: twice_edges / 2,
        })
    }

    /// Replaces the external labels. Panics if the length does not match.
    pub fn with_labels(mut self, labels: Vec<u64>) -> Self {
        assert_eq!(labels.len(), self.vertex_count(), "one label per vertex");
        self.labels = labels;
        self
    }

    /// Attaches display names (used as comments in edge-list output).
    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.vertex_count(), "one name per vertex");
        self.names = Some(names);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.adjacency.iter().map(|a| a.len() as u64).collect()
    }

    /// Sorted neighbour indices of `v`.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count()
            && v < self.vertex_count()
            && self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn label(&self, v: usize) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Index of the vertex carrying `label`, if any.
    pub fn index_of(&self, label: u64) -> Option<usize> {
        match self.labels.binary_search(&label) {
            Ok(i) => Some(i),
            // labels are not required to be sorted
            Err(_) => self.labels.iter().position(|&l| l == label),
        }
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .map(|&v| v as usize)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                let v = v as usize;
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    stack.push(v);
                }
            }
        }
        reached == self.vertex_count()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                index: v,
                vertex_count: self.vertex_count(),
            })
        }
    }
}

/// Compact summary used in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
}

impl From<&Graph> for GraphSummary {
    fn from(g: &Graph) -> Self {
        GraphSummary {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_edge_list_gives_empty_graph() {
        let g = Graph::from_edges([]).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn triangle_from_labels() {
        let g = Graph::from_edges([(1, 2), (2, 3), (1, 3)]).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.labels(), &[1, 2, 3]);
    }

    #[test]
    fn duplicate_pairs_collapse() {
        let g = Graph::from_edges([(1, 2), (2, 1), (1, 2)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 0));
    }

    #[test]
    fn self_loop_is_rejected_with_label() {
        let err = Graph::from_edges([(1, 2), (7, 7)]).unwrap_err();
        assert_eq!(err, Error::SelfLoop { label: 7 });
        assert!(err.to_string().contains("(7, 7)"));
    }

    #[test]
    fn sparse_labels_are_compacted() {
        let g = Graph::from_edges([(10, 40), (40, 25)]).unwrap();
        assert_eq!(g.labels(), &[10, 25, 40]);
        assert_eq!(g.index_of(40), Some(2));
        assert!(g.has_edge(0, 2));
        assert!(g.has_edge(1, 2));
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn adjacency_is_symmetric_and_sorted() {
        let g = Graph::from_index_edges(5, [(4, 0), (2, 0), (0, 3), (3, 4)]).unwrap();
        assert_eq!(g.neighbors(0), &[2, 3, 4]);
        for (u, v) in g.edges() {
            assert!(g.has_edge(v, u));
        }
        assert_eq!(g.edges().count(), g.edge_count());
    }
}
