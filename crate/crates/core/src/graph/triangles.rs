//! Triangle (primitive hole) enumeration.
//!
//! Compact-forward: vertices are ranked by `(degree, index)`, each vertex keeps
//! only neighbours of higher rank, and every triangle is found exactly once as
//! the intersection of two forward lists. Arithmetic is `O(m^{3/2})`.

use rayon::prelude::*;
use serde::Serialize;

use super::Graph;
use crate::error::Result;

/// A 3-cycle given by strictly increasing vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Triangle(pub [usize; 3]);

impl Triangle {
    /// Sorts the three vertices. Panics on repeated vertices.
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        assert!(
            v[0] < v[1] && v[1] < v[2],
            "triangle vertices must be distinct"
        );
        Triangle(v)
    }

    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }
}

/// Forward adjacency in rank space.
struct Forward {
    vertex_of_rank: Vec<u32>,
    out: Vec<Vec<u32>>,
}

impl Forward {
    fn new(g: &Graph) -> Self {
        let n = g.vertex_count();
        let mut vertex_of_rank: Vec<u32> = (0..n as u32).collect();
        vertex_of_rank.sort_unstable_by_key(|&v| (g.degree(v as usize), v));
        let mut rank = vec![0u32; n];
        for (r, &v) in vertex_of_rank.iter().enumerate() {
            rank[v as usize] = r as u32;
        }
        let out = vertex_of_rank
            .iter()
            .enumerate()
            .map(|(r, &v)| {
                let mut fwd: Vec<u32> = g
                    .neighbors(v as usize)
                    .iter()
                    .map(|&w| rank[w as usize])
                    .filter(|&s| s as usize > r)
                    .collect();
                fwd.sort_unstable();
                fwd
            })
            .collect();
        Forward {
            vertex_of_rank,
            out,
        }
    }

    /// Calls `f` for every triangle whose lowest-ranked vertex has rank `r`.
    #[inline]
    fn visit_rank(&self, r: usize, mut f: impl FnMut([usize; 3])) {
        let fr = &self.out[r];
        for (pos, &s) in fr.iter().enumerate() {
            let fs = &self.out[s as usize];
            // every element of fs exceeds s, so only the tail of fr can match
            let tail = &fr[pos + 1..];
            let (mut i, mut j) = (0, 0);
            while i < tail.len() && j < fs.len() {
                match tail[i].cmp(&fs[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let mut t = [
                            self.vertex_of_rank[r] as usize,
                            self.vertex_of_rank[s as usize] as usize,
                            self.vertex_of_rank[tail[i] as usize] as usize,
                        ];
                        t.sort_unstable();
                        f(t);
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }

    fn len(&self) -> usize {
        self.out.len()
    }
}

/// Visits every triangle once, as a sorted index triple, in unspecified order.
pub fn for_each_triangle(g: &Graph, mut f: impl FnMut([usize; 3])) {
    let fwd = Forward::new(g);
    for r in 0..fwd.len() {
        fwd.visit_rank(r, &mut f);
    }
}

/// Parallel filter-map over all triangles; the result is sorted.
pub(crate) fn collect_triangles<T, F>(g: &Graph, f: F) -> Vec<T>
where
    T: Send + Ord,
    F: Fn([usize; 3]) -> Option<T> + Sync,
{
    let fwd = Forward::new(g);
    let mut out: Vec<T> = (0..fwd.len())
        .into_par_iter()
        .fold(Vec::new, |mut acc, r| {
            fwd.visit_rank(r, |t| {
                if let Some(x) = f(t) {
                    acc.push(x);
                }
            });
            acc
        })
        .reduce(Vec::new, |mut a, mut b| {
            a.append(&mut b);
            a
        });
    out.par_sort_unstable();
    out
}

/// All triangles, each once, in lexicographic order of their index triples.
pub fn enumerate_triangles(g: &Graph) -> Vec<Triangle> {
    collect_triangles(g, |t| Some(Triangle(t)))
}

/// Number of triangles, `h(G)`.
pub fn primitive_hole_number(g: &Graph) -> u64 {
    let fwd = Forward::new(g);
    (0..fwd.len())
        .into_par_iter()
        .map(|r| {
            let mut count = 0u64;
            fwd.visit_rank(r, |_| count += 1);
            count
        })
        .sum()
}

/// Number of triangles through each vertex.
pub fn primitive_degrees(g: &Graph) -> Vec<u64> {
    let mut counts = vec![0u64; g.vertex_count()];
    for_each_triangle(g, |t| {
        for v in t {
            counts[v] += 1;
        }
    });
    counts
}

pub fn primitive_degree(g: &Graph, v: usize) -> Result<u64> {
    g.check_vertex(v)?;
    let mut count = 0u64;
    let neighbors = g.neighbors(v);
    // triangles through v are edges inside N(v)
    for (i, &a) in neighbors.iter().enumerate() {
        let na = g.neighbors(a as usize);
        for &b in &neighbors[i + 1..] {
            if na.binary_search(&b).is_ok() {
                count += 1;
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_index_edges(n, edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_index_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn k4_has_four_triangles_in_order() {
        let t = enumerate_triangles(&complete(4));
        let expected: Vec<Triangle> = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]
            .into_iter()
            .map(Triangle)
            .collect();
        assert_eq!(t, expected);
    }

    #[test]
    fn five_cycle_is_triangle_free() {
        assert!(enumerate_triangles(&cycle(5)).is_empty());
    }

    #[test]
    fn k5_hole_number() {
        assert_eq!(primitive_hole_number(&complete(5)), 10);
    }

    #[test]
    fn primitive_degree_in_k4_and_pendant() {
        let g = complete(4);
        for v in 0..4 {
            assert_eq!(primitive_degree(&g, v).unwrap(), 3);
        }
        let g = Graph::from_index_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        assert_eq!(primitive_degree(&g, 3).unwrap(), 0);
        assert_eq!(primitive_degrees(&g), vec![1, 1, 1, 0]);
    }

    #[test]
    fn primitive_degree_out_of_range() {
        let g = complete(3);
        assert_eq!(
            primitive_degree(&g, 3),
            Err(Error::VertexOutOfRange {
                index: 3,
                vertex_count: 3
            })
        );
    }
}
