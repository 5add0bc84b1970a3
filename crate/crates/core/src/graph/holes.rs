//! Hole censuses: triangles filtered by a predicate on endpoint degrees.

use serde::Serialize;

use super::triangles::{collect_triangles, primitive_degrees};
use super::{Graph, Triangle};

/// Endpoint degrees of a triangle.
pub type DegreeTriple = [u64; 3];

/// How the degree triple handed to a predicate is ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegreeOrder {
    /// Ascending degrees. Vertex labelling plays no role.
    #[default]
    Sorted,
    /// Degrees listed in ascending vertex-index order. Used where the vertex
    /// order carries meaning, as in Jaco graphs.
    VertexOrder,
}

/// A triangle together with the degree triple the predicate accepted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Hole {
    pub triangle: Triangle,
    pub degrees: DegreeTriple,
}

/// Per-graph census of primitive and Pythagorean holes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HoleReport {
    pub h: u64,
    pub h_p: u64,
    pub pyth_holes: Vec<Hole>,
    pub primitive_degree: Vec<u64>,
}

/// `a < b < c` and `a² + b² = c²`, in the order given.
///
/// On a sorted triple the strictness adds nothing: `a = b` would need
/// `2a² = c²`, which has no positive integer solution.
pub fn is_pythagorean_degrees(d: DegreeTriple) -> bool {
    let [a, b, c] = d.map(u128::from);
    a > 0 && a < b && b < c && a * a + b * b == c * c
}

/// Triangles whose sorted degree triple satisfies `predicate`.
pub fn holes_matching<P>(g: &Graph, predicate: P) -> Vec<Hole>
where
    P: Fn(DegreeTriple) -> bool + Sync,
{
    holes_matching_with(g, DegreeOrder::Sorted, predicate)
}

/// Triangles whose degree triple, ordered per `order`, satisfies `predicate`.
/// Output is sorted by triangle.
pub fn holes_matching_with<P>(g: &Graph, order: DegreeOrder, predicate: P) -> Vec<Hole>
where
    P: Fn(DegreeTriple) -> bool + Sync,
{
    let degrees = g.degrees();
    collect_triangles(g, |t| {
        let mut d = t.map(|v| degrees[v]);
        debug_assert!(d.iter().all(|&x| x >= 2));
        if order == DegreeOrder::Sorted {
            d.sort_unstable();
        }
        predicate(d).then_some(Hole {
            triangle: Triangle(t),
            degrees: d,
        })
    })
}

pub fn hole_report(g: &Graph) -> HoleReport {
    let primitive_degree = primitive_degrees(g);
    let h = primitive_degree.iter().sum::<u64>() / 3;
    let pyth_holes = holes_matching(g, is_pythagorean_degrees);
    HoleReport {
        h,
        h_p: pyth_holes.len() as u64,
        pyth_holes,
        primitive_degree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_index_edges(n, edges).unwrap()
    }

    #[test]
    fn pythagorean_predicate() {
        assert!(is_pythagorean_degrees([3, 4, 5]));
        assert!(is_pythagorean_degrees([6, 8, 10]));
        assert!(!is_pythagorean_degrees([4, 3, 5]));
        assert!(!is_pythagorean_degrees([2, 2, 2]));
        assert!(!is_pythagorean_degrees([0, 5, 5]));
    }

    #[test]
    fn k3_has_no_pythagorean_hole() {
        assert!(holes_matching(&complete(3), is_pythagorean_degrees).is_empty());
    }

    #[test]
    fn five_cycle_report() {
        let g = Graph::from_index_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let r = hole_report(&g);
        assert_eq!((r.h, r.h_p), (0, 0));
        assert_eq!(r.primitive_degree, vec![0; 5]);
    }

    #[test]
    fn k6_report() {
        let r = hole_report(&complete(6));
        assert_eq!((r.h, r.h_p), (20, 0));
        assert!(r.primitive_degree.iter().all(|&d| d == 10));
    }

    #[test]
    fn vertex_order_keeps_index_order() {
        // triangle 0-1-2 with degrees 5, 4, 3 in index order
        let g = Graph::from_index_edges(
            9,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 6),
                (1, 7),
            ],
        )
        .unwrap();
        assert_eq!(g.degrees()[..3], [5, 4, 2]);
        let g = Graph::from_index_edges(
            9,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 6),
                (1, 7),
                (2, 8),
            ],
        )
        .unwrap();
        let sorted = holes_matching_with(&g, DegreeOrder::Sorted, is_pythagorean_degrees);
        assert_eq!(sorted.len(), 1);
        assert_eq!(sorted[0].degrees, [3, 4, 5]);
        let ordered = holes_matching_with(&g, DegreeOrder::VertexOrder, is_pythagorean_degrees);
        assert!(ordered.is_empty());
        let reversed = holes_matching_with(&g, DegreeOrder::VertexOrder, |d| d == [5, 4, 3]);
        assert_eq!(reversed.len(), 1);
    }

    #[test]
    fn generic_predicate() {
        let g = complete(4);
        let holes = holes_matching(&g, |d| d.iter().all(|&x| x == 3));
        assert_eq!(holes.len(), 4);
    }
}
