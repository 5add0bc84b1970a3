//! Set-graphs: the intersection graph of the non-empty subsets of an
//! `n`-element set.
//!
//! A vertex is the bitmask `1..2ⁿ` of its subset, and two distinct subsets are
//! adjacent when their masks share a bit. Materialised graphs use vertex index
//! `mask − 1` and carry the mask as label.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{holes_matching, is_pythagorean_degrees, maximum_cliques, Graph};

/// Largest ground-set size for the implicit (non-materialised) checks.
pub const MAX_N: u32 = 16;
/// Largest ground-set size that is materialised as a [`Graph`].
pub const MAX_BUILD_N: u32 = 12;
/// Largest ground-set size for the full triangle census.
pub const MAX_CENSUS_N: u32 = 8;
/// Largest ground-set size for the clique census.
pub const MAX_CLIQUE_N: u32 = 5;

fn check_n(n: u32, max: u32) -> Result<()> {
    if (2..=max).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "set-graph ground set size n",
            value: n.into(),
            min: 2,
            max: max.into(),
        })
    }
}

/// The set-graph over `{a1, …, an}` without materialised adjacency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SetGraphSpec {
    n: u32,
}

impl SetGraphSpec {
    pub fn new(n: u32) -> Result<Self> {
        check_n(n, MAX_N)?;
        Ok(SetGraphSpec { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        (1usize << self.n) - 1
    }

    pub fn masks(&self) -> impl Iterator<Item = u32> {
        1..(1u32 << self.n)
    }

    pub fn is_adjacent(&self, u: u32, v: u32) -> bool {
        u != v && u & v != 0
    }

    /// Degree of every mask (index 0 unused), counted as the number of
    /// non-empty subsets meeting it. Disjoint subsets of `S` are counted by a
    /// sum-over-subsets pass over the complement, `O(n·2ⁿ)`.
    pub fn degrees(&self) -> Vec<u64> {
        let size = 1usize << self.n;
        let full = size - 1;
        // subsets[x] = number of non-empty masks contained in x
        let mut subsets: Vec<u64> = (0..size).map(|m| u64::from(m != 0)).collect();
        for bit in 0..self.n {
            for x in 0..size {
                if x >> bit & 1 == 1 {
                    subsets[x] += subsets[x ^ (1 << bit)];
                }
            }
        }
        let nonempty = full as u64;
        (0..size)
            .map(|m| {
                if m == 0 {
                    0
                } else {
                    // everything except itself and the subsets disjoint from it
                    nonempty - 1 - subsets[full & !m]
                }
            })
            .collect()
    }

    /// `{a1,a3}` style name of a mask.
    pub fn subset_name(mask: u32) -> String {
        let items: Vec<String> = (0..32)
            .filter(|b| mask >> b & 1 == 1)
            .map(|b| format!("a{}", b + 1))
            .collect();
        format!("{{{}}}", items.join(","))
    }
}

pub fn build_setgraph(n: u32) -> Result<Graph> {
    check_n(n, MAX_BUILD_N)?;
    let spec = SetGraphSpec { n };
    let count = spec.vertex_count();
    let edges = spec.masks().flat_map(|u| {
        ((u + 1)..(1u32 << n))
            .filter(move |&v| u & v != 0)
            .map(move |v| (u as usize - 1, v as usize - 1))
    });
    let graph = Graph::from_index_edges(count, edges)?;
    Ok(graph
        .with_labels(spec.masks().map(u64::from).collect())
        .with_names(spec.masks().map(SetGraphSpec::subset_name).collect()))
}

/// Outcome of the minimum/maximum degree check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeLaw {
    pub n: u32,
    pub min_degree: u64,
    pub max_degree: u64,
    pub max_degree_vertices: usize,
    pub singletons_independent: bool,
    pub equal_cardinality_equal_degree: bool,
}

impl DegreeLaw {
    /// `Δ = 2δ`, a single vertex of maximum degree, and pairwise
    /// non-adjacent singletons.
    pub fn holds(&self) -> bool {
        self.max_degree == 2 * self.min_degree
            && self.max_degree_vertices == 1
            && self.singletons_independent
    }
}

pub fn check_degree_law(n: u32) -> Result<DegreeLaw> {
    let spec = SetGraphSpec::new(n)?;
    let degrees = spec.degrees();
    let observed = &degrees[1..];
    let min_degree = *observed.iter().min().expect("n >= 2");
    let max_degree = *observed.iter().max().expect("n >= 2");
    let max_degree_vertices = observed.iter().filter(|&&d| d == max_degree).count();
    let singletons: Vec<u32> = (0..n).map(|b| 1 << b).collect();
    let singletons_independent = singletons
        .iter()
        .all(|&u| singletons.iter().all(|&v| !spec.is_adjacent(u, v)));
    let mut by_size: Vec<Option<u64>> = vec![None; n as usize + 1];
    let mut equal_cardinality_equal_degree = true;
    for m in spec.masks() {
        let slot = &mut by_size[m.count_ones() as usize];
        match slot {
            None => *slot = Some(degrees[m as usize]),
            Some(d) if *d != degrees[m as usize] => equal_cardinality_equal_degree = false,
            Some(_) => {}
        }
    }
    Ok(DegreeLaw {
        n,
        min_degree,
        max_degree,
        max_degree_vertices,
        singletons_independent,
        equal_cardinality_equal_degree,
    })
}

/// The degree-sequence triangle inequality `d_i + d_j > d_k`, read two ways.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleInequality {
    pub n: u32,
    /// Holds over all distinct degree values `x < y < z`.
    pub distinct_values_hold: bool,
    /// Holds over all position triples of the sequence, repeats allowed.
    pub sequence_holds: bool,
    /// Value triples `x ≤ y ≤ z` realisable in the sequence with `x + y = z`.
    pub boundary_cases: Vec<[u64; 3]>,
    /// Value triples realisable in the sequence with `x + y < z`.
    pub violations: Vec<[u64; 3]>,
}

impl TriangleInequality {
    pub fn holds(&self) -> bool {
        self.distinct_values_hold
    }
}

pub fn check_triangle_inequality_lemma(n: u32) -> Result<TriangleInequality> {
    let spec = SetGraphSpec::new(n)?;
    let mut sequence: Vec<u64> = spec.degrees()[1..].to_vec();
    sequence.sort_unstable();

    // value -> multiplicity
    let mut values: Vec<(u64, usize)> = Vec::new();
    for &d in &sequence {
        match values.last_mut() {
            Some((v, k)) if *v == d => *k += 1,
            _ => values.push((d, 1)),
        }
    }

    let mut distinct_values_hold = true;
    let mut boundary_cases = Vec::new();
    let mut violations = Vec::new();
    for i in 0..values.len() {
        for j in i..values.len() {
            for k in j..values.len() {
                let need = |idx: usize| [i, j, k].iter().filter(|&&x| x == idx).count();
                if [i, j, k].iter().any(|&x| need(x) > values[x].1) {
                    continue;
                }
                let (x, y, z) = (values[i].0, values[j].0, values[k].0);
                if x + y == z {
                    boundary_cases.push([x, y, z]);
                } else if x + y < z {
                    violations.push([x, y, z]);
                }
                if i < j && j < k && x + y <= z {
                    distinct_values_hold = false;
                }
            }
        }
    }
    // the extreme triple decides the sequence reading
    let r = sequence.len();
    let sequence_holds = r < 3 || sequence[0] + sequence[1] > sequence[r - 1];
    debug_assert_eq!(
        sequence_holds,
        boundary_cases.is_empty() && violations.is_empty()
    );
    Ok(TriangleInequality {
        n,
        distinct_values_hold,
        sequence_holds,
        boundary_cases,
        violations,
    })
}

/// Number of Pythagorean holes found by a full triangle census.
pub fn pythagorean_hole_count(n: u32) -> Result<u64> {
    check_n(n, MAX_CENSUS_N)?;
    let g = build_setgraph(n)?;
    Ok(holes_matching(&g, is_pythagorean_degrees).len() as u64)
}

pub fn check_no_pythagorean_holes(n: u32) -> Result<bool> {
    Ok(pythagorean_hole_count(n)? == 0)
}

/// Largest-clique census against the closed form `(2ⁿ⁻¹, 2n − 2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCensus {
    pub n: u32,
    pub size: usize,
    pub count: u64,
    pub predicted_size: usize,
    pub predicted_count: u64,
}

impl CliqueCensus {
    pub fn matches_prediction(&self) -> bool {
        self.size == self.predicted_size && self.count == self.predicted_count
    }
}

pub fn count_largest_cliques(n: u32) -> Result<CliqueCensus> {
    check_n(n, MAX_CLIQUE_N)?;
    let (size, count) = maximum_cliques(&build_setgraph(n)?)?;
    Ok(CliqueCensus {
        n,
        size,
        count,
        predicted_size: 1 << (n - 1),
        predicted_count: 2 * u64::from(n) - 2,
    })
}
