//! Graphical embodiment of a Pythagorean triple: the smallest graph with a
//! triangle whose endpoint degrees are exactly `(a, b, c)`.
//!
//! Construction, in vertex-index order:
//!
//! * `0, 1, 2`: the hub triangle `v1 v2 v3`;
//! * `a − 2` vertices joined to all of `v1, v2, v3` (degree 3);
//! * `b − a` vertices joined to `v2, v3` (degree 2);
//! * `c − b` pendant vertices on `v3` (degree 1).
//!
//! So `deg v1 = a`, `deg v2 = b`, `deg v3 = c`, the order is `c + 1`, the size
//! is `3 + 3(a−2) + 2(b−a) + (c−b) = a + b + c − 3` and the triangle count is
//! `1 + 3(a−2) + (b−a) = 2a + b − 5`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    chromatic_number, domination_number, hole_report, independence_number, vertex_cover_number,
    Graph, GraphSummary,
};
use crate::Triple;

/// Builds the embodiment graph. Labels are `1..=c+1` in construction order.
pub fn build_embodiment(t: &Triple) -> Result<Graph> {
    // re-check: the fields are public
    let t = Triple::new(t.a, t.b, t.c)?;
    // smallest leg of any Pythagorean triple is 3
    assert!(t.a >= 3);
    Ok(embodiment_graph(t.a as usize, t.b as usize, t.c as usize))
}

fn embodiment_graph(a: usize, b: usize, c: usize) -> Graph {
    let (v1, v2, v3) = (0, 1, 2);
    let mut edges = vec![(v1, v2), (v1, v3), (v2, v3)];
    let mut next = 3;
    for _ in 0..a - 2 {
        edges.extend([(v1, next), (v2, next), (v3, next)]);
        next += 1;
    }
    for _ in 0..b - a {
        edges.extend([(v2, next), (v3, next)]);
        next += 1;
    }
    for _ in 0..c - b {
        edges.push((v3, next));
        next += 1;
    }
    Graph::from_index_edges(next, edges).expect("construction is simple")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Match,
    Mismatch,
    Skipped,
}

/// One predicted-versus-computed invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub predicted: u64,
    pub computed: Option<u64>,
    pub status: CheckStatus,
}

impl InvariantCheck {
    fn new(name: &'static str, predicted: u64, computed: Option<u64>) -> Self {
        let status = match computed {
            None => CheckStatus::Skipped,
            Some(c) if c == predicted => CheckStatus::Match,
            Some(_) => CheckStatus::Mismatch,
        };
        InvariantCheck {
            name,
            predicted,
            computed,
            status,
        }
    }
}

/// Closed-form values for the embodiment of `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub order: u64,
    pub size: u64,
    pub h: u64,
    pub h_p: u64,
    pub chromatic: u64,
    pub independence: u64,
    pub cover: u64,
    pub domination: u64,
}

impl Prediction {
    pub fn for_triple(t: &Triple) -> Self {
        let (a, b, c) = (t.a, t.b, t.c);
        Prediction {
            order: c + 1,
            size: a + b + c - 3,
            h: 2 * a + b - 5,
            h_p: if t.sides() == [3, 4, 5] { 2 } else { 1 },
            chromatic: 4,
            independence: c - 2,
            cover: 3,
            domination: 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EmbodimentReport {
    pub triple: Triple,
    #[serde(skip)]
    pub graph: Graph,
    pub summary: GraphSummary,
    pub checks: Vec<InvariantCheck>,
}

impl EmbodimentReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Match)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &InvariantCheck> {
        self.checks
            .iter()
            .filter(|c| c.status == CheckStatus::Mismatch)
    }

    pub fn check(&self, name: &str) -> Option<&InvariantCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Builds the embodiment and compares every closed form with graph
/// computation. Exact invariants beyond the solver cap are marked skipped.
pub fn verify_embodiment(t: &Triple) -> Result<EmbodimentReport> {
    let graph = build_embodiment(t)?;
    let p = Prediction::for_triple(t);
    let report = hole_report(&graph);
    let exact = |f: fn(&Graph) -> Result<usize>| -> Result<Option<u64>> {
        match f(&graph) {
            Ok(v) => Ok(Some(v as u64)),
            Err(Error::TooLarge { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    };
    let checks = vec![
        InvariantCheck::new("order", p.order, Some(graph.vertex_count() as u64)),
        InvariantCheck::new("size", p.size, Some(graph.edge_count() as u64)),
        InvariantCheck::new("h", p.h, Some(report.h)),
        InvariantCheck::new("h_p", p.h_p, Some(report.h_p)),
        InvariantCheck::new("chromatic", p.chromatic, exact(chromatic_number)?),
        InvariantCheck::new("independence", p.independence, exact(independence_number)?),
        InvariantCheck::new("cover", p.cover, exact(vertex_cover_number)?),
        InvariantCheck::new("domination", p.domination, exact(domination_number)?),
    ];
    Ok(EmbodimentReport {
        triple: *t,
        summary: GraphSummary::from(&graph),
        graph,
        checks,
    })
}

/// Largest order the exhaustive minimality search accepts.
pub const MINIMALITY_SEARCH_MAX_ORDER: usize = 7;

/// Exhaustive search over all labelled graphs with at most `max_order`
/// vertices for a triangle whose sorted endpoint degrees equal `target`.
///
/// Returns the smallest order that admits one together with the fewest edges
/// needed at that order, or `None` if no graph within the bound qualifies.
pub fn minimal_realization(target: [u64; 3], max_order: usize) -> Result<Option<(usize, usize)>> {
    if max_order > MINIMALITY_SEARCH_MAX_ORDER {
        return Err(Error::OutOfRange {
            what: "max_order",
            value: max_order as u64,
            min: 3,
            max: MINIMALITY_SEARCH_MAX_ORDER as u64,
        });
    }
    let mut target = target;
    target.sort_unstable();
    for n in 3..=max_order {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let mut best: Option<usize> = None;
        for mask in 0u32..(1 << pairs.len()) {
            let edges = mask.count_ones() as usize;
            if best.is_some_and(|b| edges >= b) {
                continue;
            }
            let mut adj = [0u8; MINIMALITY_SEARCH_MAX_ORDER];
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    adj[u] |= 1 << v;
                    adj[v] |= 1 << u;
                }
            }
            let deg = adj.map(|s| u64::from(s.count_ones()));
            let found = (0..n).any(|x| {
                (x + 1..n).any(|y| {
                    adj[x] >> y & 1 == 1
                        && (y + 1..n).any(|z| {
                            adj[x] >> z & 1 == 1 && adj[y] >> z & 1 == 1 && {
                                let mut d = [deg[x], deg[y], deg[z]];
                                d.sort_unstable();
                                d == target
                            }
                        })
                })
            });
            if found {
                best = Some(edges);
            }
        }
        if let Some(size) = best {
            return Ok(Some((n, size)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_triangles, primitive_degree};

    fn triple(a: u64, b: u64, c: u64) -> Triple {
        Triple::new(a, b, c).unwrap()
    }

    #[test]
    fn three_four_five() {
        let g = build_embodiment(&triple(3, 4, 5)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
        assert_eq!(g.degrees(), vec![3, 4, 5, 3, 2, 1]);
        assert_eq!(enumerate_triangles(&g).len(), 5);
        // v1 v2 v4 misses v3
        assert_eq!(primitive_degree(&g, 2).unwrap(), 4);
    }

    #[test]
    fn five_twelve_thirteen_size() {
        let g = build_embodiment(&triple(5, 12, 13)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (14, 27));
    }

    #[test]
    fn six_eight_ten_counts() {
        let g = build_embodiment(&triple(6, 8, 10)).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (11, 21));
        assert_eq!(enumerate_triangles(&g).len(), 15);
    }

    #[test]
    fn verify_reports() {
        let r = verify_embodiment(&triple(3, 4, 5)).unwrap();
        assert!(r.all_match(), "{:?}", r.checks);
        assert_eq!(r.check("h_p").unwrap().computed, Some(2));

        let r = verify_embodiment(&triple(20, 21, 29)).unwrap();
        assert!(r.all_match());
        assert_eq!(r.check("h").unwrap().computed, Some(56));
        assert_eq!(r.check("h_p").unwrap().computed, Some(1));
        assert_eq!(r.check("domination").unwrap().computed, Some(1));

        let r = verify_embodiment(&triple(9, 40, 41)).unwrap();
        assert_eq!(r.check("independence").unwrap().computed, Some(39));
        assert_eq!(r.check("chromatic").unwrap().computed, Some(4));
    }

    #[test]
    fn exact_invariants_skip_beyond_cap() {
        // c + 1 = 131 > cap
        let r = verify_embodiment(&triple(50, 120, 130)).unwrap();
        assert_eq!(r.check("chromatic").unwrap().status, CheckStatus::Skipped);
        assert_eq!(r.check("order").unwrap().status, CheckStatus::Match);
        assert!(!r.all_match());
        assert_eq!(r.mismatches().count(), 0);
    }

    #[test]
    fn rejects_non_pythagorean() {
        let bogus = Triple {
            a: 2,
            b: 3,
            c: 4,
            primitive: true,
            root: [2, 3, 4],
            scale: 1,
        };
        assert!(matches!(
            build_embodiment(&bogus),
            Err(Error::NotPythagorean { .. })
        ));
    }

    #[test]
    fn three_four_five_is_minimal() {
        // nothing on five or fewer vertices; six vertices need nine edges
        assert_eq!(minimal_realization([3, 4, 5], 5).unwrap(), None);
        assert_eq!(minimal_realization([5, 3, 4], 6).unwrap(), Some((6, 9)));
        assert!(minimal_realization([3, 4, 5], 8).is_err());
    }
}
