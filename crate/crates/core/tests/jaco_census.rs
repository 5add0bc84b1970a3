use pythole::graph::{holes_matching_with, is_pythagorean_degrees, primitive_hole_number};
use pythole::jaco::{
    build_jaco, pythagorean_census, pythagorean_census_with, scaled_hole_outcome, t1_count,
    underlying_graph, JacoDegrees,
};
use pythole::{DegreeOrder, TripleType};

/// Degrees straight from the definition: replay every arc.
fn naive_degrees(limit: usize) -> (Vec<u64>, Vec<u64>) {
    let mut d_minus = vec![0u64; limit + 1];
    let mut d_plus = vec![0u64; limit + 1];
    for i in 1..=limit {
        d_plus[i] = i as u64 - d_minus[i];
        for j in i + 1..=(i + d_plus[i] as usize).min(limit) {
            d_minus[j] += 1;
        }
    }
    (d_minus, d_plus)
}

#[test]
fn degrees_match_definition() {
    let (dm, dp) = naive_degrees(2000);
    let fast = JacoDegrees::up_to(2000);
    for i in 1..=2000 {
        assert_eq!((fast.d_minus(i), fast.d_plus(i)), (dm[i], dp[i]), "v{i}");
    }
}

#[test]
fn structured_census_matches_generic_holes() {
    for n in 1..=150 {
        let g = underlying_graph(&build_jaco(n).unwrap());
        for order in [DegreeOrder::VertexOrder, DegreeOrder::Sorted] {
            let generic: Vec<[usize; 3]> = holes_matching_with(&g, order, is_pythagorean_degrees)
                .iter()
                .map(|h| h.triangle.0.map(|v| v + 1))
                .collect();
            let fast: Vec<[usize; 3]> = pythagorean_census_with(n, order)
                .unwrap()
                .iter()
                .map(|e| e.vertices)
                .collect();
            assert_eq!(fast, generic, "n={n} {order:?}");
        }
    }
}

#[test]
fn triangle_count_closed_sum() {
    // i < j < k is a triangle iff k <= i + d+(v_i)
    for n in 1..=120 {
        let j = build_jaco(n).unwrap();
        let sum: u64 = (1..=n)
            .map(|i| {
                let m = (j.degrees().reach(i).min(n) - i) as u64;
                m * m.saturating_sub(1) / 2
            })
            .sum();
        assert_eq!(primitive_hole_number(&underlying_graph(&j)), sum, "n={n}");
    }
}

#[test]
fn first_types_beyond_t1() {
    // (20,21,29) shows up first at 47
    let first_other = (1..=120)
        .find(|&n| {
            pythagorean_census(n)
                .unwrap()
                .iter()
                .any(|e| e.triple_type != TripleType::T(1))
        })
        .unwrap();
    assert_eq!(first_other, 47);
    let c = pythagorean_census(47).unwrap();
    let e = c
        .iter()
        .find(|e| e.triple_type == TripleType::T(2))
        .unwrap();
    assert_eq!(e.degrees, [20, 21, 29]);
}

#[test]
fn t1_count_plateaus_at_four() {
    let counts: Vec<u64> = [39, 40, 100, 300]
        .iter()
        .map(|&n| t1_count(&pythagorean_census(n).unwrap()))
        .collect();
    assert_eq!(counts, vec![4, 4, 4, 4]);
}

#[test]
fn scaling_rule_on_all_small_triangles() {
    for n in [8usize, 20, 35] {
        let g = underlying_graph(&build_jaco(n).unwrap());
        for t in pythole::graph::enumerate_triangles(&g) {
            let t = t.0.map(|v| v + 1);
            for l in 1..=6 {
                let o = scaled_hole_outcome(n, l, t).unwrap();
                assert!(o.holds(), "n={n} l={l} t={t:?}");
            }
        }
    }
}
