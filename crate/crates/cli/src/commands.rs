use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::Serialize;

use pythole::embodiment::{build_embodiment, verify_embodiment, CheckStatus, Prediction};
use pythole::graph::{hole_report, parse_edge_list, to_edge_list_string};
use pythole::jaco::{
    self, audit_fisher_table, build_jaco, fisher_table, pythagorean_census, type_count_prediction,
    type_counts, underlying_graph, CensusEntry, Discrepancy, JacoRow, REFERENCE_FISHER_TABLE,
};
use pythole::setgraph::{
    self, build_setgraph, check_degree_law, check_triangle_inequality_lemma, count_largest_cliques,
    pythagorean_hole_count, SetGraphSpec, TriangleInequality,
};
use pythole::triples::{primitive_triples_up_to, triples_up_to, LABELLED_TYPES};
use pythole::{Triple, TripleType, TypeIndex};

use crate::render::{
    all_pass, checks_table, json, key_values, sections, Check, Format, Status, Table,
};

/// Largest Jaco order whose underlying graph is written out.
pub const JACO_EMIT_MAX_N: usize = 5000;

/// What a command produced. `ok` is false when a verified claim failed.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: Vec<String>,
    pub ok: bool,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: Vec::new(),
            ok: true,
        }
    }

    fn checked(stdout: String, checks: &[Check]) -> Self {
        let stderr = checks
            .iter()
            .filter(|c| c.status == Status::Fail)
            .map(|c| {
                format!(
                    "claim failed: {} (predicted {}, computed {})",
                    c.claim, c.predicted, c.computed
                )
            })
            .collect();
        Outcome {
            stdout,
            stderr,
            ok: all_pass(checks),
        }
    }
}

/// Input errors, reported with exit code 2.
pub type CmdResult = Result<Outcome, String>;

fn input<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

#[derive(Serialize)]
struct HoleOut {
    vertices: [u64; 3],
    degrees: [u64; 3],
}

#[derive(Serialize)]
struct VertexOut {
    vertex: u64,
    degree: u64,
    primitive_degree: u64,
}

#[derive(Serialize)]
struct HolesOut {
    vertices: usize,
    edges: usize,
    h: u64,
    h_p: u64,
    pythagorean_holes: Vec<HoleOut>,
    primitive_degrees: Vec<VertexOut>,
}

pub fn holes(path: &Path, format: Format) -> CmdResult {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let g = parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let r = hole_report(&g);
    let degrees = g.degrees();
    let out = HolesOut {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        h: r.h,
        h_p: r.h_p,
        pythagorean_holes: r
            .pyth_holes
            .iter()
            .map(|hole| HoleOut {
                vertices: hole.triangle.0.map(|v| g.label(v)),
                degrees: hole.degrees,
            })
            .collect(),
        primitive_degrees: (0..g.vertex_count())
            .map(|v| VertexOut {
                vertex: g.label(v),
                degree: degrees[v],
                primitive_degree: r.primitive_degree[v],
            })
            .collect(),
    };
    if format == Format::Json {
        return Ok(Outcome::ok(json(&out)));
    }
    let summary = key_values(
        &[
            ("vertices", out.vertices.to_string()),
            ("edges", out.edges.to_string()),
            ("h", out.h.to_string()),
            ("h_p", out.h_p.to_string()),
        ],
        format,
    );
    let mut holes = Table::new(&["u", "v", "w", "deg_a", "deg_b", "deg_c"]);
    for hole in &out.pythagorean_holes {
        holes.push(
            hole.vertices
                .iter()
                .chain(&hole.degrees)
                .map(u64::to_string)
                .collect(),
        );
    }
    let mut vertices = Table::new(&["vertex", "degree", "primitive_degree"]);
    for v in &out.primitive_degrees {
        vertices.push(vec![
            v.vertex.to_string(),
            v.degree.to_string(),
            v.primitive_degree.to_string(),
        ]);
    }
    Ok(Outcome::ok(sections(&[
        summary,
        holes.render(format),
        vertices.render(format),
    ])))
}

fn claim_for(name: &str) -> &'static str {
    match name {
        "order" => "order = c + 1",
        "size" => "size = a + b + c - 3",
        "h" => "h = 2a + b - 5",
        "h_p" => "h_p = 1, or 2 for (3, 4, 5)",
        "chromatic" => "chromatic number = 4",
        "independence" => "independence number = c - 2",
        "cover" => "vertex cover number = 3",
        "domination" => "domination number = 1",
        _ => "unnamed invariant",
    }
}

#[derive(Serialize)]
struct EmbodimentOut<'a> {
    triple: &'a Triple,
    predicted: Prediction,
}

pub fn embodiment(
    a: u64,
    b: u64,
    c: u64,
    verify: bool,
    emit_graph: bool,
    format: Format,
) -> CmdResult {
    let t = Triple::new(a, b, c).map_err(input)?;
    let mut parts = Vec::new();
    let mut checks = Vec::new();
    if emit_graph {
        parts.push(to_edge_list_string(&build_embodiment(&t).map_err(input)?));
    }
    if verify {
        let report = verify_embodiment(&t).map_err(input)?;
        checks = report
            .checks
            .iter()
            .map(|k| Check {
                claim: claim_for(k.name).to_string(),
                predicted: k.predicted.to_string(),
                computed: k.computed.map_or("-".to_string(), |v| v.to_string()),
                status: match k.status {
                    CheckStatus::Match => Status::Pass,
                    CheckStatus::Mismatch => Status::Fail,
                    CheckStatus::Skipped => Status::Skipped,
                },
            })
            .collect();
        parts.push(match format {
            Format::Json => json(&report),
            _ => checks_table(&checks).render(format),
        });
    }
    if !verify && !emit_graph {
        let p = Prediction::for_triple(&t);
        parts.push(match format {
            Format::Json => json(&EmbodimentOut {
                triple: &t,
                predicted: p,
            }),
            _ => key_values(
                &[
                    ("triple", t.to_string()),
                    ("order", p.order.to_string()),
                    ("size", p.size.to_string()),
                    ("h", p.h.to_string()),
                    ("h_p", p.h_p.to_string()),
                    ("chromatic number", p.chromatic.to_string()),
                    ("independence number", p.independence.to_string()),
                    ("vertex cover number", p.cover.to_string()),
                    ("domination number", p.domination.to_string()),
                ],
                format,
            ),
        });
    }
    Ok(Outcome::checked(sections(&parts), &checks))
}

fn skipped(claim: impl Into<String>, predicted: impl ToString) -> Check {
    Check {
        claim: claim.into(),
        predicted: predicted.to_string(),
        computed: "-".to_string(),
        status: Status::Skipped,
    }
}

#[derive(Serialize)]
struct SetGraphVerifyOut<'a> {
    n: u32,
    checks: &'a [Check],
    triangle_inequality: TriangleInequality,
}

pub fn setgraph(n: u32, verify: bool, emit_graph: bool, format: Format) -> CmdResult {
    let spec = SetGraphSpec::new(n).map_err(input)?;
    let mut parts = Vec::new();
    let mut checks = Vec::new();
    if emit_graph {
        parts.push(to_edge_list_string(&build_setgraph(n).map_err(input)?));
    }
    if verify {
        let law = check_degree_law(n).map_err(input)?;
        checks.push(Check::new(
            "max degree = 2 * min degree",
            2 * law.min_degree,
            law.max_degree,
        ));
        checks.push(Check::new(
            "vertices of max degree",
            1,
            law.max_degree_vertices,
        ));
        checks.push(Check::flag(
            "singletons pairwise non-adjacent",
            law.singletons_independent,
        ));
        checks.push(Check::flag(
            "equal cardinality gives equal degree",
            law.equal_cardinality_equal_degree,
        ));
        let lemma = check_triangle_inequality_lemma(n).map_err(input)?;
        checks.push(Check::flag(
            "x + y > z for distinct degrees x < y < z",
            lemma.distinct_values_hold,
        ));
        if n <= setgraph::MAX_CENSUS_N {
            checks.push(Check::new(
                "no Pythagorean holes",
                0,
                pythagorean_hole_count(n).map_err(input)?,
            ));
        } else {
            checks.push(skipped("no Pythagorean holes", 0));
        }
        let clique_order = "largest clique order = 2^(n-1)";
        let clique_count = "largest cliques = 2n - 2";
        if n <= setgraph::MAX_CLIQUE_N {
            let census = count_largest_cliques(n).map_err(input)?;
            checks.push(Check::new(clique_order, census.predicted_size, census.size));
            checks.push(Check::new(
                clique_count,
                census.predicted_count,
                census.count,
            ));
        } else {
            checks.push(skipped(clique_order, 1u64 << (n - 1)));
            checks.push(skipped(clique_count, 2 * u64::from(n) - 2));
        }
        parts.push(match format {
            Format::Json => json(&SetGraphVerifyOut {
                n,
                checks: &checks,
                triangle_inequality: lemma,
            }),
            _ => {
                let cases = |v: &[[u64; 3]]| {
                    if v.is_empty() {
                        "none".to_string()
                    } else {
                        v.iter()
                            .map(|[x, y, z]| format!("{x}+{y}={z}"))
                            .collect::<Vec<_>>()
                            .join(" ")
                    }
                };
                sections(&[
                    checks_table(&checks).render(format),
                    key_values(
                        &[
                            (
                                "sequence triangle inequality",
                                lemma.sequence_holds.to_string(),
                            ),
                            ("boundary cases", cases(&lemma.boundary_cases)),
                        ],
                        format,
                    ),
                ])
            }
        });
    }
    if !verify && !emit_graph {
        let degrees = spec.degrees();
        let observed = &degrees[1..];
        let edges = observed.iter().sum::<u64>() / 2;
        let pairs = [
            ("n", n.to_string()),
            ("vertices", spec.vertex_count().to_string()),
            ("edges", edges.to_string()),
            (
                "min degree",
                observed.iter().min().expect("n >= 2").to_string(),
            ),
            (
                "max degree",
                observed.iter().max().expect("n >= 2").to_string(),
            ),
        ];
        parts.push(match format {
            Format::Json => {
                let map: BTreeMap<&str, u64> = pairs
                    .iter()
                    .map(|(k, v)| (*k, v.parse().expect("numeric")))
                    .collect();
                json(&map)
            }
            _ => key_values(&pairs, format),
        });
    }
    Ok(Outcome::checked(sections(&parts), &checks))
}

#[derive(Serialize)]
struct JacoVertexOut {
    i: usize,
    d_minus: u64,
    d_plus: u64,
    d_plus_truncated: u64,
    degree: u64,
}

#[derive(Serialize)]
struct CensusOut<'a> {
    n: usize,
    holes: &'a [CensusEntry],
    type_counts: BTreeMap<String, u64>,
    checks: &'a [Check],
}

fn type_checks(n: usize, census: &[CensusEntry]) -> Vec<Check> {
    let counts = type_counts(census);
    let mut checks = vec![Check::new(
        "h_p = sum of per-type counts",
        census.len(),
        counts.values().sum::<u64>(),
    )];
    for (idx, t) in LABELLED_TYPES.iter().enumerate() {
        let ty = TripleType::T(idx as u8 + 1);
        let c = t[2] as usize;
        let reach = jaco::JacoDegrees::up_to(c).d_plus(c);
        checks.push(Check::new(
            format!("{ty} holes = floor(n / ({c} + {reach}))"),
            type_count_prediction(c, n),
            counts.get(&ty).copied().unwrap_or(0),
        ));
    }
    checks
}

pub fn jaco(n: usize, emit_graph: bool, census: bool, format: Format) -> CmdResult {
    if n > jaco::MAX_CENSUS_N {
        return Err(format!(
            "jaco order n = {n} exceeds the ceiling {}",
            jaco::MAX_CENSUS_N
        ));
    }
    let j = build_jaco(n).map_err(input)?;
    let mut parts = Vec::new();
    let mut checks = Vec::new();
    if emit_graph {
        if n > JACO_EMIT_MAX_N {
            return Err(format!(
                "jaco order n = {n} exceeds the edge-list ceiling {JACO_EMIT_MAX_N}"
            ));
        }
        parts.push(to_edge_list_string(&underlying_graph(&j)));
    }
    if census {
        let entries = pythagorean_census(n).map_err(input)?;
        checks = type_checks(n, &entries);
        let counts: BTreeMap<String, u64> = type_counts(&entries)
            .into_iter()
            .map(|(t, k)| (t.to_string(), k))
            .collect();
        parts.push(match format {
            Format::Json => json(&CensusOut {
                n,
                holes: &entries,
                type_counts: counts,
                checks: &checks,
            }),
            _ => {
                let mut holes = Table::new(&["u", "v", "w", "deg_u", "deg_v", "deg_w", "type"]);
                for e in &entries {
                    let mut row: Vec<String> = e.vertices.iter().map(usize::to_string).collect();
                    row.extend(e.degrees.iter().map(u64::to_string));
                    row.push(e.triple_type.to_string());
                    holes.push(row);
                }
                let mut by_type = Table::new(&["type", "holes"]);
                for (t, k) in &counts {
                    by_type.push(vec![t.clone(), k.to_string()]);
                }
                sections(&[
                    holes.render(format),
                    by_type.render(format),
                    checks_table(&checks).render(format),
                ])
            }
        });
    }
    if !emit_graph && !census {
        let rows: Vec<JacoVertexOut> = (1..=n)
            .map(|i| JacoVertexOut {
                i,
                d_minus: j.in_degree(i),
                d_plus: j.out_degree(i),
                d_plus_truncated: j.truncated_out_degree(i),
                degree: j.degree(i),
            })
            .collect();
        parts.push(match format {
            Format::Json => json(&rows),
            _ => {
                let mut t = Table::new(&["i", "d_minus", "d_plus", "d_plus_truncated", "degree"]);
                for r in &rows {
                    t.push(
                        [
                            r.i as u64,
                            r.d_minus,
                            r.d_plus,
                            r.d_plus_truncated,
                            r.degree,
                        ]
                        .iter()
                        .map(u64::to_string)
                        .collect(),
                    );
                }
                t.render(format)
            }
        });
    }
    Ok(Outcome::checked(sections(&parts), &checks))
}

#[derive(Serialize)]
struct FisherOut<'a> {
    rows: &'a [JacoRow],
    discrepancies: &'a [Discrepancy],
}

pub fn fisher(n_max: usize, reference: Option<&Path>, format: Format) -> CmdResult {
    let reference_rows = match reference {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            JacoRow::parse_csv(&text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => REFERENCE_FISHER_TABLE.to_vec(),
    };
    let rows = fisher_table(n_max).map_err(input)?;
    let discrepancies = audit_fisher_table(&rows, &reference_rows);
    let stdout = match format {
        Format::Json => json(&FisherOut {
            rows: &rows,
            discrepancies: &discrepancies,
        }),
        _ => {
            let mut t = match format {
                Format::Csv => Table::new(&JacoRow::CSV_HEADER.split(',').collect::<Vec<_>>()),
                _ => Table::new(&["i", "d^-(v_i)", "d^+(v_i)", "h(J*_i(1))", "h^p_t1(J*_i(1))"]),
            };
            for r in &rows {
                t.push(
                    [r.i as u64, r.d_minus, r.d_plus, r.h, r.h_p_t1]
                        .iter()
                        .map(u64::to_string)
                        .collect(),
                );
            }
            t.render(format)
        }
    };
    Ok(Outcome {
        stdout,
        stderr: discrepancies
            .iter()
            .map(|d| format!("claim failed: {d}"))
            .collect(),
        ok: discrepancies.is_empty(),
    })
}

#[derive(Serialize)]
struct TripleOut<'a> {
    #[serde(flatten)]
    triple: &'a Triple,
    #[serde(rename = "type")]
    triple_type: TripleType,
}

pub fn triples(c_max: u64, primitive_only: bool, format: Format) -> CmdResult {
    let list = if primitive_only {
        primitive_triples_up_to(c_max)
    } else {
        triples_up_to(c_max)
    }
    .map_err(input)?;
    let index = TypeIndex::up_to(c_max).map_err(input)?;
    let out: Vec<TripleOut> = list
        .iter()
        .map(|t| TripleOut {
            triple: t,
            triple_type: index.classify(t),
        })
        .collect();
    let stdout = match format {
        Format::Json => json(&out),
        _ => {
            let mut table = Table::new(&["a", "b", "c", "primitive", "root", "scale", "type"]);
            for o in &out {
                let t = o.triple;
                let [ra, rb, rc] = t.root;
                table.push(vec![
                    t.a.to_string(),
                    t.b.to_string(),
                    t.c.to_string(),
                    t.primitive.to_string(),
                    format!("({ra}, {rb}, {rc})"),
                    t.scale.to_string(),
                    o.triple_type.to_string(),
                ]);
            }
            table.render(format)
        }
    };
    Ok(Outcome::ok(stdout))
}
