//! The concrete families of cubic symmetric abelian bi-Cayley graphs and
//! the exhaustive searches around them.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::abelian::{abelian_groups_of_order, factorize, AbelianGroup, GroupElement};
use crate::bci::{bci_by_criterion, bci_oracle, BciVerdict, Method, ORACLE_MAX_ORDER};
use crate::bicayley::{generalized_petersen, BiCayleyGraph, BiCayleySpec};
use crate::error::Result;
use crate::graph::{named, Graph};
use crate::symmetry::{
    automorphism_group, canonical_form, is_k_arc_transitive, k_arc_regularity_with, ArcRegularity,
};

pub const REPORT_VERSION: &str = "1";
pub const DEFAULT_MAX_VERTICES: usize = 64;
pub const DEFAULT_MAX_GROUP_ORDER: usize = 24;
pub const BOUNDED_NOTE: &str =
    "infinite families are verified only for the instances within the stated bounds";

/// The seven symmetric generalized Petersen graphs with their k.
pub const PETERSEN_PAIRS: [(usize, usize, usize); 7] =
    [(4, 1, 2), (5, 2, 3), (8, 3, 2), (10, 2, 2), (10, 3, 3), (12, 5, 2), (24, 5, 2)];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub table: u8,
    pub row: usize,
    pub params: BTreeMap<&'static str, i64>,
    pub expected_k: usize,
    pub expected_name: Option<String>,
}

impl CensusRow {
    fn new(table: u8, row: usize, params: &[(&'static str, i64)], expected_k: usize, name: Option<&str>) -> Self {
        CensusRow {
            table,
            row,
            params: params.iter().copied().collect(),
            expected_k,
            expected_name: name.map(str::to_owned),
        }
    }
}

fn zero_type(group: AbelianGroup, s: &[GroupElement]) -> BiCayleyGraph {
    BiCayleyGraph::build(BiCayleySpec::zero_type(group, s).expect("valid connection set")).expect("simple graph")
}

fn cyclic_zero_type(n: usize, s: &[i64]) -> BiCayleyGraph {
    let h = AbelianGroup::cyclic(n).expect("positive order");
    let s: Vec<_> = s.iter().map(|&x| h.element(&[x]).expect("cyclic")).collect();
    zero_type(h, &s)
}

/// `<a, b | a^n = b^n = 1, a^x = b^y>` with `S = {1, a, b}`.
fn two_generator_instance(n: usize, x: i64, y: i64) -> BiCayleyGraph {
    let free = AbelianGroup::new(&[n, n]).expect("positive orders");
    let relator = free.element(&[x, -y]).expect("element");
    let q = free.quotient(&free.subgroup_generated(&[relator]));
    let a = q.map(&free.element(&[1, 0]).expect("element"));
    let b = q.map(&free.element(&[0, 1]).expect("element"));
    let h = q.group().clone();
    zero_type(h.clone(), &[h.identity(), a, b])
}

fn row1_admissible(r: usize, m: usize) -> bool {
    if r <= 3 || (m == 1 && r < 11) {
        return false;
    }
    factorize(r)
        .into_iter()
        .all(|(p, e)| (p == 3 && e == 1) || p % 3 == 1)
}

/// Every 0-type census parameterization with at most `max_vertices` vertices.
pub fn table1_instances(max_vertices: usize) -> Vec<(CensusRow, BiCayleyGraph)> {
    let max_h = max_vertices / 2;
    let mut out = Vec::new();
    for m in 1.. {
        if 4 * m * m > max_h {
            break;
        }
        for r in 4..=max_h / (m * m) {
            if !row1_admissible(r, m) {
                continue;
            }
            for u in (0..r).filter(|u| (u * u + u + 1) % r == 0) {
                let row = CensusRow::new(1, 1, &[("r", r as i64), ("m", m as i64), ("u", u as i64)], 1, None);
                let n = r * m;
                out.push((row, two_generator_instance(n, (m * (u + 1)) as i64, m as i64)));
            }
        }
    }
    if 8 <= max_h {
        out.push((
            CensusRow::new(1, 2, &[], 2, Some("Moebius-Kantor")),
            cyclic_zero_type(8, &[0, 2, 3]),
        ));
    }
    for m in (2..).take_while(|m| m * m <= max_h).filter(|&m| m != 3) {
        let h = AbelianGroup::new(&[m, m]).expect("positive orders");
        let s = [h.identity(), h.element(&[1, 0]).expect("e"), h.element(&[0, 1]).expect("e")];
        let name = match m {
            2 => Some("Q3"),
            4 => Some("Dyck"),
            _ => None,
        };
        out.push((CensusRow::new(1, 3, &[("m", m as i64)], 2, name), zero_type(h, &s)));
    }
    for m in (2..).take_while(|m| 3 * m * m <= max_h) {
        let row = CensusRow::new(1, 4, &[("m", m as i64)], 2, None);
        out.push((row, two_generator_instance(3 * m, 2 * m as i64, m as i64)));
    }
    if 3 <= max_h {
        out.push((CensusRow::new(1, 5, &[], 3, Some("K33")), cyclic_zero_type(3, &[0, 1, -1])));
    }
    if 9 <= max_h {
        let h = AbelianGroup::new(&[3, 3]).expect("positive orders");
        let s = [h.identity(), h.element(&[1, 0]).expect("e"), h.element(&[0, 1]).expect("e")];
        out.push((CensusRow::new(1, 6, &[], 3, Some("Pappus")), zero_type(h, &s)));
    }
    if 7 <= max_h {
        out.push((CensusRow::new(1, 7, &[], 4, Some("Heawood")), cyclic_zero_type(7, &[0, 1, 3])));
    }
    out
}

/// The row 4 instance with `m = 3`, on 54 vertices.
///
/// Row 4 is the `r = 3` case of row 1: `u^2 + u + 1 = 0 (mod 3)` forces
/// `u = 1`, so the relation is `b^m = a^(2m)`. With `a^m = b^m` instead,
/// `(a b^-1)^m = 1` and the graph is not symmetric.
pub fn row4_54() -> (CensusRow, BiCayleyGraph) {
    (CensusRow::new(1, 4, &[("m", 3)], 2, None), two_generator_instance(9, 6, 3))
}

/// The 2-type census: the Z_2^2 and Z_2 x Z_10 rows and the seven Petersen pairs.
pub fn table2_instances() -> Vec<(CensusRow, BiCayleyGraph)> {
    let mut out = Vec::new();
    let z2sq = AbelianGroup::new(&[2, 2]).expect("positive orders");
    let (a, b) = (z2sq.element(&[1, 0]).expect("e"), z2sq.element(&[0, 1]).expect("e"));
    let spec = BiCayleySpec::new(z2sq.clone(), &[a.clone(), b.clone()], &[a, b], &[z2sq.identity()]).expect("valid");
    out.push((CensusRow::new(2, 1, &[], 2, Some("GP(4,1)")), BiCayleyGraph::build(spec).expect("simple")));

    let h = AbelianGroup::new(&[2, 10]).expect("positive orders");
    let e = |x: i64, y: i64| h.element(&[x, y]).expect("e");
    let spec = BiCayleySpec::new(h.clone(), &[e(1, 3), e(1, -3)], &[e(0, 1), e(0, -1)], &[h.identity()]).expect("valid");
    out.push((CensusRow::new(2, 2, &[], 2, None), BiCayleyGraph::build(spec).expect("simple")));

    for (n, k, expected) in PETERSEN_PAIRS {
        let row = if expected == 2 { 3 } else { 4 };
        let name = format!("GP({n},{k})");
        out.push((
            CensusRow::new(2, row, &[("n", n as i64), ("k", k as i64)], expected, Some(&name)),
            generalized_petersen(n, k).expect("in range"),
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct InstanceReport {
    pub row: CensusRow,
    pub spec: String,
    pub graph6: String,
    pub vertices: usize,
    pub girth: Option<usize>,
    pub k: Option<usize>,
    pub max_transitive_k: usize,
    /// Decimal, as the order may exceed 64 bits in principle.
    pub aut_order: String,
    pub bci: Option<BciVerdict>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub note: &'static str,
    pub instances: Vec<InstanceReport>,
    pub pass: bool,
}

impl Report {
    pub fn new(instances: Vec<InstanceReport>) -> Self {
        let pass = instances.iter().all(|i| i.pass);
        Report {
            version: REPORT_VERSION,
            note: BOUNDED_NOTE,
            instances,
            pass,
        }
    }
}

/// `n * 3 * 2^(k-1)`.
pub fn expected_aut_order(n: usize, k: usize) -> u128 {
    n as u128 * 3 * (1u128 << (k - 1))
}

/// How BCI is checked for an instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BciMode {
    Skip,
    Criterion,
    /// Criterion, plus the oracle where `|H|` allows.
    CrossCheck,
}

pub fn analyze(row: &CensusRow, b: &BiCayleyGraph, bci: BciMode) -> Result<InstanceReport> {
    let g = b.graph();
    let aut = automorphism_group(g)?;
    let reg = if g.is_cubic() {
        k_arc_regularity_with(g, &aut)?
    } else {
        ArcRegularity {
            k: None,
            arc_transitive: false,
            max_transitive_k: 0,
        }
    };
    let order = aut.order();
    let mut checks = vec![
        Check { name: "connected", pass: g.is_connected() },
        Check { name: "cubic", pass: g.is_cubic() },
    ];
    if row.table == 1 {
        let [h0, h1] = b.parts();
        let parts_ok = matches!(g.bipartition(), Some((x, y)) if x == h0 && y == h1);
        checks.push(Check { name: "bipartite with parts H0, H1", pass: parts_ok });
        checks.push(Check { name: "girth in {4, 6}", pass: matches!(g.girth(), Some(4 | 6)) });
        checks.push(Check { name: "k-regular as tabulated", pass: reg.k == Some(row.expected_k) });
    } else {
        checks.push(Check { name: "arc-transitive", pass: reg.arc_transitive });
        checks.push(Check {
            name: "k-arc-transitive as tabulated",
            pass: reg.max_transitive_k >= row.expected_k,
        });
    }
    if let Some(k) = reg.k {
        checks.push(Check {
            name: "|Aut| = n * 3 * 2^(k-1)",
            pass: order == expected_aut_order(g.n(), k),
        });
    }
    let verdict = match bci {
        BciMode::Skip => None,
        BciMode::Criterion => Some(bci_by_criterion(b)?),
        BciMode::CrossCheck => {
            let crit = bci_by_criterion(b)?;
            if b.group().size() <= ORACLE_MAX_ORDER {
                let oracle = bci_oracle(b)?;
                checks.push(Check {
                    name: "criterion and oracle agree",
                    pass: oracle.is_bci == crit.is_bci,
                });
                Some(BciVerdict {
                    method: Method::Both,
                    counterexample: oracle.counterexample,
                    ..crit
                })
            } else {
                Some(crit)
            }
        }
    };
    if let Some(v) = &verdict {
        checks.push(Check { name: "BCI", pass: v.is_bci });
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(InstanceReport {
        row: row.clone(),
        spec: b.spec().to_string(),
        graph6: g.to_graph6(),
        vertices: g.n(),
        girth: g.girth(),
        k: reg.k,
        max_transitive_k: reg.max_transitive_k,
        aut_order: order.to_string(),
        bci: verdict,
        checks,
        pass,
    })
}

fn analyze_all(instances: &[(CensusRow, BiCayleyGraph)], bci: BciMode) -> Result<Report> {
    let reports = instances
        .par_iter()
        .map(|(row, b)| analyze(row, b, bci))
        .collect::<Result<Vec<_>>>()?;
    Ok(Report::new(reports))
}

pub fn table1_report(max_vertices: usize) -> Result<Report> {
    analyze_all(&table1_instances(max_vertices), BciMode::Skip)
}

pub fn table2_report() -> Result<Report> {
    analyze_all(&table2_instances(), BciMode::Skip)
}

/// BCI for every 0-type census instance within the bound plus the 54-vertex
/// row 4 instance, cross-checked by the oracle where `|H| <= 16`.
pub fn theorem_b_verify(max_vertices: usize) -> Result<Report> {
    let mut instances = table1_instances(max_vertices);
    let extra = row4_54();
    if !instances.iter().any(|(_, b)| b.graph().n() == 54 && b.spec() == extra.1.spec()) {
        instances.push(extra);
    }
    analyze_all(&instances, BciMode::CrossCheck)
}

/// Shortest cycle length through each edge, which an edge-transitive
/// graph must have constant.
fn edge_cycle_profile_is_uniform(g: &Graph) -> bool {
    let mut first = None;
    for (u, v) in g.edges() {
        // BFS from u avoiding the edge {u, v}
        let mut dist = vec![usize::MAX; g.n()];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if x == v {
                break;
            }
            for &y in g.neighbors(x) {
                if (x == u && y == v) || dist[y] != usize::MAX {
                    continue;
                }
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        let len = dist[v];
        match first {
            None => first = Some(len),
            Some(f) if f != len => return false,
            Some(_) => {}
        }
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremAHit {
    pub certificate: String,
    pub name: Option<String>,
    pub vertices: usize,
    /// The first spec found producing the graph.
    pub spec: String,
    pub k: Option<usize>,
}

/// Names of the graphs expected from the 1-type search, keyed by certificate.
pub fn theorem_a_expected() -> Result<BTreeMap<String, &'static str>> {
    let graphs = [
        ("K4", named::complete(4)),
        ("Q3", named::cube()),
        ("GP(8,3)", generalized_petersen(8, 3)?.graph().clone()),
        ("GP(12,5)", generalized_petersen(12, 5)?.graph().clone()),
    ];
    graphs
        .into_iter()
        .map(|(name, g)| Ok((canonical_form(&g)?.certificate, name)))
        .collect()
}

/// All connected arc-transitive `BC(H, {r}, {s}, {1, t})` with `H`
/// abelian, `|H| <= max_group_order`, `r, s` involutions, `t != 1` and
/// `<r, s, t> = H`, up to isomorphism, sorted by vertex count then
/// certificate.
pub fn theorem_a_search(max_group_order: usize) -> Result<Vec<TheoremAHit>> {
    let expected = theorem_a_expected()?;
    let mut specs = Vec::new();
    for n in 2..=max_group_order {
        for h in abelian_groups_of_order(n) {
            let involutions: Vec<GroupElement> = h.elements().filter(|x| h.element_order(x) == 2).collect();
            for r in &involutions {
                for s in &involutions {
                    for t in h.elements().filter(|t| !h.is_identity(t)) {
                        if !h.subgroup_generated(&[r.clone(), s.clone(), t.clone()]).is_whole_group() {
                            continue;
                        }
                        specs.push(
                            BiCayleySpec::new(h.clone(), std::slice::from_ref(r), std::slice::from_ref(s), &[h.identity(), t])
                                .expect("involutions are self-inverse"),
                        );
                    }
                }
            }
        }
    }
    let hits = specs
        .into_par_iter()
        .map(|spec| -> Result<Option<TheoremAHit>> {
            let b = BiCayleyGraph::build(spec)?;
            let g = b.graph();
            if !g.is_connected() || !edge_cycle_profile_is_uniform(g) {
                return Ok(None);
            }
            let canon = canonical_form(g)?;
            let reg = k_arc_regularity_with(g, &canon.automorphisms)?;
            if !reg.arc_transitive {
                return Ok(None);
            }
            Ok(Some(TheoremAHit {
                name: expected.get(&canon.certificate).map(|s| s.to_string()),
                certificate: canon.certificate,
                vertices: g.n(),
                spec: b.spec().to_string(),
                k: reg.k,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut unique: BTreeMap<(usize, String), TheoremAHit> = BTreeMap::new();
    for hit in hits.into_iter().flatten() {
        unique.entry((hit.vertices, hit.certificate.clone())).or_insert(hit);
    }
    Ok(unique.into_values().collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeControls {
    /// 0-type specs over groups of order 10 whose graph is `GP(10, 3)`.
    pub desargues_matches: Vec<String>,
    /// `(n, k)` with `GP(n, k)` arc-transitive, `n <= max_n`.
    pub arc_transitive_petersen: Vec<(usize, usize)>,
    pub pass: bool,
}

/// `GP(10, 3)` against every `BC(H, S)` with `|H| = 10`, and the scan of
/// `GP(n, k)` for `n <= max_n` against the seven listed pairs.
pub fn negative_controls(max_n: usize) -> Result<NegativeControls> {
    let target = generalized_petersen(10, 3)?;
    let cert = canonical_form(target.graph())?.certificate;
    let girth = target.graph().girth();
    let mut specs = Vec::new();
    for h in abelian_groups_of_order(10) {
        let els: Vec<GroupElement> = h.elements().collect();
        for i in 0..els.len() {
            for j in i + 1..els.len() {
                for k in j + 1..els.len() {
                    specs.push(BiCayleySpec::zero_type(h.clone(), &[els[i].clone(), els[j].clone(), els[k].clone()])?);
                }
            }
        }
    }
    let desargues_matches: Vec<String> = specs
        .into_par_iter()
        .map(|spec| -> Result<Option<String>> {
            let b = BiCayleyGraph::build(spec)?;
            if !b.graph().is_connected() || b.graph().girth() != girth {
                return Ok(None);
            }
            Ok((canonical_form(b.graph())?.certificate == cert).then(|| b.spec().to_string()))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let pairs: Vec<(usize, usize)> = (3..=max_n).flat_map(|n| (1..n.div_ceil(2)).map(move |k| (n, k))).collect();
    let arc_transitive_petersen: Vec<(usize, usize)> = pairs
        .into_par_iter()
        .map(|(n, k)| -> Result<Option<(usize, usize)>> {
            let g = generalized_petersen(n, k)?;
            if !edge_cycle_profile_is_uniform(g.graph()) {
                return Ok(None);
            }
            let aut = automorphism_group(g.graph())?;
            Ok(is_k_arc_transitive(g.graph(), &aut, 1).then_some((n, k)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let listed: Vec<(usize, usize)> = PETERSEN_PAIRS
        .iter()
        .filter(|p| p.0 <= max_n)
        .map(|&(n, k, _)| (n, k))
        .collect();
    let pass = desargues_matches.is_empty() && arc_transitive_petersen == listed;
    Ok(NegativeControls {
        desargues_matches,
        arc_transitive_petersen,
        pass,
    })
}

