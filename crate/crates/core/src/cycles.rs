//! Cycles of `J(2, m)`.
//!
//! The structured census joins `k` consecutive inner 4-cycles for every
//! `k = 1..=m` and every starting cycle, giving `m²` records of claimed length
//! `2(k + 1)`. For `k < m` a record is the rim arc across the `k` joined cycles
//! closed by its two boundary spokes. For `k = m` there is no boundary spoke:
//! all shared spokes are removed and what remains is the rim, of length `2m`,
//! and the `m` rotations of the span all give that same cycle. The generic
//! finder below is the reference, and [`verify_census`] reports where the
//! records and the claimed figures disagree with it.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{check_at_least, Error, Result};
use crate::graph::{build_jahangir, JahangirParams, LabeledGraph};

/// Largest `m` for which [`verify_census`] runs the exponential generic
/// search.
pub const VERIFY_MAX_M: usize = 8;

/// One cycle of the structured census.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleRecord {
    /// Inner cycles joined, as cyclically consecutive 1-based indices.
    pub spoke_span: Vec<usize>,
    /// `2(k + 1)`, the length the joining rule predicts.
    pub claimed_length: usize,
    /// Sorted edge indices of the resulting cycle in `J(2, m)`.
    pub edges: Vec<usize>,
    /// Number of edges actually in the cycle.
    pub length: usize,
}

impl CycleRecord {
    pub fn k(&self) -> usize {
        self.spoke_span.len()
    }
}

/// All `m²` records for `J(2, m)`, ordered by span size then start index.
///
/// Inner cycle `i` is bounded by spokes `i` and `i + 1` (mod `m`).
pub fn census_j2m(m: usize) -> Result<Vec<CycleRecord>> {
    check_at_least("m", m as i64, 3, "m >= 3")?;
    let p = JahangirParams::new(2, m)?;
    let rim = p.rim_len();
    let mut records = Vec::with_capacity(m * m);
    for k in 1..=m {
        for start in 1..=m {
            let spoke_span: Vec<usize> = (0..k).map(|t| (start - 1 + t) % m + 1).collect();
            let mut edges: Vec<usize> = if k < m {
                let first = (start - 1) * p.n();
                let mut e: Vec<usize> = (first..first + k * p.n()).map(|i| i % rim).collect();
                let closing = (start - 1 + k) % m + 1;
                e.push(p.spoke_edge(start));
                e.push(p.spoke_edge(closing));
                e
            } else {
                (0..rim).collect()
            };
            edges.sort_unstable();
            records.push(CycleRecord {
                spoke_span,
                claimed_length: 2 * (k + 1),
                length: edges.len(),
                edges,
            });
        }
    }
    Ok(records)
}

/// Every simple cycle of `g` as a sorted edge-index list, sorted.
///
/// Depth-first search from each vertex `s` through vertices greater than `s`
/// only; a cycle is emitted once, in the direction whose second vertex is
/// smaller than its last.
pub fn simple_cycles(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let adj = g.incidence_lists();
    let mut found = Vec::new();
    let mut on_path = vec![false; g.vertex_count()];
    let mut path_vertices = Vec::new();
    let mut path_edges = Vec::new();

    fn walk(
        v: usize,
        start: usize,
        adj: &[Vec<(usize, usize)>],
        on_path: &mut [bool],
        path_vertices: &mut Vec<usize>,
        path_edges: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) {
        for &(w, e) in &adj[v] {
            if w == start && path_vertices.len() >= 3 && path_vertices[1] < v {
                let mut cycle = path_edges.clone();
                cycle.push(e);
                cycle.sort_unstable();
                found.push(cycle);
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path_vertices.push(w);
                path_edges.push(e);
                walk(w, start, adj, on_path, path_vertices, path_edges, found);
                path_edges.pop();
                path_vertices.pop();
                on_path[w] = false;
            }
        }
    }

    for s in 0..g.vertex_count() {
        on_path[s] = true;
        path_vertices.push(s);
        walk(s, s, &adj, &mut on_path, &mut path_vertices, &mut path_edges, &mut found);
        path_vertices.pop();
        on_path[s] = false;
    }
    found.sort();
    found
}

/// A point where the structured census departs from the generic search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusDiscrepancy {
    pub k: usize,
    pub records: usize,
    pub distinct_cycles: usize,
    pub claimed_length: usize,
    pub actual_length: usize,
}

/// Outcome of checking the structured census against the generic finder.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub m: usize,
    /// Number of structured records, `m²`.
    pub records: usize,
    /// The count the joining rule claims, `m²`.
    pub claimed_cycles: usize,
    /// Distinct edge sets among the structured records.
    pub distinct_structured: usize,
    /// Cycles found by the generic search.
    pub generic_cycles: usize,
    /// Structured and generic cycle sets coincide as sets of edge sets.
    pub edge_sets_match: bool,
    /// Every record's edge set is a simple cycle of `J(2, m)`.
    pub records_are_cycles: bool,
    /// Whether `claimed_cycles == generic_cycles`.
    pub claimed_count_holds: bool,
    /// Claimed-length histogram of the records.
    pub claimed_length_histogram: BTreeMap<usize, usize>,
    /// Length histogram of the distinct cycles.
    pub actual_length_histogram: BTreeMap<usize, usize>,
    pub discrepancies: Vec<CensusDiscrepancy>,
}

impl CensusReport {
    /// The structured census reproduces the generic cycle set exactly.
    pub fn matches(&self) -> bool {
        self.edge_sets_match && self.records_are_cycles
    }
}

/// Whether `edges` is a single simple cycle of `g`: every touched vertex has
/// degree two and the edges form one connected piece.
pub fn is_simple_cycle(g: &LabeledGraph, edges: &[usize]) -> bool {
    if edges.len() < 3 {
        return false;
    }
    let mut degree = vec![0usize; g.vertex_count()];
    let mut dsu = crate::graph::DisjointSets::new(g.vertex_count());
    for &e in edges {
        let Some(&(u, v)) = g.edges().get(e) else {
            return false;
        };
        degree[u] += 1;
        degree[v] += 1;
        dsu.union(u, v);
    }
    let touched: Vec<usize> = (0..g.vertex_count()).filter(|&v| degree[v] > 0).collect();
    if touched.iter().any(|&v| degree[v] != 2) {
        return false;
    }
    let root = dsu.find(touched[0]);
    touched.iter().all(|&v| dsu.find(v) == root)
}

/// Runs the generic search on `J(2, m)` and compares it with
/// [`census_j2m`]. Refused for `m` outside `3..=8`.
pub fn verify_census(m: usize) -> Result<CensusReport> {
    check_at_least("m", m as i64, 3, "m >= 3")?;
    if m > VERIFY_MAX_M {
        return Err(Error::SizeGuard {
            what: "m",
            actual: m,
            limit: VERIFY_MAX_M,
        });
    }
    let g = build_jahangir(JahangirParams::new(2, m)?);
    let records = census_j2m(m)?;
    let generic: BTreeSet<Vec<usize>> = simple_cycles(&g).into_iter().collect();
    let structured: BTreeSet<Vec<usize>> = records.iter().map(|r| r.edges.clone()).collect();

    let mut claimed_length_histogram = BTreeMap::new();
    for r in &records {
        *claimed_length_histogram.entry(r.claimed_length).or_insert(0) += 1;
    }
    let mut actual_length_histogram = BTreeMap::new();
    for c in &generic {
        *actual_length_histogram.entry(c.len()).or_insert(0) += 1;
    }

    let mut discrepancies = Vec::new();
    for k in 1..=m {
        let of_k: Vec<&CycleRecord> = records.iter().filter(|r| r.k() == k).collect();
        let distinct: BTreeSet<&Vec<usize>> = of_k.iter().map(|r| &r.edges).collect();
        let actual_length = of_k[0].length;
        let claimed_length = of_k[0].claimed_length;
        if distinct.len() != of_k.len() || actual_length != claimed_length {
            discrepancies.push(CensusDiscrepancy {
                k,
                records: of_k.len(),
                distinct_cycles: distinct.len(),
                claimed_length,
                actual_length,
            });
        }
    }

    Ok(CensusReport {
        m,
        records: records.len(),
        claimed_cycles: m * m,
        distinct_structured: structured.len(),
        generic_cycles: generic.len(),
        edge_sets_match: structured == generic,
        records_are_cycles: records.iter().all(|r| is_simple_cycle(&g, &r.edges)),
        claimed_count_holds: m * m == generic.len(),
        claimed_length_histogram,
        actual_length_histogram,
        discrepancies,
    })
}
