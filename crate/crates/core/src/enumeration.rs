//! Explicit spanning-tree edge sets.
//!
//! [`enumerate_all`] works on any simple graph by include/exclude
//! backtracking and serves as the reference. [`enumerate_jahangir`] builds the
//! trees of `J(n, m)` directly from a spoke subset plus one deleted rim edge
//! per arc.

use serde::Serialize;

use crate::combinatorics::Combinations;
use crate::error::{Error, Result};
use crate::graph::{DisjointSets, JahangirParams, LabeledGraph};

/// Default bound on the number of trees a single enumeration may yield.
pub const DEFAULT_ENUMERATION_CAP: u64 = 10_000_000;

/// A spanning tree as a sorted list of indices into its graph's edge list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SpanningTree {
    edge_indices: Vec<usize>,
}

impl SpanningTree {
    pub fn edge_indices(&self) -> &[usize] {
        &self.edge_indices
    }

    pub fn into_edge_indices(self) -> Vec<usize> {
        self.edge_indices
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.edge_indices.binary_search(&edge).is_ok()
    }
}

/// Checks that `edges` (indices into `g`) form a spanning tree of `g`:
/// exactly `|V| - 1` distinct in-range edges, no cycle, one component.
pub fn is_spanning_tree(g: &LabeledGraph, edges: &[usize]) -> bool {
    let order = g.vertex_count();
    if order == 0 || edges.len() != order - 1 {
        return false;
    }
    let mut dsu = DisjointSets::new(order);
    for &e in edges {
        let Some(&(u, v)) = g.edges().get(e) else {
            return false;
        };
        if !dsu.union(u, v) {
            return false;
        }
    }
    dsu.components() == 1
}

/// Union-find without path compression so unions can be undone in LIFO
/// order.
#[derive(Debug, Clone)]
struct RollbackDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    history: Vec<usize>,
}

impl RollbackDsu {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.history.push(rb);
        true
    }

    fn undo(&mut self) {
        let child = self.history.pop().expect("undo without union");
        let root = self.parent[child];
        self.size[root] -= self.size[child];
        self.parent[child] = child;
    }
}

/// Stream of every spanning tree of a graph, in lexicographic order of the
/// sorted edge-index lists.
#[derive(Debug, Clone)]
pub struct AllSpanningTrees {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    chosen: Vec<usize>,
    dsu: RollbackDsu,
    next_edge: usize,
    remaining: Option<u64>,
    done: bool,
    diagnostic: Option<String>,
}

impl AllSpanningTrees {
    /// Set when the stream was empty because of its input rather than its
    /// limit.
    pub fn diagnostic(&self) -> Option<&str> {
        self.diagnostic.as_deref()
    }

    /// Whether the partial forest plus every edge from `from` onwards still
    /// connects the graph.
    fn completable(&self, from: usize) -> bool {
        let mut dsu = DisjointSets::new(self.vertex_count);
        for &e in &self.chosen {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        for &(u, v) in &self.edges[from..] {
            if dsu.union(u, v) && dsu.components() == 1 {
                return true;
            }
        }
        dsu.components() == 1
    }

    fn pop(&mut self) -> bool {
        match self.chosen.pop() {
            Some(e) => {
                self.dsu.undo();
                self.next_edge = e + 1;
                true
            }
            None => false,
        }
    }
}

impl Iterator for AllSpanningTrees {
    type Item = SpanningTree;

    fn next(&mut self) -> Option<SpanningTree> {
        if self.done || self.remaining == Some(0) {
            return None;
        }
        let target = self.vertex_count - 1;
        if target == 0 {
            // A single vertex has exactly one, empty, spanning tree.
            self.done = true;
            self.remaining = self.remaining.map(|r| r - 1);
            return Some(SpanningTree { edge_indices: Vec::new() });
        }
        loop {
            if self.chosen.len() == target {
                let tree = SpanningTree {
                    edge_indices: self.chosen.clone(),
                };
                self.pop();
                self.remaining = self.remaining.map(|r| r - 1);
                return Some(tree);
            }
            let mut advanced = false;
            let needed = target - self.chosen.len();
            while self.next_edge + needed <= self.edges.len() {
                let c = self.next_edge;
                // Monotone in `c`: once the graph cannot be completed from c,
                // it cannot be completed from any later edge either.
                if !self.completable(c) {
                    break;
                }
                let (u, v) = self.edges[c];
                if self.dsu.union(u, v) {
                    self.chosen.push(c);
                    self.next_edge = c + 1;
                    advanced = true;
                    break;
                }
                self.next_edge += 1;
            }
            if !advanced && !self.pop() {
                self.done = true;
                return None;
            }
        }
    }
}

/// Every spanning tree of `g`, optionally stopping after `limit` trees.
///
/// A disconnected graph yields nothing and records a diagnostic.
pub fn enumerate_all(g: &LabeledGraph, limit: Option<u64>) -> AllSpanningTrees {
    let connected = g.vertex_count() > 0 && g.is_connected();
    AllSpanningTrees {
        vertex_count: g.vertex_count(),
        edges: g.edges().to_vec(),
        chosen: Vec::new(),
        dsu: RollbackDsu::new(g.vertex_count()),
        next_edge: 0,
        remaining: limit,
        done: !connected,
        diagnostic: (!connected).then(|| "graph is disconnected or empty; it has no spanning tree".to_string()),
    }
}

/// Stream of the spanning trees of `J(n, m)`, grouped by the number of kept
/// spokes `k = 1..=m`, then by spoke subset in lexicographic order, then by
/// deleted rim edges (an odometer over the arcs, each arc's candidates in
/// ascending edge index).
#[derive(Debug, Clone)]
pub struct JahangirSpanningTrees {
    params: JahangirParams,
    k: usize,
    subsets: Combinations,
    /// Candidate rim edges for each arc of the current subset.
    arcs: Vec<Vec<usize>>,
    /// Odometer position within each arc.
    cursor: Vec<usize>,
    spokes: Vec<usize>,
    have_subset: bool,
    remaining: Option<u64>,
}

impl JahangirSpanningTrees {
    fn load_next_subset(&mut self) -> bool {
        loop {
            if let Some(subset) = self.subsets.advance() {
                let p = self.params;
                let rim = p.rim_len();
                self.spokes = subset.iter().map(|&j| p.spoke_edge(j)).collect();
                self.arcs = (0..subset.len())
                    .map(|i| {
                        let start = (subset[i] - 1) * p.n();
                        let end = if i + 1 < subset.len() {
                            (subset[i + 1] - 1) * p.n()
                        } else {
                            (subset[0] - 1) * p.n() + rim
                        };
                        let mut arc: Vec<usize> = (start..end).map(|e| e % rim).collect();
                        arc.sort_unstable();
                        arc
                    })
                    .collect();
                self.cursor = vec![0; subset.len()];
                return true;
            }
            if self.k == self.params.m() {
                return false;
            }
            self.k += 1;
            self.subsets = Combinations::new(self.params.m(), self.k);
        }
    }

    fn current_tree(&self) -> SpanningTree {
        let rim = self.params.rim_len();
        let mut deleted: Vec<usize> = self.arcs.iter().zip(&self.cursor).map(|(arc, &c)| arc[c]).collect();
        deleted.sort_unstable();
        let mut edge_indices = Vec::with_capacity(rim);
        let mut del = deleted.iter().peekable();
        for e in 0..rim {
            if del.peek() == Some(&&e) {
                del.next();
            } else {
                edge_indices.push(e);
            }
        }
        edge_indices.extend_from_slice(&self.spokes);
        SpanningTree { edge_indices }
    }

    /// Steps the odometer; false once it wraps around.
    fn bump(&mut self) -> bool {
        for i in (0..self.cursor.len()).rev() {
            self.cursor[i] += 1;
            if self.cursor[i] < self.arcs[i].len() {
                return true;
            }
            self.cursor[i] = 0;
        }
        false
    }
}

impl Iterator for JahangirSpanningTrees {
    type Item = SpanningTree;

    fn next(&mut self) -> Option<SpanningTree> {
        if self.remaining == Some(0) {
            return None;
        }
        if !self.have_subset {
            if !self.load_next_subset() {
                return None;
            }
            self.have_subset = true;
        }
        let tree = self.current_tree();
        if !self.bump() {
            self.have_subset = false;
        }
        self.remaining = self.remaining.map(|r| r - 1);
        Some(tree)
    }
}

/// Structured enumeration of the spanning trees of `J(n, m)`.
pub fn enumerate_jahangir(params: JahangirParams, limit: Option<u64>) -> JahangirSpanningTrees {
    JahangirSpanningTrees {
        params,
        k: 1,
        subsets: Combinations::new(params.m(), 1),
        arcs: Vec::new(),
        cursor: Vec::new(),
        spokes: Vec::new(),
        have_subset: false,
        remaining: limit,
    }
}

/// Drains `trees`, failing once more than `cap` have been produced.
pub fn count_capped<I: Iterator<Item = SpanningTree>>(trees: I, cap: u64) -> Result<u64> {
    let mut count = 0u64;
    for _ in trees {
        count += 1;
        if count > cap {
            return Err(Error::CapExceeded { cap });
        }
    }
    Ok(count)
}
