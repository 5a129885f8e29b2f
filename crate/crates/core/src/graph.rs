//! Jahangir graph construction and the classical matrices of a simple graph.
//!
//! All graphs share one representation, [`LabeledGraph`], so every counting
//! engine in the crate sees exactly the same vertex labels and edge indices.

use std::collections::HashSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{check_at_least, Error, Result};

/// Parameters of the Jahangir graph `J(n, m)`: a rim cycle of `n * m`
/// vertices plus a hub joined to `m` rim vertices spaced `n` apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct JahangirParams {
    n: usize,
    m: usize,
}

impl JahangirParams {
    pub fn new(n: usize, m: usize) -> Result<Self> {
        check_at_least("n", n as i64, 2, "n >= 2")?;
        check_at_least("m", m as i64, 3, "m >= 3")?;
        Ok(Self { n, m })
    }

    /// Rim edges per arc between consecutive spokes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of spokes.
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rim_len(&self) -> usize {
        self.n * self.m
    }

    /// Edge index of spoke `j` (1-based) in the canonical edge list.
    pub fn spoke_edge(&self, j: usize) -> usize {
        debug_assert!((1..=self.m).contains(&j));
        self.rim_len() + j - 1
    }

    /// Rim vertex hit by spoke `j` (1-based).
    pub fn spoke_target(&self, j: usize) -> usize {
        (j - 1) * self.n + 1
    }
}

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl LabeledGraph {
    /// Validates and wraps an edge list. Pairs are stored as given; the
    /// orientation of a pair carries no meaning.
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for &(u, v) in &edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u}, {v}}} references a vertex outside 0..{vertex_count}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u}, {v}}}")));
            }
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn cycle(len: usize) -> Result<Self> {
        check_at_least("len", len as i64, 3, "len >= 3")?;
        Self::new(len, (0..len).map(|i| (i, (i + 1) % len)).collect())
    }

    pub fn complete(order: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..order {
            for v in u + 1..order {
                edges.push((u, v));
            }
        }
        Self { vertex_count: order, edges }
    }

    /// Star with centre 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Self {
            vertex_count: leaves + 1,
            edges: (1..=leaves).map(|v| (0, v)).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    /// Adjacency lists of `(neighbour, edge index)` pairs, in edge order.
    pub fn incidence_lists(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut dsu = DisjointSets::new(self.vertex_count);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        dsu.components() == 1
    }

    /// Graphviz rendering: vertices `v0, v1, ...`, one statement per edge in
    /// canonical order.
    pub fn to_dot(&self, name: &str) -> String {
        self.to_dot_styled(name, |_| None)
    }

    /// Like [`to_dot`](Self::to_dot) but lets the caller attach an attribute
    /// list to individual edges.
    pub fn to_dot_styled(&self, name: &str, mut style: impl FnMut(usize) -> Option<&'static str>) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.vertex_count {
            let _ = writeln!(out, "  v{v};");
        }
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            match style(idx) {
                Some(attrs) => {
                    let _ = writeln!(out, "  v{u} -- v{v} [{attrs}];");
                }
                None => {
                    let _ = writeln!(out, "  v{u} -- v{v};");
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Builds `J(n, m)` with the canonical labelling: vertex 0 is the hub, rim
/// vertices are `1..=n*m` in cycle order, rim edges come first (edge `i`
/// joins rim vertices `i + 1` and `i + 2`, wrapping), then spokes `j = 1..=m`
/// joining the hub to rim vertex `(j - 1) * n + 1`.
pub fn build_jahangir(params: JahangirParams) -> LabeledGraph {
    let rim = params.rim_len();
    let mut edges = Vec::with_capacity(rim + params.m());
    for i in 0..rim {
        edges.push((i + 1, (i + 1) % rim + 1));
    }
    for j in 1..=params.m() {
        edges.push((0, params.spoke_target(j)));
    }
    LabeledGraph {
        vertex_count: rim + 1,
        edges,
    }
}

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().map(BigInt::from).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.entries[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[BigInt] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        out.entries[r * rhs.cols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch in difference");
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (r + 1..self.cols).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.row(r).iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<BigInt> {
        (0..self.cols).map(|c| (0..self.rows).map(|r| self.get(r, c)).sum()).collect()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Copy with row `r` and column `c` removed.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        assert!(r < self.rows && c < self.cols);
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                entries.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Lossy conversion for the floating-point cross-checks.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        use num_traits::ToPrimitive;
        (0..self.rows)
            .map(|r| self.row(r).iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect())
            .collect()
    }
}

pub fn adjacency_matrix(g: &LabeledGraph) -> IntegerMatrix {
    let n = g.vertex_count();
    let mut a = IntegerMatrix::zeros(n, n);
    for &(u, v) in g.edges() {
        a.set(u, v, BigInt::one());
        a.set(v, u, BigInt::one());
    }
    a
}

pub fn degree_matrix(g: &LabeledGraph) -> IntegerMatrix {
    let n = g.vertex_count();
    let mut d = IntegerMatrix::zeros(n, n);
    for (v, deg) in g.degrees().into_iter().enumerate() {
        d.set(v, v, BigInt::from(deg));
    }
    d
}

/// `L = D - A`.
pub fn laplacian_matrix(g: &LabeledGraph) -> IntegerMatrix {
    degree_matrix(g).sub(&adjacency_matrix(g))
}

/// `|V| x |E|` incidence matrix oriented from the lower endpoint (+1) to the
/// higher one (-1).
pub fn oriented_incidence_matrix(g: &LabeledGraph) -> IntegerMatrix {
    let mut m = IntegerMatrix::zeros(g.vertex_count(), g.edge_count());
    for (idx, &(u, v)) in g.edges().iter().enumerate() {
        let (tail, head) = (u.min(v), u.max(v));
        m.set(tail, idx, BigInt::one());
        m.set(head, idx, -BigInt::one());
    }
    m
}

/// Union-find with union by size and path halving.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}
