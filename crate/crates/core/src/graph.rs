//! Immutable simple undirected graphs stored as bit rows.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{words_for, BitIter, VertexSet, WORD};
use crate::error::{domain, Result};

/// Hard ceiling on vertex count.
pub const MAX_VERTICES: usize = 1 << 16;

/// A simple undirected graph on vertices `0..n`.
///
/// Row `v` has bit `u` set iff `uv` is an edge. Rows are symmetric and loop-free.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "vertex count {n} above {MAX_VERTICES}");
        let stride = words_for(n);
        Graph {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(domain(format!("vertex count {n} above {MAX_VERTICES}")));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(domain(format!("edge ({u},{v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(domain(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on `n <= 64` vertices from single-word rows. Rows must be symmetric.
    pub(crate) fn from_small_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        assert!(n <= 64);
        let mut g = Graph::empty(n);
        if n > 0 {
            g.bits.copy_from_slice(rows);
        }
        debug_assert!(g.check_invariants());
        g
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.stride + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.stride + u / WORD] |= 1 << (u % WORD);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.stride + v / WORD] >> (v % WORD) & 1 == 1
    }

    /// The raw bit row of `v`.
    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// Single-word rows, available when `n <= 64`.
    pub(crate) fn small_rows(&self) -> Option<Vec<u64>> {
        (self.n <= 64).then(|| {
            if self.n == 0 {
                Vec::new()
            } else {
                self.bits.clone()
            }
        })
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v)
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| BitIter(w).map(move |b| i * WORD + b))
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Number of neighbours of `v` inside `s`.
    pub fn deg_into(&self, v: usize, s: &VertexSet) -> Result<usize> {
        if v >= self.n {
            return Err(domain(format!(
                "vertex {v} out of range for n = {}",
                self.n
            )));
        }
        if s.universe() != self.n {
            return Err(domain("vertex set over a different vertex count"));
        }
        Ok(self
            .row(v)
            .iter()
            .zip(s.words())
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum())
    }

    /// Minimum degree; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// The subgraph induced by `s`, relabelled in increasing original order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if s.universe() != self.n {
            return Err(domain(format!(
                "vertex set over {} vertices applied to a graph on {}",
                s.universe(),
                self.n
            )));
        }
        let keep = s.to_vec();
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `self - s`.
    pub fn delete_vertices(&self, s: &VertexSet) -> Result<Graph> {
        self.induced_subgraph(&s.complement())
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v]);
        }
        g
    }

    /// Vertex-disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Adds a new vertex `n` adjacent to exactly `nbrs`.
    pub fn with_vertex(&self, nbrs: &VertexSet) -> Graph {
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for u in nbrs.iter() {
            g.set_edge(u, self.n);
        }
        g
    }

    pub(crate) fn check_invariants(&self) -> bool {
        (0..self.n).all(|v| {
            !self.has_edge(v, v) && self.neighbors(v).all(|u| u < self.n && self.has_edge(u, v))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

/// A base graph with a part size for each base vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlowupSpec {
    pub base: Graph,
    pub sizes: Vec<usize>,
}

impl BlowupSpec {
    pub fn new(base: Graph, sizes: Vec<usize>) -> Result<Self> {
        if sizes.len() != base.n() {
            return Err(domain(format!(
                "blow-up needs {} part sizes, got {}",
                base.n(),
                sizes.len()
            )));
        }
        Ok(BlowupSpec { base, sizes })
    }

    /// Index range occupied by the part of base vertex `v` in the blow-up.
    pub fn block(&self, v: usize) -> std::ops::Range<usize> {
        let start: usize = self.sizes[..v].iter().sum();
        start..start + self.sizes[v]
    }
}

/// Replaces each base vertex by an independent set; parts are consecutive blocks in base order.
pub fn blow_up(spec: &BlowupSpec) -> Graph {
    let total: usize = spec.sizes.iter().sum();
    let blocks: Vec<_> = (0..spec.base.n()).map(|v| spec.block(v)).collect();
    let mut g = Graph::empty(total);
    for (a, b) in spec.base.edges() {
        for u in blocks[a].clone() {
            for v in blocks[b].clone() {
                g.set_edge(u, v);
            }
        }
    }
    g
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&crate::graph6::to_graph6(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        crate::graph6::from_graph6(&text).map_err(serde::de::Error::custom)
    }
}
