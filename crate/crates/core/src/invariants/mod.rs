//! Exact invariants, each answer paired with a checkable certificate.

mod coloring;
mod cover;
mod cycles;
mod homomorphism;
mod matching;
mod oct;
mod reduce;
pub mod verify;

use serde::{Deserialize, Serialize};

pub use coloring::{chromatic_number, is_k_colorable, ChromaticResult, COLORING_LIMIT};
pub use cover::{min_vertex_cover, CoverResult, COVER_LIMIT};
pub use cycles::{
    find_triangle, is_bipartite, is_triangle_free, odd_girth, shortest_odd_cycle, BipartiteCheck,
};
pub use homomorphism::{c5_homomorphism, HOM_LIMIT};
pub use matching::{max_matching, MatchingResult};
pub use oct::{odd_cycle_transversal, odd_cycle_transversal_with, OctLimits, OctResult};

use crate::bitset::VertexSet;
use crate::error::Result;
use crate::graph::Graph;

/// A witness attached to an invariant answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `colors[v]` is the class of `v`.
    Coloring {
        colors: Vec<usize>,
    },
    Bipartition {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// Deleting these vertices leaves a bipartite graph.
    Transversal {
        vertices: Vec<usize>,
    },
    Matching {
        edges: Vec<(usize, usize)>,
    },
    Cover {
        vertices: Vec<usize>,
    },
    /// `map[v]` is the image of `v` on the cycle `0-1-2-3-4-0`.
    C5Hom {
        map: Vec<usize>,
    },
    /// Consecutive vertices (cyclically) are adjacent.
    OddCycle {
        cycle: Vec<usize>,
    },
    Triangle {
        vertices: [usize; 3],
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Coloring { .. } => "coloring",
            Certificate::Bipartition { .. } => "bipartition",
            Certificate::Transversal { .. } => "transversal",
            Certificate::Matching { .. } => "matching",
            Certificate::Cover { .. } => "cover",
            Certificate::C5Hom { .. } => "c5hom",
            Certificate::OddCycle { .. } => "odd_cycle",
            Certificate::Triangle { .. } => "triangle",
        }
    }
}

/// `δ(G)`; 0 for the empty graph.
pub fn min_degree(g: &Graph) -> usize {
    g.min_degree()
}

pub fn degrees(g: &Graph) -> Vec<usize> {
    g.degrees()
}

/// Neighbours of `v` inside `s`.
pub fn deg_into(g: &Graph, v: usize, s: &VertexSet) -> Result<usize> {
    g.deg_into(v, s)
}
