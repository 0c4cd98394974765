//! Odd-cycle transversal number `d₂` by iterative deepening.
//!
//! Every transversal meets every odd cycle, so a search that branches on the vertices of one
//! shortest odd cycle of the remaining graph is exhaustive with branching factor at most the odd
//! girth.

use serde::{Deserialize, Serialize};

use super::cycles::shortest_odd_cycle;
use super::Certificate;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OctLimits {
    /// Largest transversal size searched; `None` means unbounded.
    pub max_size: Option<usize>,
}

impl OctLimits {
    /// Unbounded up to 64 vertices, otherwise transversals of size at most 8.
    pub fn for_order(n: usize) -> Self {
        OctLimits {
            max_size: (n > 64).then_some(8),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OctResult {
    pub d2: usize,
    pub transversal: Vec<usize>,
    /// Branch nodes spent refuting every size below `d2`.
    pub refutation_nodes: u64,
}

impl OctResult {
    pub fn certificate(&self) -> Certificate {
        Certificate::Transversal {
            vertices: self.transversal.clone(),
        }
    }
}

pub fn odd_cycle_transversal(g: &Graph) -> Result<OctResult> {
    odd_cycle_transversal_with(g, OctLimits::for_order(g.n()))
}

pub fn odd_cycle_transversal_with(g: &Graph, limits: OctLimits) -> Result<OctResult> {
    let mut refutation_nodes = 0;
    let mut k = 0;
    loop {
        if limits.max_size.is_some_and(|m| k > m) {
            return Err(Error::Capacity {
                what: "odd_cycle_transversal",
                limit: limits.max_size.unwrap_or(0),
                best_known: Some(greedy_upper_bound(g)),
            });
        }
        let mut removed = VertexSet::empty(g.n());
        let mut nodes = 0;
        if branch(g, &mut removed, k, &mut nodes) {
            return Ok(OctResult {
                d2: k,
                transversal: removed.to_vec(),
                refutation_nodes,
            });
        }
        refutation_nodes += nodes;
        k += 1;
    }
}

fn branch(g: &Graph, removed: &mut VertexSet, budget: usize, nodes: &mut u64) -> bool {
    *nodes += 1;
    let Some(cycle) = shortest_odd_cycle(g, removed) else {
        return true;
    };
    if budget == 0 {
        return false;
    }
    let mut order = cycle;
    order.sort_unstable();
    for x in order {
        removed.insert(x);
        if branch(g, removed, budget - 1, nodes) {
            return true;
        }
        removed.remove(x);
    }
    false
}

/// Size of the transversal built by repeatedly deleting the highest-degree vertex of a shortest
/// odd cycle.
fn greedy_upper_bound(g: &Graph) -> usize {
    let mut removed = VertexSet::empty(g.n());
    while let Some(c) = shortest_odd_cycle(g, &removed) {
        let v = c
            .into_iter()
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        removed.insert(v);
    }
    removed.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, grotzsch, h_n};
    use crate::invariants::verify::verify_transversal;

    fn d2(g: &Graph) -> usize {
        let r = odd_cycle_transversal(g).unwrap();
        verify_transversal(g, &r.transversal).unwrap();
        r.d2
    }

    /// Smallest `k` such that some `k`-subset leaves a bipartite graph.
    fn brute_d2(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&s| {
                verify_transversal(g, &(0..n).filter(|v| s >> v & 1 == 1).collect::<Vec<_>>())
                    .is_ok()
            })
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(d2(&cycle(5).unwrap()), 1);
        assert_eq!(d2(&complete(2)), 0);
        assert_eq!(d2(&complete(5)), 3);
        assert_eq!(d2(&h_n(24).unwrap()), 4);
    }

    #[test]
    fn c5_blowup_transversal_is_smallest_part() {
        // deleting a whole part leaves a blown-up path; anything less keeps a C5
        for n in 14..=40 {
            let smallest = *crate::constructions::h_n_sizes(n)
                .unwrap()
                .iter()
                .min()
                .unwrap();
            assert_eq!(d2(&h_n(n).unwrap()), smallest, "n={n}");
        }
        let g = grotzsch();
        assert_eq!(d2(&g), brute_d2(&g));
    }

    #[test]
    fn capacity_error_carries_upper_bound() {
        let g = h_n(80).unwrap();
        let err = odd_cycle_transversal_with(&g, OctLimits { max_size: Some(2) }).unwrap_err();
        match err {
            Error::Capacity {
                best_known: Some(b),
                ..
            } => assert!(b >= 4),
            other => panic!("{other:?}"),
        }
        assert_eq!(odd_cycle_transversal(&g).unwrap().d2, 4);
    }
}
