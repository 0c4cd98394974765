//! Minimum vertex cover by branch and bound, seeded with the matching bound.

use serde::{Deserialize, Serialize};

use super::matching::max_matching;
use super::Certificate;
use crate::bitset::BitIter;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const COVER_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverResult {
    pub tau: usize,
    pub cover: Vec<usize>,
    /// Branch nodes explored; zero when the matching bound was met immediately.
    pub nodes: u64,
}

impl CoverResult {
    pub fn certificate(&self) -> Certificate {
        Certificate::Cover {
            vertices: self.cover.clone(),
        }
    }
}

pub fn min_vertex_cover(g: &Graph) -> Result<CoverResult> {
    let rows = g.small_rows().ok_or(Error::Capacity {
        what: "min_vertex_cover",
        limit: COVER_LIMIT,
        best_known: None,
    })?;
    let m = max_matching(g);
    // endpoints of a maximal matching cover every edge
    let mut best: u64 = m.edges.iter().fold(0, |acc, &(u, v)| acc | 1 << u | 1 << v);
    let mut search = CoverSearch {
        rows: &rows,
        best,
        best_size: best.count_ones() as usize,
        floor: m.nu,
        nodes: 0,
    };
    if search.best_size > search.floor {
        let alive = if rows.len() == 64 {
            !0
        } else {
            (1u64 << rows.len()) - 1
        };
        search.branch(alive, 0);
        best = search.best;
    }
    Ok(CoverResult {
        tau: best.count_ones() as usize,
        cover: BitIter(best).collect(),
        nodes: search.nodes,
    })
}

struct CoverSearch<'a> {
    rows: &'a [u64],
    best: u64,
    best_size: usize,
    /// Proven lower bound for the whole graph.
    floor: usize,
    nodes: u64,
}

impl CoverSearch<'_> {
    fn branch(&mut self, mut alive: u64, mut taken: u64) {
        self.nodes += 1;
        if self.best_size == self.floor {
            return;
        }
        // forced moves: drop isolated vertices, take the neighbour of a pendant vertex
        loop {
            let mut changed = false;
            for v in BitIter(alive) {
                if alive >> v & 1 == 0 {
                    continue;
                }
                let nb = self.rows[v] & alive;
                match nb.count_ones() {
                    0 => {
                        alive &= !(1 << v);
                        changed = true;
                    }
                    1 => {
                        taken |= nb;
                        alive &= !(nb | 1 << v);
                        changed = true;
                    }
                    _ => {}
                }
            }
            if !changed {
                break;
            }
        }
        let size = taken.count_ones() as usize;
        if alive == 0 {
            if size < self.best_size {
                self.best = taken;
                self.best_size = size;
            }
            return;
        }
        if size + greedy_matching(self.rows, alive) >= self.best_size {
            return;
        }
        let v = BitIter(alive)
            .max_by_key(|&v| ((self.rows[v] & alive).count_ones(), std::cmp::Reverse(v)))
            .unwrap();
        self.branch(alive & !(1 << v), taken | 1 << v);
        let nb = self.rows[v] & alive;
        if size + (nb.count_ones() as usize) < self.best_size {
            self.branch(alive & !(nb | 1 << v), taken | nb);
        }
    }
}

fn greedy_matching(rows: &[u64], mut alive: u64) -> usize {
    let mut size = 0;
    while alive != 0 {
        let v = alive.trailing_zeros() as usize;
        alive &= !(1 << v);
        let nb = rows[v] & alive;
        if nb != 0 {
            alive &= !(1 << nb.trailing_zeros());
            size += 1;
        }
    }
    size
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        complete, complete_bipartite, cycle, disjoint_union, grotzsch, star,
    };
    use crate::invariants::verify::verify_cover;
    use proptest::prelude::*;

    fn tau(g: &Graph) -> usize {
        let r = min_vertex_cover(g).unwrap();
        verify_cover(g, &r.cover).unwrap();
        r.tau
    }

    fn brute_tau(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|s| g.edges().all(|(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
            .map(|s| s.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(tau(&cycle(7).unwrap()), 4);
        assert_eq!(
            tau(&disjoint_union(&cycle(5).unwrap(), &star(3).unwrap())),
            4
        );
        assert_eq!(tau(&complete_bipartite(4, 4)), 4);
        assert_eq!(tau(&complete(6)), 5);
        assert_eq!(tau(&grotzsch()), brute_tau(&grotzsch()));
        assert!(min_vertex_cover(&cycle(65).unwrap()).is_err());
    }

    proptest! {
        #[test]
        fn agrees_with_brute_force(n in 1usize..=10, bits in proptest::collection::vec(any::<bool>(), 45)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] { edges.push((u, v)); }
                    k += 1;
                }
            }
            let g = Graph::from_edges(n, edges).unwrap();
            prop_assert_eq!(tau(&g), brute_tau(&g));
        }
    }
}
