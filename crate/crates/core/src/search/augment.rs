//! Canonical augmentation tree of triangle-free graphs.
//!
//! A child of `P` adds one vertex whose neighbourhood is an independent set of `P`. The child is
//! kept iff the new vertex lies in the canonical deletion orbit: among the minimum-degree vertices,
//! the first cell of the equitable refinement of the degree partition, and within that cell the
//! orbit with the greatest rooted certificate. Siblings that are isomorphic are merged by the same
//! rooted certificate whenever the parent may have non-trivial automorphisms.
//!
//! Because the deleted vertex always has minimum degree, a graph on `m + 1` vertices has at most
//! `e·(m+1)/(m-1)` edges when its parent has `e`; this drives the edge-count pruning.

use std::collections::HashSet;

use crate::bitset::BitIter;
use crate::bounds::mantel_bound;
use crate::canon::{equitable_cells, rooted_certificate};
use crate::graph::Graph;

/// Largest order the single-word augmentation supports.
pub const AUGMENT_MAX: usize = 64;

/// Degree-ordered initial cells (ascending degree).
fn degree_cells(g: &Graph) -> Vec<Vec<usize>> {
    let deg = g.degrees();
    let max = deg.iter().copied().max().unwrap_or(0);
    let mut cells = vec![Vec::new(); max + 1];
    for (v, &d) in deg.iter().enumerate() {
        cells[d].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

/// Whether the equitable partition of `g` is discrete, which forces a trivial automorphism group.
pub(crate) fn is_rigid(g: &Graph) -> bool {
    let cells = equitable_cells(g, &degree_cells(g));
    cells.len() == g.n()
}

/// Outcome of the parent test for the last vertex of a child.
pub(crate) enum ParentTest {
    Reject,
    /// Accepted; carries the rooted certificate when it was computed.
    Accept(Option<Vec<u64>>),
}

/// Is `new` (which must have minimum degree) in the canonical deletion orbit of `g`?
pub(crate) fn parent_test(g: &Graph, new: usize, min_deg_count: usize) -> ParentTest {
    if min_deg_count == 1 {
        return ParentTest::Accept(None);
    }
    let cells = equitable_cells(g, &degree_cells(g));
    let first = &cells[0];
    if !first.contains(&new) {
        return ParentTest::Reject;
    }
    if first.len() == 1 {
        return ParentTest::Accept(None);
    }
    let mine = rooted_certificate(g, new);
    for &x in first {
        if x != new && rooted_certificate(g, x) > mine {
            return ParentTest::Reject;
        }
    }
    ParentTest::Accept(Some(mine))
}

/// Upper bound on the final edge count reachable from a node of order `k` with `e` edges.
pub(crate) fn completion_bound(n: usize, k: usize, e: u64) -> u64 {
    let mut cur = e;
    for m in k..n {
        let mut next = mantel_bound(m + 1).min(cur + m as u64);
        if m >= 2 {
            next = next.min(cur * (m as u64 + 1) / (m as u64 - 1));
        }
        cur = next;
    }
    cur
}

fn independence_number(rows: &[u64], cand: u64) -> u32 {
    if cand == 0 {
        return 0;
    }
    let v = cand.trailing_zeros() as usize;
    let rest = cand & !(1 << v);
    let with = 1 + independence_number(rows, rest & !rows[v]);
    if rows[v] & rest == 0 {
        return with;
    }
    with.max(independence_number(rows, rest))
}

/// Calls `emit` for each independent set of size in `lo..=hi` inside `cand`, in increasing
/// lexicographic order of members.
fn independent_sets(
    rows: &[u64],
    cand: u64,
    cur: u64,
    size: u32,
    lo: u32,
    hi: u32,
    emit: &mut impl FnMut(u64),
) {
    if size >= lo {
        emit(cur);
    }
    if size == hi || size + cand.count_ones() < lo {
        return;
    }
    for v in BitIter(cand) {
        let higher = if v == 63 { 0 } else { !0u64 << (v + 1) };
        independent_sets(
            rows,
            cand & higher & !rows[v],
            cur | 1 << v,
            size + 1,
            lo,
            hi,
            emit,
        );
    }
}

/// Walks the augmentation tree below one node down to order `n`.
pub(crate) struct Walker<'a, V: FnMut(&Graph) -> Option<u64>> {
    pub n: usize,
    /// Order at which nodes are handed to the visitor instead of expanded.
    pub stop: usize,
    /// Leaves with fewer edges are pruned; raised by the visitor's return value.
    pub min_edges: u64,
    pub nodes: u64,
    pub visit: &'a mut V,
}

impl<V: FnMut(&Graph) -> Option<u64>> Walker<'_, V> {
    pub fn descend(&mut self, g: &Graph) {
        self.nodes += 1;
        let k = g.n();
        if k == self.stop {
            if let Some(raise) = (self.visit)(g) {
                self.min_edges = self.min_edges.max(raise);
            }
            return;
        }
        let rows = g.small_rows().expect("augmentation limited to 64 vertices");
        let e = g.edge_count() as u64;
        if self.min_edges > 0 {
            let alpha = independence_number(&rows, full_mask(k)) as u64;
            let direct = e + (self.n - k) as u64 * alpha + mantel_bound(self.n - k);
            if direct.min(completion_bound(self.n, k, e)) < self.min_edges {
                return;
            }
        }
        for child in self.children(g, &rows, e) {
            self.descend(&child);
        }
    }

    fn children(&self, g: &Graph, rows: &[u64], e: u64) -> Vec<Graph> {
        let k = g.n();
        let deg: Vec<u32> = rows.iter().map(|r| r.count_ones()).collect();
        let min_deg = deg.iter().copied().min().unwrap_or(0);
        let hi = if k == 0 {
            0
        } else {
            (min_deg + 1).min(k as u32)
        };
        let mut lo = 0u32;
        if self.min_edges > 0 {
            while lo <= hi && completion_bound(self.n, k + 1, e + lo as u64) < self.min_edges {
                lo += 1;
            }
        }
        if lo > hi {
            return Vec::new();
        }
        let dedup = k > 1 && !is_rigid(g);
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut out = Vec::new();
        let mut child_rows = rows.to_vec();
        child_rows.push(0);
        independent_sets(rows, full_mask(k), 0, 0, lo, hi, &mut |s| {
            let size = s.count_ones();
            // new vertex must have minimum degree in the child
            let mut min_count = 1;
            for (v, &dv) in deg.iter().enumerate() {
                let d = dv + (s >> v & 1) as u32;
                if d < size {
                    return;
                }
                if d == size {
                    min_count += 1;
                }
            }
            for (v, r) in child_rows.iter_mut().enumerate().take(k) {
                *r = rows[v] | ((s >> v & 1) << k);
            }
            child_rows[k] = s;
            let child = Graph::from_small_rows(&child_rows);
            match parent_test(&child, k, min_count) {
                ParentTest::Reject => {}
                ParentTest::Accept(cert) => {
                    if dedup {
                        let key = cert.unwrap_or_else(|| rooted_certificate(&child, k));
                        if !seen.insert(key) {
                            return;
                        }
                    }
                    out.push(child);
                }
            }
        });
        out
    }
}

fn full_mask(k: usize) -> u64 {
    if k == 64 {
        !0
    } else {
        (1u64 << k) - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn completion_bound_is_admissible_for_turan() {
        // T2(n) minus its min-degree vertex is T2(n-1): chain of Turán graphs
        for n in 3..=13usize {
            for k in 2..n {
                let e = mantel_bound(k);
                assert!(completion_bound(n, k, e) >= mantel_bound(n), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn independent_set_enumeration() {
        // C5 rows
        let rows: Vec<u64> = (0..5)
            .map(|v| 1 << ((v + 1) % 5) | 1 << ((v + 4) % 5))
            .collect();
        let mut all = Vec::new();
        independent_sets(&rows, 0b11111, 0, 0, 0, 5, &mut |s| all.push(s));
        // empty, 5 singletons, 5 non-adjacent pairs
        assert_eq!(all.len(), 11);
        assert_eq!(independence_number(&rows, 0b11111), 2);
    }
}
