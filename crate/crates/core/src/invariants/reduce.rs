//! Dominated-vertex reduction.
//!
//! A vertex `u` whose neighbourhood is contained in that of a non-adjacent vertex `v` can always
//! copy `v`'s colour (or image under a homomorphism), so it may be dropped for both colouring and
//! homomorphism questions and restored afterwards.

use crate::bitset::{VertexSet, WORD};
use crate::graph::Graph;

pub(crate) struct Reduction {
    pub core: Graph,
    /// Original index of each core vertex.
    pub kept: Vec<usize>,
    /// `(removed, dominator)` in removal order, original indices.
    pub removed: Vec<(usize, usize)>,
}

impl Reduction {
    /// Lifts a labelling of the core to the whole graph.
    pub fn lift(&self, n: usize, core_values: &[usize]) -> Vec<usize> {
        let mut out = vec![usize::MAX; n];
        for (i, &v) in self.kept.iter().enumerate() {
            out[v] = core_values[i];
        }
        for &(u, dom) in self.removed.iter().rev() {
            out[u] = out[dom];
        }
        out
    }
}

pub(crate) fn reduce_dominated(g: &Graph) -> Reduction {
    let n = g.n();
    let mut present = VertexSet::full(n);
    let mut removed = Vec::new();
    let masked_subset = |u: usize, v: usize, present: &VertexSet| {
        g.row(u)
            .iter()
            .zip(g.row(v))
            .zip(present.words())
            .all(|((a, b), p)| a & p & !b == 0)
    };
    loop {
        let mut changed = false;
        for u in 0..n {
            if !present.contains(u) {
                continue;
            }
            let dom = (0..n).find(|&v| {
                v != u
                    && present.contains(v)
                    && g.row(u)[v / WORD] >> (v % WORD) & 1 == 0
                    && masked_subset(u, v, &present)
            });
            if let Some(v) = dom {
                present.remove(u);
                removed.push((u, v));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let core = g.induced_subgraph(&present).expect("same universe");
    Reduction {
        core,
        kept: present.to_vec(),
        removed,
    }
}
