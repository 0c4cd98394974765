//! Exact chromatic number by saturation-ordered backtracking.

use serde::{Deserialize, Serialize};

use super::reduce::reduce_dominated;
use super::Certificate;
use crate::bitset::BitIter;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest core (after dominated-vertex reduction) the exact solver accepts.
pub const COLORING_LIMIT: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub colors: Vec<usize>,
    /// Search nodes spent refuting `chi - 1` colours (0 when the clique bound settles it).
    pub refutation_nodes: u64,
}

impl ChromaticResult {
    pub fn certificate(&self) -> Certificate {
        Certificate::Coloring {
            colors: self.colors.clone(),
        }
    }
}

pub fn chromatic_number(g: &Graph) -> Result<ChromaticResult> {
    let red = reduce_dominated(g);
    let rows = red.core.small_rows().ok_or(Error::Capacity {
        what: "chromatic_number",
        limit: COLORING_LIMIT,
        best_known: None,
    })?;
    let m = rows.len();
    if m == 0 {
        return Ok(ChromaticResult {
            chi: 0,
            colors: Vec::new(),
            refutation_nodes: 0,
        });
    }
    let lb = greedy_clique(&rows).max(1);
    let (ub, mut best) = dsatur_greedy(&rows);
    let mut refutation_nodes = 0;
    let mut chi = ub;
    for k in lb..ub {
        let mut search = KColor::new(&rows, k);
        if search.run() {
            chi = k;
            best = search.colors;
            break;
        }
        refutation_nodes = search.nodes;
    }
    Ok(ChromaticResult {
        chi,
        colors: red.lift(g.n(), &best),
        refutation_nodes,
    })
}

/// Whether `g` has a proper colouring with at most `k` colours; returns one if so.
pub fn is_k_colorable(g: &Graph, k: usize) -> Result<Option<Vec<usize>>> {
    if g.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    let red = reduce_dominated(g);
    let rows = red.core.small_rows().ok_or(Error::Capacity {
        what: "is_k_colorable",
        limit: COLORING_LIMIT,
        best_known: None,
    })?;
    let mut search = KColor::new(&rows, k);
    Ok(search.run().then(|| red.lift(g.n(), &search.colors)))
}

fn greedy_clique(rows: &[u64]) -> usize {
    let mut best = 0;
    for v in 0..rows.len() {
        let mut cand = rows[v];
        let mut size = 1;
        while cand != 0 {
            let u = BitIter(cand)
                .max_by_key(|&u| ((rows[u] & cand).count_ones(), std::cmp::Reverse(u)))
                .unwrap();
            size += 1;
            cand &= rows[u];
        }
        best = best.max(size);
    }
    best
}

/// Greedy DSATUR colouring: `(colours used, colouring)`.
fn dsatur_greedy(rows: &[u64]) -> (usize, Vec<usize>) {
    let m = rows.len();
    let mut colors = vec![usize::MAX; m];
    let mut used = 0;
    for _ in 0..m {
        let v = (0..m)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| {
                let sat = saturation(rows[v], &colors);
                (sat, rows[v].count_ones(), std::cmp::Reverse(v))
            })
            .unwrap();
        let taken: u64 = BitIter(rows[v])
            .filter(|&u| colors[u] != usize::MAX)
            .fold(0, |acc, u| acc | 1 << colors[u]);
        let c = (!taken).trailing_zeros() as usize;
        colors[v] = c;
        used = used.max(c + 1);
    }
    (used, colors)
}

fn saturation(row: u64, colors: &[usize]) -> u32 {
    BitIter(row)
        .filter(|&u| colors[u] != usize::MAX)
        .fold(0u64, |acc, u| acc | 1 << colors[u])
        .count_ones()
}

struct KColor<'a> {
    rows: &'a [u64],
    k: usize,
    colors: Vec<usize>,
    /// Vertices holding each colour.
    classes: Vec<u64>,
    uncolored: u64,
    nodes: u64,
}

impl<'a> KColor<'a> {
    fn new(rows: &'a [u64], k: usize) -> Self {
        let m = rows.len();
        KColor {
            rows,
            k,
            colors: vec![usize::MAX; m],
            classes: vec![0; k],
            uncolored: if m == 64 { !0 } else { (1u64 << m) - 1 },
            nodes: 0,
        }
    }

    fn run(&mut self) -> bool {
        if self.k == 0 {
            return self.rows.is_empty();
        }
        self.search(0)
    }

    fn search(&mut self, used: usize) -> bool {
        self.nodes += 1;
        if self.uncolored == 0 {
            return true;
        }
        // most saturated, then most uncoloured neighbours, then lowest index
        let mut pick = usize::MAX;
        let mut key = (0u32, 0u32);
        for v in BitIter(self.uncolored) {
            let sat = self.classes[..used]
                .iter()
                .filter(|&&c| c & self.rows[v] != 0)
                .count() as u32;
            if sat as usize == self.k {
                return false;
            }
            let k = (sat, (self.rows[v] & self.uncolored).count_ones());
            if pick == usize::MAX || k > key {
                pick = v;
                key = k;
            }
        }
        let v = pick;
        self.uncolored &= !(1 << v);
        for c in 0..self.k.min(used + 1) {
            if self.classes[c] & self.rows[v] != 0 {
                continue;
            }
            self.classes[c] |= 1 << v;
            self.colors[v] = c;
            if self.search(used.max(c + 1)) {
                return true;
            }
            self.classes[c] &= !(1 << v);
        }
        self.colors[v] = usize::MAX;
        self.uncolored |= 1 << v;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, cycle, g_family_all, grotzsch, h0, turan_graph};
    use crate::invariants::verify::verify_coloring;

    fn chi(g: &Graph) -> usize {
        let r = chromatic_number(g).unwrap();
        verify_coloring(g, &r.colors, r.chi).unwrap();
        r.chi
    }

    #[test]
    fn examples() {
        assert_eq!(chi(&grotzsch()), 4);
        assert_eq!(chi(&cycle(5).unwrap()), 3);
        assert_eq!(chi(&turan_graph(9, 3).unwrap()), 3);
        assert_eq!(chi(&complete(6)), 6);
        assert_eq!(chi(&Graph::empty(3)), 1);
        assert_eq!(chi(&Graph::empty(0)), 0);
        for n in 5..=12 {
            assert_eq!(chi(&h0(n).unwrap()), 3);
        }
    }

    #[test]
    fn refutation_is_recorded() {
        let r = chromatic_number(&grotzsch()).unwrap();
        assert!(r.refutation_nodes > 0);
    }

    #[test]
    fn k_colorable() {
        assert!(is_k_colorable(&grotzsch(), 3).unwrap().is_none());
        let c = is_k_colorable(&grotzsch(), 4).unwrap().unwrap();
        verify_coloring(&grotzsch(), &c, 4).unwrap();
    }

    #[test]
    fn large_blowups_via_reduction() {
        for g in g_family_all(60).take(5) {
            assert_eq!(chi(&g), 4);
        }
        let big = Graph::from_edges(70, (0..70).map(|i| (i, (i + 1) % 70))).unwrap();
        assert!(matches!(
            chromatic_number(&big),
            Err(Error::Capacity { .. })
        ));
    }
}
