//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine an ordered partition to an equitable one, pick the
//! first non-singleton cell, individualise each of its vertices in turn, recurse. Leaves are
//! discrete partitions; the canonical labelling is the leaf whose relabelled adjacency rows are
//! lexicographically greatest. Two kinds of automorphism prune sibling branches: transpositions of
//! twin vertices, and automorphisms discovered at leaves that fix the current path pointwise.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::{words_for, WORD};
use crate::graph::Graph;
use crate::graph6;

/// Graph6 text of the canonical representative of an isomorphism class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        graph6::from_graph6(&self.0).expect("canonical forms are valid graph6")
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

/// Vertices advertised as supported; larger graphs work but may be slow on regular inputs.
pub const CANON_LIMIT: usize = 128;

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    CanonicalForm(graph6::to_graph6(&g.permute(&pos)))
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n()
        && g.edge_count() == h.edge_count()
        && {
            let mut dg = g.degrees();
            let mut dh = h.degrees();
            dg.sort_unstable();
            dh.sort_unstable();
            dg == dh
        }
        && canonical_form(g) == canonical_form(h)
}

/// Canonical order of the vertices: `lab[i]` is the vertex placed at position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let part = Partition::unit(g.n());
    Canonizer::new(g).run(part).0
}

/// Canonical certificate of the pair `(g, root)`: equal for `(g, r)` and `(h, s)` iff some
/// isomorphism `g -> h` sends `r` to `s`.
pub(crate) fn rooted_certificate(g: &Graph, root: usize) -> Vec<u64> {
    let part = Partition::from_cells(
        g.n(),
        &[vec![root], (0..g.n()).filter(|&v| v != root).collect()],
    );
    Canonizer::new(g).run(part).1
}

/// Coarsest equitable refinement of `cells` (given in order), returned as ordered cells.
pub(crate) fn equitable_cells(g: &Graph, cells: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut part = Partition::from_cells(g.n(), cells);
    let splitters: Vec<usize> = part.cell_starts().collect();
    part.refine(g, splitters);
    part.cells()
}

/// Ordered partition of `0..n` into contiguous cells of `lab`.
#[derive(Clone, Debug)]
struct Partition {
    lab: Vec<usize>,
    /// Start position of the cell containing each position.
    start_of: Vec<usize>,
    /// Cell length, valid at cell start positions.
    len: Vec<usize>,
}

impl Partition {
    fn unit(n: usize) -> Self {
        Partition::from_cells(n, &[(0..n).collect()])
    }

    fn from_cells(n: usize, cells: &[Vec<usize>]) -> Self {
        let mut p = Partition {
            lab: Vec::with_capacity(n),
            start_of: vec![0; n],
            len: vec![0; n],
        };
        for cell in cells.iter().filter(|c| !c.is_empty()) {
            let s = p.lab.len();
            p.lab.extend_from_slice(cell);
            for i in s..p.lab.len() {
                p.start_of[i] = s;
            }
            p.len[s] = cell.len();
        }
        debug_assert_eq!(p.lab.len(), n);
        p
    }

    fn n(&self) -> usize {
        self.lab.len()
    }

    fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            (s < self.n()).then(|| {
                let cur = s;
                s += self.len[s];
                cur
            })
        })
    }

    fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_starts()
            .map(|s| self.lab[s..s + self.len[s]].to_vec())
            .collect()
    }

    fn first_nonsingleton(&self) -> Option<usize> {
        self.cell_starts().find(|&s| self.len[s] > 1)
    }

    /// Splits cells until every cell has uniform neighbour counts into every other cell.
    fn refine(&mut self, g: &Graph, initial: Vec<usize>) {
        let n = self.n();
        let stride = words_for(n);
        let mut queue: std::collections::VecDeque<usize> = initial.into();
        let mut queued = vec![false; n];
        for &s in &queue {
            queued[s] = true;
        }
        let mut mask = vec![0u64; stride];
        let mut counts = vec![0usize; n];
        let mut keyed: Vec<(usize, usize)> = Vec::with_capacity(n);

        while let Some(sp) = queue.pop_front() {
            queued[sp] = false;
            mask.iter_mut().for_each(|w| *w = 0);
            for &v in &self.lab[sp..sp + self.len[sp]] {
                mask[v / WORD] |= 1 << (v % WORD);
            }
            let mut s = 0;
            while s < n {
                let l = self.len[s];
                let next = s + l;
                if l > 1 {
                    let mut uniform = true;
                    for i in s..next {
                        let v = self.lab[i];
                        counts[i] = g
                            .row(v)
                            .iter()
                            .zip(&mask)
                            .map(|(a, b)| (a & b).count_ones() as usize)
                            .sum();
                        uniform &= counts[i] == counts[s];
                    }
                    if !uniform {
                        keyed.clear();
                        keyed.extend((s..next).map(|i| (counts[i], self.lab[i])));
                        keyed.sort_unstable();
                        for (k, &(_, v)) in keyed.iter().enumerate() {
                            self.lab[s + k] = v;
                        }
                        // fragment boundaries
                        let was_queued = queued[s];
                        let mut frags: Vec<(usize, usize)> = Vec::new();
                        let mut fs = s;
                        for k in 1..=l {
                            if k == l || keyed[k].0 != keyed[k - 1].0 {
                                frags.push((fs, s + k - fs));
                                fs = s + k;
                            }
                        }
                        for &(fs, fl) in &frags {
                            self.len[fs] = fl;
                            for i in fs..fs + fl {
                                self.start_of[i] = fs;
                            }
                        }
                        let largest = if was_queued {
                            usize::MAX
                        } else {
                            let mut best = 0;
                            for (i, f) in frags.iter().enumerate() {
                                if f.1 > frags[best].1 {
                                    best = i;
                                }
                            }
                            best
                        };
                        for (i, &(fs, _)) in frags.iter().enumerate() {
                            if i != largest && !queued[fs] {
                                queued[fs] = true;
                                queue.push_back(fs);
                            }
                        }
                    }
                }
                s = next;
            }
        }
    }

    /// Moves `v` (which must sit in the cell starting at `s`) to the front and splits it off.
    fn individualize(&mut self, s: usize, v: usize) {
        let l = self.len[s];
        let i = (s..s + l)
            .find(|&i| self.lab[i] == v)
            .expect("vertex in cell");
        self.lab.swap(s, i);
        self.len[s] = 1;
        self.len[s + 1] = l - 1;
        for j in s + 1..s + l {
            self.start_of[j] = s + 1;
        }
    }
}

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    stride: usize,
    twin_class: Vec<usize>,
    first: Option<(Vec<u64>, Vec<usize>)>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Canonizer<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Canonizer {
            g,
            n,
            stride: words_for(n),
            twin_class: twin_classes(g),
            first: None,
            best: None,
            generators: Vec::new(),
        }
    }

    fn run(mut self, mut part: Partition) -> (Vec<usize>, Vec<u64>) {
        let starts: Vec<usize> = part.cell_starts().collect();
        part.refine(self.g, starts);
        let mut path = Vec::new();
        self.search(part, &mut path);
        let (cert, lab) = self.best.take().unwrap_or_default();
        (lab, cert)
    }

    fn search(&mut self, part: Partition, path: &mut Vec<usize>) {
        let Some(s) = part.first_nonsingleton() else {
            self.leaf(&part.lab);
            return;
        };
        let mut cell: Vec<usize> = part.lab[s..s + part.len[s]].to_vec();
        cell.sort_unstable();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if explored
                .iter()
                .any(|&u| self.twin_class[u] == self.twin_class[v])
            {
                continue;
            }
            if !explored.is_empty() && self.same_orbit_as_explored(v, &explored, path) {
                continue;
            }
            let mut child = part.clone();
            child.individualize(s, v);
            child.refine(self.g, vec![s]);
            path.push(v);
            self.search(child, path);
            path.pop();
            explored.push(v);
        }
    }

    fn same_orbit_as_explored(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|gamma| path.iter().all(|&p| gamma[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut uf: Vec<usize> = (0..self.n).collect();
        fn find(uf: &mut [usize], mut x: usize) -> usize {
            while uf[x] != x {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            x
        }
        for gamma in fixing {
            for (x, &y) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut uf, x), find(&mut uf, y));
                if a != b {
                    uf[a] = b;
                }
            }
        }
        let rv = find(&mut uf, v);
        explored.iter().any(|&u| find(&mut uf, u) == rv)
    }

    fn certificate(&self, lab: &[usize]) -> Vec<u64> {
        let mut pos = vec![0; self.n];
        for (i, &v) in lab.iter().enumerate() {
            pos[v] = i;
        }
        let mut cert = vec![0u64; self.n * self.stride];
        for (i, &v) in lab.iter().enumerate() {
            for u in self.g.neighbors(v) {
                let j = pos[u];
                cert[i * self.stride + j / WORD] |= 1 << (WORD - 1 - j % WORD);
            }
        }
        cert
    }

    fn leaf(&mut self, lab: &[usize]) {
        let cert = self.certificate(lab);
        let mut automorphism_with = None;
        match &self.first {
            None => self.first = Some((cert.clone(), lab.to_vec())),
            Some((fc, fl)) if *fc == cert => automorphism_with = Some(fl.clone()),
            _ => {}
        }
        match &self.best {
            Some((bc, bl)) if *bc == cert => {
                if automorphism_with.is_none() {
                    automorphism_with = Some(bl.clone());
                }
            }
            Some((bc, _)) if *bc > cert => {}
            _ => self.best = Some((cert, lab.to_vec())),
        }
        if let Some(other) = automorphism_with {
            // gamma maps other[i] -> lab[i]
            let mut gamma = vec![0; self.n];
            for (i, &v) in other.iter().enumerate() {
                gamma[v] = lab[i];
            }
            if gamma.iter().enumerate().any(|(i, &x)| i != x) {
                self.generators.push(gamma);
            }
        }
    }
}

/// Groups vertices with identical open or closed neighbourhoods.
#[allow(clippy::needless_range_loop)]
fn twin_classes(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut class: Vec<usize> = (0..n).collect();
    for v in 0..n {
        if class[v] != v {
            continue;
        }
        for u in v + 1..n {
            if class[u] != u {
                continue;
            }
            let (rv, ru) = (g.row(v), g.row(u));
            let adjacent = g.has_edge(u, v);
            let twins = rv.iter().zip(ru).enumerate().all(|(i, (&a, &b))| {
                let mut diff = a ^ b;
                if adjacent {
                    for x in [u, v] {
                        if x / WORD == i {
                            diff ^= 1 << (x % WORD);
                        }
                    }
                }
                diff == 0
            });
            if twins {
                class[u] = v;
            }
        }
    }
    class
}
