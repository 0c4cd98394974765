//! Brute-force oracles shared by the integration tests. Nothing here uses the crate's own solvers
//! or canonical labelling.
#![allow(dead_code)]

use tfx_core::Graph;

/// Upper-triangle adjacency bits in the order (0,1), (0,2), (1,2), (0,3), ...
pub fn edge_bits(g: &Graph) -> u64 {
    let mut bits = 0u64;
    let mut i = 0;
    for v in 1..g.n() {
        for u in 0..v {
            if g.has_edge(u, v) {
                bits |= 1 << i;
            }
            i += 1;
        }
    }
    bits
}

pub fn from_edge_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits >> i & 1 == 1 {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![p.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            out.push(p.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Minimum edge-bit code over all relabellings; equal iff isomorphic.
pub fn min_code(g: &Graph, perms: &[Vec<usize>]) -> u64 {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let n = g.n();
    let index = |u: usize, v: usize| {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        b * (b - 1) / 2 + a
    };
    let _ = n;
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | 1 << index(p[u], p[v]))
        })
        .min()
        .unwrap_or(0)
}

pub fn has_triangle(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|a| {
        (a + 1..n)
            .any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c)))
    })
}

/// Two-colourability by exhaustive assignment of the vertices outside `removed`.
pub fn bipartite_without(g: &Graph, removed: u64) -> bool {
    let n = g.n();
    let live: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    (0u64..1 << live.len()).any(|side| {
        let colour = |v: usize| live.iter().position(|&x| x == v).map(|i| side >> i & 1);
        g.edges().all(|(u, v)| match (colour(u), colour(v)) {
            (Some(a), Some(b)) => a != b,
            _ => true,
        })
    })
}

/// χ by trying every assignment with k colours for increasing k.
pub fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    for k in 1..=n {
        let mut colours = vec![0usize; n];
        loop {
            if g.edges().all(|(u, v)| colours[u] != colours[v]) {
                return k;
            }
            let mut i = 0;
            while i < n {
                colours[i] += 1;
                if colours[i] < k {
                    break;
                }
                colours[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    n
}

/// d₂ by scanning vertex subsets in order of size.
pub fn brute_d2(g: &Graph) -> usize {
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| bipartite_without(g, s))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn connected(g: &Graph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = 1u64;
    loop {
        let mut next = seen;
        for (u, v) in g.edges() {
            if seen >> u & 1 == 1 || seen >> v & 1 == 1 {
                next |= 1 << u | 1 << v;
            }
        }
        if next == seen {
            return seen.count_ones() as usize == n;
        }
        seen = next;
    }
}

/// Random graph with edge probability `p`, from a caller-supplied RNG.
pub fn random_graph(rng: &mut impl rand::Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random triangle-free graph: add random edges that close no triangle.
pub fn random_triangle_free(rng: &mut impl rand::Rng, n: usize, attempts: usize) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    let mut edges = Vec::new();
    if n >= 2 {
        for _ in 0..attempts {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u == v || adj[u][v] || (0..n).any(|w| adj[u][w] && adj[v][w]) {
                continue;
            }
            adj[u][v] = true;
            adj[v][u] = true;
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, edges).unwrap()
}
