use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::Certificate;
use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Three mutually adjacent vertices, lowest lexicographic triple first.
pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for u in 0..g.n() {
        for v in g.neighbors(u).filter(|&v| v > u) {
            let b = v % 64;
            let common = g
                .row(u)
                .iter()
                .zip(g.row(v))
                .enumerate()
                .skip(v / 64)
                .find_map(|(i, (x, y))| {
                    let above = if i > v / 64 {
                        !0
                    } else if b == 63 {
                        0
                    } else {
                        !0u64 << (b + 1)
                    };
                    let w = x & y & above;
                    (w != 0).then(|| i * 64 + w.trailing_zeros() as usize)
                });
            if let Some(w) = common {
                return Some([u, v, w]);
            }
        }
    }
    None
}

pub fn is_triangle_free(g: &Graph) -> bool {
    find_triangle(g).is_none()
}

/// Outcome of a 2-colouring attempt.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum BipartiteCheck {
    Bipartite { left: Vec<usize>, right: Vec<usize> },
    NonBipartite { odd_cycle: Vec<usize> },
}

impl BipartiteCheck {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteCheck::Bipartite { .. })
    }

    pub fn certificate(&self) -> Certificate {
        match self {
            BipartiteCheck::Bipartite { left, right } => Certificate::Bipartition {
                left: left.clone(),
                right: right.clone(),
            },
            BipartiteCheck::NonBipartite { odd_cycle } => Certificate::OddCycle {
                cycle: odd_cycle.clone(),
            },
        }
    }
}

/// BFS 2-colouring from the lowest-index vertex of each component.
pub fn is_bipartite(g: &Graph) -> BipartiteCheck {
    let n = g.n();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if side[v] == u8::MAX {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return BipartiteCheck::NonBipartite {
                        odd_cycle: tree_cycle(u, v, &parent, &depth),
                    };
                }
            }
        }
    }
    let (left, right) = (0..n).partition(|&v| side[v] == 0);
    BipartiteCheck::Bipartite { left, right }
}

/// Cycle formed by the tree paths from `u` and `v` to their common ancestor plus the edge `uv`.
fn tree_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// A shortest odd cycle of `g - avoid`, or `None` when that graph is bipartite.
pub fn shortest_odd_cycle(g: &Graph, avoid: &VertexSet) -> Option<Vec<usize>> {
    let n = g.n();
    let mut best: Option<Vec<usize>> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for s in (0..n).filter(|&s| !avoid.contains(s)) {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        queue.clear();
        queue.push_back(s);
        let limit = best.as_ref().map_or(usize::MAX, |c| c.len() / 2);
        'bfs: while let Some(u) = queue.pop_front() {
            if dist[u] >= limit {
                break;
            }
            for v in g.neighbors(u) {
                if avoid.contains(v) {
                    continue;
                }
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if dist[v] == dist[u] {
                    let c = tree_cycle(u, v, &parent, &dist);
                    if best.as_ref().is_none_or(|b| c.len() < b.len()) {
                        best = Some(c);
                    }
                    break 'bfs;
                }
            }
        }
        if best.as_ref().is_some_and(|c| c.len() == 3) {
            break;
        }
    }
    best
}

/// Length of a shortest odd cycle; `None` stands for infinity (bipartite).
pub fn odd_girth(g: &Graph) -> Option<usize> {
    shortest_odd_cycle(g, &VertexSet::empty(g.n())).map(|c| c.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, cycle, grotzsch, h0, turan_graph};
    use crate::invariants::verify::verify_certificate;

    #[test]
    fn triangles() {
        assert_eq!(find_triangle(&complete(3)), Some([0, 1, 2]));
        assert!(is_triangle_free(&grotzsch()));
        for n in 1..=40 {
            assert!(is_triangle_free(&turan_graph(n, 2).unwrap()));
        }
        let g = Graph::from_edges(130, [(5, 100), (100, 129), (5, 129)]).unwrap();
        assert_eq!(find_triangle(&g), Some([5, 100, 129]));
    }

    #[test]
    fn bipartite_examples() {
        let c4 = cycle(4).unwrap();
        assert_eq!(
            is_bipartite(&c4),
            BipartiteCheck::Bipartite {
                left: vec![0, 2],
                right: vec![1, 3]
            }
        );
        let c5 = cycle(5).unwrap();
        match is_bipartite(&c5) {
            BipartiteCheck::NonBipartite { odd_cycle } => assert_eq!(odd_cycle.len(), 5),
            other => panic!("{other:?}"),
        }
        for n in 5..=20 {
            let g = h0(n).unwrap();
            let check = is_bipartite(&g);
            assert!(!check.is_bipartite());
            verify_certificate(&g, &check.certificate()).unwrap();
        }
    }

    #[test]
    fn odd_girths() {
        assert_eq!(odd_girth(&cycle(7).unwrap()), Some(7));
        assert_eq!(odd_girth(&grotzsch()), Some(5));
        assert_eq!(odd_girth(&complete_bipartite(3, 3)), None);
        assert_eq!(odd_girth(&complete(4)), Some(3));
        // C9 with a chord making a 5-cycle
        let mut edges: Vec<_> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
        edges.push((0, 4));
        let g = Graph::from_edges(9, edges).unwrap();
        assert_eq!(odd_girth(&g), Some(5));
    }

    #[test]
    fn odd_cycle_avoiding() {
        let g = grotzsch();
        let avoid = VertexSet::from_vertices(11, [0]).unwrap();
        let c = shortest_odd_cycle(&g, &avoid).unwrap();
        assert!(!c.contains(&0));
        verify_certificate(&g, &Certificate::OddCycle { cycle: c }).unwrap();
    }
}
