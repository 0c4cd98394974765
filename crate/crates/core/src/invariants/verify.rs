//! Certificate checks that rely only on adjacency queries, sharing no code with the solvers.

use super::Certificate;
use crate::graph::Graph;

type Check = std::result::Result<(), String>;

fn in_range(g: &Graph, vs: &[usize]) -> Check {
    match vs.iter().find(|&&v| v >= g.n()) {
        Some(v) => Err(format!("vertex {v} out of range")),
        None => Ok(()),
    }
}

fn distinct(vs: &[usize]) -> Check {
    let mut s = vs.to_vec();
    s.sort_unstable();
    match s.windows(2).find(|w| w[0] == w[1]) {
        Some(w) => Err(format!("vertex {} repeated", w[0])),
        None => Ok(()),
    }
}

/// Proper colouring using at most `k` colours `0..k`.
pub fn verify_coloring(g: &Graph, colors: &[usize], k: usize) -> Check {
    if colors.len() != g.n() {
        return Err(format!(
            "colouring has {} entries for {} vertices",
            colors.len(),
            g.n()
        ));
    }
    if let Some(v) = (0..g.n()).find(|&v| colors[v] >= k) {
        return Err(format!("vertex {v} has colour {} >= {k}", colors[v]));
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) && colors[u] == colors[v] {
                return Err(format!("edge {u}-{v} monochromatic"));
            }
        }
    }
    Ok(())
}

pub fn verify_bipartition(g: &Graph, left: &[usize], right: &[usize]) -> Check {
    in_range(g, left)?;
    in_range(g, right)?;
    let mut all = [left, right].concat();
    distinct(&all)?;
    all.sort_unstable();
    if all.len() != g.n() {
        return Err("sides do not cover every vertex".into());
    }
    for side in [left, right] {
        for (i, &u) in side.iter().enumerate() {
            if let Some(&v) = side[i + 1..].iter().find(|&&v| g.has_edge(u, v)) {
                return Err(format!("edge {u}-{v} inside one side"));
            }
        }
    }
    Ok(())
}

/// `g - t` is bipartite, checked by propagating a 2-colouring.
pub fn verify_transversal(g: &Graph, t: &[usize]) -> Check {
    in_range(g, t)?;
    distinct(t)?;
    let n = g.n();
    let mut deleted = vec![false; n];
    for &v in t {
        deleted[v] = true;
    }
    let mut color = vec![2u8; n];
    for start in 0..n {
        if deleted[start] || color[start] != 2 {
            continue;
        }
        color[start] = 0;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..n {
                if deleted[v] || !g.has_edge(u, v) {
                    continue;
                }
                if color[v] == 2 {
                    color[v] = 1 - color[u];
                    stack.push(v);
                } else if color[v] == color[u] {
                    return Err(format!("odd cycle survives through edge {u}-{v}"));
                }
            }
        }
    }
    Ok(())
}

pub fn verify_matching(g: &Graph, edges: &[(usize, usize)]) -> Check {
    let ends: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    in_range(g, &ends)?;
    distinct(&ends)?;
    match edges.iter().find(|&&(u, v)| !g.has_edge(u, v)) {
        Some((u, v)) => Err(format!("{u}-{v} is not an edge")),
        None => Ok(()),
    }
}

pub fn verify_cover(g: &Graph, cover: &[usize]) -> Check {
    in_range(g, cover)?;
    distinct(cover)?;
    let mut inside = vec![false; g.n()];
    for &v in cover {
        inside[v] = true;
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) && !inside[u] && !inside[v] {
                return Err(format!("edge {u}-{v} uncovered"));
            }
        }
    }
    Ok(())
}

pub fn verify_c5hom(g: &Graph, map: &[usize]) -> Check {
    if map.len() != g.n() {
        return Err(format!(
            "map has {} entries for {} vertices",
            map.len(),
            g.n()
        ));
    }
    if let Some(v) = (0..g.n()).find(|&v| map[v] >= 5) {
        return Err(format!("vertex {v} maps outside C5"));
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                let d = (map[u] + 5 - map[v]) % 5;
                if d != 1 && d != 4 {
                    return Err(format!("edge {u}-{v} maps to {}-{}", map[u], map[v]));
                }
            }
        }
    }
    Ok(())
}

/// A simple cycle of odd length.
pub fn verify_odd_cycle(g: &Graph, cycle: &[usize]) -> Check {
    in_range(g, cycle)?;
    distinct(cycle)?;
    let k = cycle.len();
    if k < 3 || k.is_multiple_of(2) {
        return Err(format!("cycle length {k} is not odd and at least 3"));
    }
    for i in 0..k {
        let (u, v) = (cycle[i], cycle[(i + 1) % k]);
        if !g.has_edge(u, v) {
            return Err(format!("{u}-{v} is not an edge"));
        }
    }
    Ok(())
}

/// Checks the structural validity of any certificate (not its optimality).
pub fn verify_certificate(g: &Graph, cert: &Certificate) -> Check {
    match cert {
        Certificate::Coloring { colors } => {
            let k = colors.iter().max().map_or(0, |m| m + 1);
            verify_coloring(g, colors, k)
        }
        Certificate::Bipartition { left, right } => verify_bipartition(g, left, right),
        Certificate::Transversal { vertices } => verify_transversal(g, vertices),
        Certificate::Matching { edges } => verify_matching(g, edges),
        Certificate::Cover { vertices } => verify_cover(g, vertices),
        Certificate::C5Hom { map } => verify_c5hom(g, map),
        Certificate::OddCycle { cycle } => verify_odd_cycle(g, cycle),
        Certificate::Triangle {
            vertices: [a, b, c],
        } => {
            if g.has_edge(*a, *b) && g.has_edge(*b, *c) && g.has_edge(*a, *c) {
                Ok(())
            } else {
                Err("not a triangle".into())
            }
        }
    }
}
