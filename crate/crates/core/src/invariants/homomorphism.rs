//! Homomorphisms into the 5-cycle, i.e. embeddings into a blow-up of C5.

use super::coloring::COLORING_LIMIT;
use super::cycles::{find_triangle, is_bipartite, BipartiteCheck};
use super::reduce::reduce_dominated;
use crate::bitset::BitIter;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest reduced core the backtracking search accepts.
pub const HOM_LIMIT: usize = COLORING_LIMIT;

/// Images adjacent to each vertex of `0-1-2-3-4-0`, as 5-bit masks.
const C5_NBRS: [u8; 5] = [0b10010, 0b00101, 0b01010, 0b10100, 0b01001];

/// A map `V(G) -> Z_5` sending edges to edges of C5, or `None` if none exists.
pub fn c5_homomorphism(g: &Graph) -> Result<Option<Vec<usize>>> {
    if let BipartiteCheck::Bipartite { right, .. } = is_bipartite(g) {
        let mut map = vec![0; g.n()];
        for v in right {
            map[v] = 1;
        }
        return Ok(Some(map));
    }
    if find_triangle(g).is_some() {
        return Ok(None);
    }
    let red = reduce_dominated(g);
    let rows = red.core.small_rows().ok_or(Error::Capacity {
        what: "c5_homomorphism",
        limit: HOM_LIMIT,
        best_known: None,
    })?;
    let m = rows.len();
    let mut map = vec![usize::MAX; m];
    let mut domains = vec![0b11111u8; m];
    // fix the first vertex's image: C5 is vertex-transitive
    domains[0] = 1;
    if extend(&rows, &mut map, &mut domains) {
        Ok(Some(red.lift(g.n(), &map)))
    } else {
        Ok(None)
    }
}

fn extend(rows: &[u64], map: &mut [usize], domains: &mut [u8]) -> bool {
    let Some(v) = (0..rows.len())
        .filter(|&v| map[v] == usize::MAX)
        .min_by_key(|&v| {
            (
                domains[v].count_ones(),
                std::cmp::Reverse((rows[v]).count_ones()),
                v,
            )
        })
    else {
        return true;
    };
    let dom = domains[v];
    for img in (0..5).filter(|&i| dom >> i & 1 == 1) {
        let saved: Vec<(usize, u8)> = BitIter(rows[v]).map(|u| (u, domains[u])).collect();
        map[v] = img;
        let mut ok = true;
        for u in BitIter(rows[v]) {
            domains[u] &= C5_NBRS[img];
            if domains[u] == 0 {
                ok = false;
            }
        }
        if ok && extend(rows, map, domains) {
            return true;
        }
        for (u, d) in saved {
            domains[u] = d;
        }
        map[v] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete_bipartite, cycle, grotzsch, h_n, BlowupSpec};
    use crate::graph::blow_up;
    use crate::invariants::verify::verify_c5hom;

    fn has_hom(g: &Graph) -> bool {
        match c5_homomorphism(g).unwrap() {
            Some(map) => {
                verify_c5hom(g, &map).unwrap();
                true
            }
            None => false,
        }
    }

    #[test]
    fn examples() {
        assert!(has_hom(&cycle(5).unwrap()));
        assert!(has_hom(&h_n(30).unwrap()));
        let spec = BlowupSpec::new(cycle(5).unwrap(), vec![3, 1, 2, 5, 4]).unwrap();
        assert!(has_hom(&blow_up(&spec)));
        assert!(!has_hom(&grotzsch()));
        assert!(has_hom(&complete_bipartite(3, 7)));
        assert!(!has_hom(&cycle(3).unwrap()));
        // C7 maps onto C5 (odd cycles of length >= 5 do)
        assert!(has_hom(&cycle(7).unwrap()));
        assert!(has_hom(&cycle(9).unwrap()));
    }
}
