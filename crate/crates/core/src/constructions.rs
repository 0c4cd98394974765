//! Generators for the named graphs and families.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::graph::{blow_up, Graph};

pub use crate::graph::BlowupSpec;

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).expect("valid edges")
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        .expect("valid edges")
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("valid edges")
}

/// The cycle `0-1-...-(k-1)-0`.
pub fn cycle(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(domain(format!("cycle length {k} below 3")));
    }
    Graph::from_edges(k, (0..k).map(|v| (v, (v + 1) % k)))
}

/// `K_{1,r}` with centre 0.
pub fn star(r: usize) -> Result<Graph> {
    if r < 1 {
        return Err(domain("star needs at least one leaf"));
    }
    Graph::from_edges(r + 1, (1..=r).map(|v| (0, v)))
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    g.disjoint_union(h)
}

/// Part sizes of `T_r(n)`, larger parts first. For `r > n` the trailing parts are empty.
pub fn turan_parts(n: usize, r: usize) -> Result<Vec<usize>> {
    if r < 1 {
        return Err(domain(format!("Turán graph needs r >= 1, got r = {r}")));
    }
    Ok((0..r).map(|i| n / r + usize::from(i < n % r)).collect())
}

pub fn turan_graph(n: usize, r: usize) -> Result<Graph> {
    let parts = turan_parts(n, r)?;
    Ok(blow_up(&BlowupSpec::new(complete(r), parts)?))
}

/// `t_r(n)`, the edge count of `T_r(n)`.
pub fn turan_edges(n: usize, r: usize) -> Result<u64> {
    let parts = turan_parts(n, r)?;
    let n = n as u64;
    let sq: u64 = parts.iter().map(|&p| (p as u64) * (p as u64)).sum();
    Ok((n * n - sq) / 2)
}

/// `T_2(n-1)` with the edge between the first vertices of the two parts subdivided by a new
/// vertex `n - 1`.
pub fn h0(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(domain(format!("H0 needs n >= 5, got {n}")));
    }
    let m = n - 1;
    let a = m.div_ceil(2);
    let (x, y, z) = (0, a, m);
    let edges = (0..a)
        .flat_map(|u| (a..m).map(move |v| (u, v)))
        .filter(|&e| e != (x, y))
        .chain([(x, z), (y, z)]);
    Graph::from_edges(n, edges)
}

/// Grötzsch graph: `u1..u5 = 0..4` on a 5-cycle, `v_i = 4 + i` adjacent to `u_{i-1}, u_{i+1}`,
/// and the hub `w = 10` adjacent to every `v_i`.
pub fn grotzsch() -> Graph {
    let mut edges = Vec::with_capacity(20);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, (i + 4) % 5));
        edges.push((5 + i, (i + 1) % 5));
        edges.push((5 + i, 10));
    }
    Graph::from_edges(11, edges).expect("valid edges")
}

/// Index of `u_i`, `v_i` (1-based `i`) and `w` in [`grotzsch`].
pub mod grotzsch_labels {
    pub const fn u(i: usize) -> usize {
        i - 1
    }
    pub const fn v(i: usize) -> usize {
        4 + i
    }
    pub const W: usize = 10;
}

/// Which floor/ceiling split of the blown-up classes a family member uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GVariant {
    /// `Σ|V_i| = ⌊(n-3)/2⌋`, `|W| = ⌈(n-7)/2⌉`.
    FloorV,
    /// `Σ|V_i| = ⌈(n-3)/2⌉`, `|W| = ⌊(n-7)/2⌋`.
    CeilV,
}

impl GVariant {
    /// `(Σ|V_i|, |W|)` for this split at order `n`, or `None` when `n < 7`.
    pub fn sizes(self, n: usize) -> Option<(usize, usize)> {
        if n < 7 {
            return None;
        }
        Some(match self {
            GVariant::FloorV => ((n - 3) / 2, (n - 7).div_ceil(2)),
            GVariant::CeilV => ((n - 3).div_ceil(2), (n - 7) / 2),
        })
    }
}

/// Parameters of one member of the Grötzsch blow-up family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GFamilyParams {
    pub n: usize,
    pub v_parts: [usize; 5],
    pub w_size: usize,
    pub variant: GVariant,
}

impl GFamilyParams {
    /// Validates the class sizes and determines which split they realise.
    pub fn new(n: usize, v_parts: [usize; 5], w_size: usize) -> Result<Self> {
        if v_parts.contains(&0) {
            return Err(domain(format!(
                "all five V-classes must be nonempty, got {v_parts:?}"
            )));
        }
        if w_size == 0 {
            return Err(domain("W must be nonempty"));
        }
        let s: usize = v_parts.iter().sum();
        if 5 + s + w_size != n {
            return Err(domain(format!("5 + {s} + {w_size} != n = {n}")));
        }
        let variant = [GVariant::FloorV, GVariant::CeilV]
            .into_iter()
            .find(|v| v.sizes(n) == Some((s, w_size)))
            .ok_or_else(|| {
                domain(format!(
                    "class sizes Σ|V_i| = {s}, |W| = {w_size} fit neither split at n = {n}"
                ))
            })?;
        Ok(GFamilyParams {
            n,
            v_parts,
            w_size,
            variant,
        })
    }

    pub fn blowup_spec(&self) -> BlowupSpec {
        let mut sizes = vec![1; 5];
        sizes.extend_from_slice(&self.v_parts);
        sizes.push(self.w_size);
        BlowupSpec::new(grotzsch(), sizes).expect("eleven sizes")
    }
}

/// The family member described by `params`: vertices `0..5` are `u1..u5`, then the blocks
/// `V1..V5`, then `W`.
pub fn g_family(params: &GFamilyParams) -> Result<Graph> {
    let checked = GFamilyParams::new(params.n, params.v_parts, params.w_size)?;
    if checked.variant != params.variant {
        return Err(domain(format!(
            "sizes realise {:?}, not the declared {:?}",
            checked.variant, params.variant
        )));
    }
    Ok(blow_up(&params.blowup_spec()))
}

/// Compositions of `total` into five positive parts, in colex order.
pub fn compositions5(total: usize) -> impl Iterator<Item = [usize; 5]> {
    // colex = lexicographic on the reversed tuple
    let mut out = Vec::new();
    if total >= 5 {
        for a5 in 1..=total - 4 {
            for a4 in 1..=total - a5 - 3 {
                for a3 in 1..=total - a5 - a4 - 2 {
                    for a2 in 1..=total - a5 - a4 - a3 - 1 {
                        let a1 = total - a5 - a4 - a3 - a2;
                        out.push([a1, a2, a3, a4, a5]);
                    }
                }
            }
        }
    }
    out.into_iter()
}

fn colex_key(c: &[usize; 5]) -> [usize; 5] {
    [c[4], c[3], c[2], c[1], c[0]]
}

/// Images of a composition under the ten symmetries of the Grötzsch graph (rotations and
/// reflections of the index cycle).
pub fn dihedral_images(c: &[usize; 5]) -> impl Iterator<Item = [usize; 5]> + '_ {
    (0..5).flat_map(move |r| {
        [false, true].into_iter().map(move |flip| {
            let mut out = [0; 5];
            for (i, slot) in out.iter_mut().enumerate() {
                let j = if flip { (5 + r - i) % 5 } else { (r + i) % 5 };
                *slot = c[j];
            }
            out
        })
    })
}

/// Admissible splits at order `n` (one split when both coincide).
pub fn g_variants(n: usize) -> Vec<GVariant> {
    let mut vs = vec![GVariant::FloorV];
    if GVariant::CeilV.sizes(n) != GVariant::FloorV.sizes(n) {
        vs.push(GVariant::CeilV);
    }
    vs
}

/// One parameter set per isomorphism class of `𝒢(n)`, compositions in colex order.
///
/// Members with all classes nonempty are isomorphic exactly when their compositions differ by a
/// symmetry of the Grötzsch graph, so each orbit keeps its colex-first composition.
pub fn g_family_members(n: usize) -> impl Iterator<Item = GFamilyParams> {
    g_variants(n).into_iter().flat_map(move |variant| {
        let (s, w) = variant.sizes(n).unwrap_or((0, 0));
        compositions5(if w == 0 { 0 } else { s })
            .filter(|c| dihedral_images(c).all(|img| colex_key(&img) >= colex_key(c)))
            .map(move |c| GFamilyParams {
                n,
                v_parts: c,
                w_size: w,
                variant,
            })
    })
}

/// Every member of `𝒢(n)` up to isomorphism.
pub fn g_family_all(n: usize) -> impl Iterator<Item = Graph> {
    g_family_members(n).map(|p| blow_up(&p.blowup_spec()))
}

/// C5 blow-up with part sizes `(4, 4, 4, ⌊n/2⌋-6, ⌈n/2⌉-6)`.
pub fn h_n_sizes(n: usize) -> Result<[usize; 5]> {
    if n < 14 {
        return Err(domain(format!("H_n needs n >= 14, got {n}")));
    }
    Ok([4, 4, 4, n / 2 - 6, n.div_ceil(2) - 6])
}

pub fn h_n(n: usize) -> Result<Graph> {
    let sizes = h_n_sizes(n)?;
    Ok(blow_up(&BlowupSpec::new(cycle(5)?, sizes.to_vec())?))
}
