//! Procedural structure results: greedy bipartization by low-degree deletion, the dense
//! triangle-free classifier, the ν = 3 classifier, and the transversal split `T_X / T_Y`.

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::bounds::Rational;
use crate::canon::is_isomorphic;
use crate::constructions::cycle;
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::invariants::{
    c5_homomorphism, find_triangle, is_bipartite, max_matching, min_vertex_cover,
    shortest_odd_cycle, BipartiteCheck, Certificate,
};

/// Which below-threshold vertex the deletion procedure removes when several qualify.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeletionPolicy {
    /// Smallest current degree, lowest index on ties.
    #[default]
    MinDegree,
    /// Lowest index among qualifying vertices.
    LowestIndex,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeletionStep {
    pub vertex: usize,
    /// Degree in the graph remaining just before this deletion.
    pub degree: usize,
    /// Degree in the input graph.
    pub original_degree: usize,
    /// Order of the remaining graph just before this deletion.
    pub order: usize,
    /// `3·order/8`.
    pub threshold: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ResidualClass {
    Bipartite,
    C5BlowupSubgraph,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartizationTrace {
    pub n: usize,
    pub policy: DeletionPolicy,
    pub deleted: Vec<DeletionStep>,
    /// Original indices of the residual vertices, increasing.
    pub residual_vertices: Vec<usize>,
    pub residual: Graph,
    pub residual_class: ResidualClass,
    /// Bipartition or C5 map of the residual, in residual indices.
    pub residual_certificate: Option<Certificate>,
}

impl BipartizationTrace {
    pub fn deleted_vertices(&self) -> Vec<usize> {
        self.deleted.iter().map(|s| s.vertex).collect()
    }
}

/// `8·deg <= 3·order`.
fn below_threshold(deg: usize, order: usize) -> bool {
    8 * deg <= 3 * order
}

pub fn greedy_bipartization(g: &Graph) -> Result<BipartizationTrace> {
    greedy_bipartization_with(g, DeletionPolicy::default())
}

/// Deletes vertices of current degree at most `3/8` of the current order until none remains.
pub fn greedy_bipartization_with(g: &Graph, policy: DeletionPolicy) -> Result<BipartizationTrace> {
    let n = g.n();
    let original = g.degrees();
    let mut alive = VertexSet::full(n);
    let mut deg = original.clone();
    let mut deleted = Vec::new();
    loop {
        let order = alive.len();
        let qualifying = alive.iter().filter(|&v| below_threshold(deg[v], order));
        let pick = match policy {
            DeletionPolicy::MinDegree => qualifying.min_by_key(|&v| (deg[v], v)),
            DeletionPolicy::LowestIndex => qualifying.min(),
        };
        let Some(v) = pick else { break };
        deleted.push(DeletionStep {
            vertex: v,
            degree: deg[v],
            original_degree: original[v],
            order,
            threshold: Rational::new(3 * order as i128, 8),
        });
        alive.remove(v);
        for u in g.neighbors(v) {
            deg[u] -= 1;
        }
    }
    let residual = g.induced_subgraph(&alive)?;
    let (residual_class, residual_certificate) = classify_residual(&residual)?;
    Ok(BipartizationTrace {
        n,
        policy,
        deleted,
        residual_vertices: alive.to_vec(),
        residual,
        residual_class,
        residual_certificate,
    })
}

fn classify_residual(h: &Graph) -> Result<(ResidualClass, Option<Certificate>)> {
    let check = is_bipartite(h);
    if check.is_bipartite() {
        return Ok((ResidualClass::Bipartite, Some(check.certificate())));
    }
    Ok(match c5_homomorphism(h)? {
        Some(map) => (
            ResidualClass::C5BlowupSubgraph,
            Some(Certificate::C5Hom { map }),
        ),
        None => (ResidualClass::Other, None),
    })
}

/// Both sides of `(n-|S|-4)²/4 + Σ_{v∈S} deg_G(v) <= (n-4)²/4`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSumCheck {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// Evaluates the degree-sum inequality for a subset `s` of the trace's deleted vertices.
pub fn check_degree_sum_inequality(
    trace: &BipartizationTrace,
    s: &[usize],
) -> Result<DegreeSumCheck> {
    let mut degree_sum: i128 = 0;
    let mut seen = Vec::with_capacity(s.len());
    for &v in s {
        let step = trace
            .deleted
            .iter()
            .find(|st| st.vertex == v)
            .ok_or_else(|| domain(format!("vertex {v} was not deleted by the trace")))?;
        if seen.contains(&v) {
            return Err(domain(format!("vertex {v} listed twice")));
        }
        seen.push(v);
        degree_sum += step.original_degree as i128;
    }
    let n = trace.n as i128;
    let k = s.len() as i128;
    let lhs = Rational::new((n - k - 4).pow(2), 4) + Rational::from_integer(degree_sum);
    let rhs = Rational::new((n - 4).pow(2), 4);
    Ok(DegreeSumCheck {
        holds: lhs <= rhs,
        lhs,
        rhs,
    })
}

/// Structural verdicts with witnesses in the input graph's labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ClassifierVerdict {
    /// The graph is a 7-cycle; vertices in cyclic order.
    SevenCycle {
        cycle: Vec<usize>,
    },
    /// A 5-cycle and a vertex-disjoint star `K_{1,r}` covering all `r + 6` vertices.
    CycleAndStar {
        cycle: Vec<usize>,
        center: usize,
        leaves: Vec<usize>,
        r: usize,
    },
    Bipartite {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// Classes `D1..D5` with all edges between cyclically consecutive classes.
    C5Blowup {
        parts: [Vec<usize>; 5],
    },
    Neither,
}

/// For triangle-free `g`: a bipartition, or a partition into five classes exhibiting `g` as a
/// subgraph of a C5 blow-up, or `Neither`.
pub fn classify_c5_structure(g: &Graph) -> Result<ClassifierVerdict> {
    if let Some(t) = find_triangle(g) {
        return Err(Error::Precondition(format!(
            "graph contains the triangle {t:?}"
        )));
    }
    if let BipartiteCheck::Bipartite { left, right } = is_bipartite(g) {
        return Ok(ClassifierVerdict::Bipartite { left, right });
    }
    Ok(match c5_homomorphism(g)? {
        Some(map) => {
            let mut parts: [Vec<usize>; 5] = Default::default();
            for (v, &i) in map.iter().enumerate() {
                parts[i].push(v);
            }
            ClassifierVerdict::C5Blowup { parts }
        }
        None => ClassifierVerdict::Neither,
    })
}

/// Structure of a triangle-free graph without isolated vertices with `ν = 3` and `τ >= 4`: either a
/// 7-cycle, or a 5-cycle plus a disjoint spanning star on the remaining vertices.
pub fn classify_nu3(h: &Graph) -> Result<ClassifierVerdict> {
    if let Some(t) = find_triangle(h) {
        return Err(Error::Precondition(format!(
            "triangle-free: found triangle {t:?}"
        )));
    }
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) == 0) {
        return Err(Error::Precondition(format!(
            "no isolated vertices: vertex {v} is isolated"
        )));
    }
    let nu = max_matching(h).nu;
    if nu != 3 {
        return Err(Error::Precondition(format!(
            "ν = 3: matching number is {nu}"
        )));
    }
    let tau = min_vertex_cover(h)?.tau;
    if tau < 4 {
        return Err(Error::Precondition(format!(
            "τ >= 4: covering number is {tau}"
        )));
    }

    let shortest = shortest_odd_cycle(h, &VertexSet::empty(h.n()))
        .ok_or_else(|| Error::Internal("τ > ν but no odd cycle".into()))?;
    if shortest.len() == 7 && h.n() == 7 && is_isomorphic(h, &cycle(7)?) {
        return Ok(ClassifierVerdict::SevenCycle { cycle: shortest });
    }
    let mut candidates = Vec::new();
    if shortest.len() == 5 {
        candidates.push(shortest);
    }
    candidates.extend(five_cycles(h));
    for c in candidates {
        if let Some((center, leaves)) = spanning_star_outside(h, &c) {
            let r = leaves.len();
            return Ok(ClassifierVerdict::CycleAndStar {
                cycle: c,
                center,
                leaves,
                r,
            });
        }
    }
    Err(Error::Internal(format!(
        "no 7-cycle or 5-cycle plus spanning star in {}",
        crate::graph6::to_graph6(h)
    )))
}

/// Every 5-cycle once, as vertex lists starting at their smallest vertex.
fn five_cycles(h: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for a in 0..h.n() {
        for b in h.neighbors(a).filter(|&b| b > a) {
            for c in h.neighbors(b).filter(|&c| c > a && c != b) {
                for d in h.neighbors(c).filter(|&d| d > a && d != b) {
                    for e in h
                        .neighbors(d)
                        .filter(|&e| e > b && e != c && h.has_edge(e, a))
                    {
                        // e > b picks one of the two orientations
                        out.push(vec![a, b, c, d, e]);
                    }
                }
            }
        }
    }
    out
}

/// A vertex outside `c` adjacent to every other vertex outside `c`, with those vertices.
fn spanning_star_outside(h: &Graph, c: &[usize]) -> Option<(usize, Vec<usize>)> {
    let rest: Vec<usize> = (0..h.n()).filter(|v| !c.contains(v)).collect();
    if rest.len() < 2 {
        return None;
    }
    rest.iter().find_map(|&center| {
        let leaves: Vec<usize> = rest.iter().copied().filter(|&v| v != center).collect();
        leaves
            .iter()
            .all(|&l| h.has_edge(center, l))
            .then_some((center, leaves))
    })
}

/// Checks a verdict's witness against `g` by direct adjacency queries.
pub fn verify_verdict(g: &Graph, verdict: &ClassifierVerdict) -> std::result::Result<(), String> {
    use crate::invariants::verify::{verify_bipartition, verify_c5hom, verify_odd_cycle};
    match verdict {
        ClassifierVerdict::SevenCycle { cycle } => {
            if cycle.len() != 7 || g.n() != 7 || g.edge_count() != 7 {
                return Err("not a 7-cycle".into());
            }
            verify_odd_cycle(g, cycle)
        }
        ClassifierVerdict::CycleAndStar {
            cycle,
            center,
            leaves,
            r,
        } => {
            if cycle.len() != 5 || leaves.len() != *r || *r < 1 || g.n() != r + 6 {
                return Err(format!("sizes do not give |V| = r + 6 with r = {r}"));
            }
            verify_odd_cycle(g, cycle)?;
            let mut all: Vec<usize> = cycle
                .iter()
                .chain(leaves)
                .copied()
                .chain([*center])
                .collect();
            all.sort_unstable();
            all.dedup();
            if all.len() != g.n() {
                return Err("cycle and star overlap or miss vertices".into());
            }
            match leaves.iter().find(|&&l| !g.has_edge(*center, l)) {
                Some(l) => Err(format!("leaf {l} not adjacent to centre {center}")),
                None => Ok(()),
            }
        }
        ClassifierVerdict::Bipartite { left, right } => verify_bipartition(g, left, right),
        ClassifierVerdict::C5Blowup { parts } => {
            let mut map = vec![usize::MAX; g.n()];
            for (i, p) in parts.iter().enumerate() {
                for &v in p {
                    if v >= g.n() || map[v] != usize::MAX {
                        return Err(format!("vertex {v} misplaced"));
                    }
                    map[v] = i;
                }
            }
            if map.contains(&usize::MAX) {
                return Err("parts do not cover every vertex".into());
            }
            verify_c5hom(g, &map)
        }
        ClassifierVerdict::Neither => Ok(()),
    }
}

/// Splits a transversal `T` of a bipartite `G - T = (X, Y)`: a vertex goes to `T_X` when it has at
/// least as many neighbours in `Y` as in `X`, otherwise to `T_Y`.
pub fn partition_t(
    g: &Graph,
    t: &VertexSet,
    x: &VertexSet,
    y: &VertexSet,
) -> Result<(VertexSet, VertexSet)> {
    let n = g.n();
    if [t, x, y].iter().any(|s| s.universe() != n) {
        return Err(domain("vertex sets over a different vertex count"));
    }
    if !t.is_disjoint(x) || !t.is_disjoint(y) || !x.is_disjoint(y) {
        return Err(domain("T, X, Y must be pairwise disjoint"));
    }
    if t.union(x).union(y).len() != n {
        return Err(domain("T ∪ X ∪ Y must be all of V(G)"));
    }
    for side in [x, y] {
        for u in side.iter() {
            if g.deg_into(u, side)? > 0 {
                return Err(domain(format!(
                    "vertex {u} has a neighbour on its own side"
                )));
            }
        }
    }
    let mut tx = VertexSet::empty(n);
    let mut ty = VertexSet::empty(n);
    for v in t.iter() {
        if g.deg_into(v, y)? >= g.deg_into(v, x)? {
            tx.insert(v);
        } else {
            ty.insert(v);
        }
    }
    Ok((tx, ty))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{
        complete_bipartite, cycle, disjoint_union, g_family, grotzsch, h_n, star, GFamilyParams,
    };

    fn family_100() -> Graph {
        let p = GFamilyParams::new(100, [10, 10, 9, 9, 10], 47).unwrap();
        g_family(&p).unwrap()
    }

    #[test]
    fn family_member_loses_its_cycle_vertices() {
        let g = family_100();
        let trace = greedy_bipartization(&g).unwrap();
        let mut del = trace.deleted_vertices();
        del.sort_unstable();
        assert_eq!(del, vec![0, 1, 2, 3, 4]);
        assert_eq!(trace.residual_class, ResidualClass::Bipartite);
        for step in &trace.deleted {
            assert!(Rational::from_integer(step.degree as i128) <= step.threshold);
        }
        let r = &trace.residual;
        let order = r.n() as i128;
        assert!((0..r.n())
            .all(|v| Rational::from_integer(r.degree(v) as i128) > Rational::new(3 * order, 8)));
    }

    #[test]
    fn bipartite_inputs_stay_bipartite() {
        let t = greedy_bipartization(&complete_bipartite(3, 9)).unwrap();
        assert_eq!(t.residual_class, ResidualClass::Bipartite);
    }

    #[test]
    fn c5_is_not_touched() {
        let t = greedy_bipartization(&cycle(5).unwrap()).unwrap();
        assert!(t.deleted.is_empty());
        assert_eq!(t.residual_class, ResidualClass::C5BlowupSubgraph);
    }

    #[test]
    fn lowest_index_policy() {
        let g = h_n(100).unwrap();
        let t = greedy_bipartization_with(&g, DeletionPolicy::LowestIndex).unwrap();
        assert_eq!(t.residual_class, ResidualClass::Bipartite);
        assert!(t.deleted.len() <= 15);
    }

    #[test]
    fn degree_sum_inequality() {
        let g = family_100();
        let trace = greedy_bipartization(&g).unwrap();
        let empty = check_degree_sum_inequality(&trace, &[]).unwrap();
        assert_eq!(empty.lhs, empty.rhs);
        assert!(empty.holds);
        let four = check_degree_sum_inequality(&trace, &[0, 1, 2, 3]).unwrap();
        assert!(four.holds);
        assert!(check_degree_sum_inequality(&trace, &[50]).is_err());
        assert!(check_degree_sum_inequality(&trace, &[0, 0]).is_err());
    }

    #[test]
    fn nu3_examples() {
        let c7 = cycle(7).unwrap();
        let v = classify_nu3(&c7).unwrap();
        assert!(matches!(v, ClassifierVerdict::SevenCycle { .. }));
        verify_verdict(&c7, &v).unwrap();

        let g = disjoint_union(&cycle(5).unwrap(), &star(3).unwrap());
        let v = classify_nu3(&g).unwrap();
        assert!(matches!(v, ClassifierVerdict::CycleAndStar { r: 3, .. }));
        verify_verdict(&g, &v).unwrap();

        let g = disjoint_union(&cycle(5).unwrap(), &star(1).unwrap());
        let v = classify_nu3(&g).unwrap();
        assert!(matches!(v, ClassifierVerdict::CycleAndStar { r: 1, .. }));
    }

    #[test]
    fn nu3_preconditions() {
        let err = classify_nu3(&cycle(5).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Precondition(ref m) if m.contains("ν = 3")));
        let g = disjoint_union(&cycle(7).unwrap(), &Graph::empty(1));
        assert!(matches!(classify_nu3(&g), Err(Error::Precondition(m)) if m.contains("isolated")));
        assert!(matches!(
            classify_nu3(&crate::constructions::complete(3)),
            Err(Error::Precondition(_))
        ));
        // C6 has ν = 3 but τ = 3
        assert!(
            matches!(classify_nu3(&cycle(6).unwrap()), Err(Error::Precondition(m)) if m.contains("τ"))
        );
    }

    #[test]
    fn dense_classifier() {
        assert!(matches!(
            classify_c5_structure(&h_n(20).unwrap()).unwrap(),
            ClassifierVerdict::C5Blowup { .. }
        ));
        assert_eq!(
            classify_c5_structure(&grotzsch()).unwrap(),
            ClassifierVerdict::Neither
        );
        let k = complete_bipartite(2, 2);
        let v = classify_c5_structure(&k).unwrap();
        verify_verdict(&k, &v).unwrap();
    }

    #[test]
    fn t_partition() {
        let c5 = cycle(5).unwrap();
        let set = |vs: &[usize]| VertexSet::from_vertices(5, vs.iter().copied()).unwrap();
        // 0 ~ 1 and 0 ~ 4: one neighbour on each side, tie goes to T_X
        let (tx, ty) = partition_t(&c5, &set(&[0]), &set(&[1, 3]), &set(&[2, 4])).unwrap();
        assert_eq!((tx.to_vec(), ty.to_vec()), (vec![0], vec![]));

        // star centre with all neighbours in X goes to T_Y
        let s = star(3).unwrap();
        let set4 = |vs: &[usize]| VertexSet::from_vertices(4, vs.iter().copied()).unwrap();
        let (tx, ty) = partition_t(&s, &set4(&[0]), &set4(&[1, 2, 3]), &set4(&[])).unwrap();
        assert!(tx.is_empty());
        assert_eq!(ty.to_vec(), vec![0]);

        let (tx, ty) = partition_t(&s, &set4(&[]), &set4(&[0]), &set4(&[1, 2, 3])).unwrap();
        assert!(tx.is_empty() && ty.is_empty());
        assert!(partition_t(&s, &set4(&[]), &set4(&[0, 1]), &set4(&[2, 3])).is_err());
        assert!(partition_t(&s, &set4(&[0]), &set4(&[0, 1]), &set4(&[2, 3])).is_err());
    }
}
