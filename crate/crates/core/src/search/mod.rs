//! Isomorph-free enumeration of triangle-free graphs and exact maximum-edge search.
//!
//! Work is cut into subtree tokens at a fixed depth of the augmentation tree. Tokens are
//! independent; with the `parallel` feature they run on a rayon pool of `jobs` threads, otherwise
//! sequentially. Results are merged in token order and then sorted by canonical form, so output
//! does not depend on the worker count.

mod augment;
mod predicate;

use std::time::Instant;

use serde::{Deserialize, Serialize};

pub use augment::AUGMENT_MAX;
pub use predicate::{Atom, Predicate};

use crate::bounds::{chi4_bound, BoundId};
use crate::canon::{canonical_form, is_isomorphic, CanonicalForm};
use crate::constructions::{
    g_family, g_family_all, g_family_members, grotzsch, h0, h_n, turan_graph, GFamilyParams,
};
use crate::error::{domain, Error, Result};
use crate::graph::Graph;
use crate::graph6::{from_graph6, to_graph6};
use crate::invariants::{chromatic_number, is_triangle_free};
use augment::Walker;

/// Default largest order for full enumeration.
pub const DEFAULT_ENUMERATE_CEILING: usize = 11;
/// Default largest order for [`max_edges`].
pub const DEFAULT_MAX_EDGES_CEILING: usize = 13;

/// Knobs shared by every search entry point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub enumerate_ceiling: usize,
    pub max_edges_ceiling: usize,
    /// Worker threads; `1` runs sequentially.
    pub jobs: usize,
    /// Frontier depth for splitting; `None` picks one from `n`.
    pub split_depth: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            enumerate_ceiling: DEFAULT_ENUMERATE_CEILING,
            max_edges_ceiling: DEFAULT_MAX_EDGES_CEILING,
            jobs: 1,
            split_depth: None,
        }
    }
}

impl SearchConfig {
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    fn depth_for(&self, n: usize) -> usize {
        match self.split_depth {
            Some(d) => d.min(n.saturating_sub(1)),
            None if n >= 9 => 7,
            None => 0,
        }
    }
}

/// A resumable subtree of the augmentation tree: every descendant of `graph` of order `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrontierToken {
    pub depth: usize,
    /// Subtree root in graph6.
    pub graph: String,
}

impl FrontierToken {
    pub fn root(&self) -> Result<Graph> {
        from_graph6(&self.graph)
    }
}

fn check_order(
    n: usize,
    ceiling: usize,
    what: &'static str,
    best_known: Option<usize>,
) -> Result<()> {
    if n > ceiling.min(AUGMENT_MAX) {
        return Err(Error::Capacity {
            what,
            limit: ceiling.min(AUGMENT_MAX),
            best_known,
        });
    }
    Ok(())
}

/// Frontier of the tree at `depth`, plus the number of interior nodes walked to reach it.
fn frontier(n: usize, depth: usize, min_edges: u64) -> (Vec<Graph>, u64) {
    let mut roots = Vec::new();
    let mut visit = |g: &Graph| {
        roots.push(g.clone());
        None
    };
    let mut w = Walker {
        n,
        stop: depth,
        min_edges,
        nodes: 0,
        visit: &mut visit,
    };
    w.descend(&Graph::empty(0));
    let interior = w.nodes - roots.len() as u64;
    (roots, interior)
}

/// Splits the search for order-`n` graphs into subtree tokens at `depth`.
///
/// Running every token with [`run_token`] yields exactly the unsplit stream. `predicate` does not
/// influence the split; it is accepted so callers can keep tokens and filters together.
pub fn split_frontier(
    n: usize,
    _predicate: &Predicate,
    depth: usize,
) -> Result<Vec<FrontierToken>> {
    if depth >= n.max(1) {
        return Err(domain(format!("split depth {depth} must be below n = {n}")));
    }
    if n > AUGMENT_MAX {
        return Err(Error::Capacity {
            what: "split_frontier",
            limit: AUGMENT_MAX,
            best_known: None,
        });
    }
    let (roots, _) = frontier(n, depth, 0);
    Ok(roots
        .iter()
        .map(|g| FrontierToken {
            depth,
            graph: to_graph6(g),
        })
        .collect())
}

/// Every order-`n` graph below `token` satisfying `predicate`, in generation order.
pub fn run_token(token: &FrontierToken, n: usize, predicate: &Predicate) -> Result<Vec<Graph>> {
    let root = token.root()?;
    if root.n() > n || n > AUGMENT_MAX {
        return Err(domain("token root is larger than the target order"));
    }
    let mut out = Vec::new();
    let mut err = None;
    let mut visit = |g: &Graph| {
        match predicate.holds_on_triangle_free(g) {
            Ok(true) => out.push(g.clone()),
            Ok(false) => {}
            Err(e) => err = err.take().or(Some(e)),
        }
        None
    };
    Walker {
        n,
        stop: n,
        min_edges: 0,
        nodes: 0,
        visit: &mut visit,
    }
    .descend(&root);
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Applies `f` to every item, on `jobs` threads when the `parallel` feature is on.
fn map_parallel<T: Sync, R: Send>(
    items: &[T],
    jobs: usize,
    f: impl Fn(&T) -> R + Sync + Send,
) -> Vec<R> {
    #[cfg(feature = "parallel")]
    if jobs > 1 {
        use rayon::prelude::*;
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            return pool.install(|| items.par_iter().map(&f).collect());
        }
    }
    let _ = jobs;
    items.iter().map(f).collect()
}

/// Folds `f` over every triangle-free graph on `n` vertices satisfying `predicate`, one
/// representative per isomorphism class, in an unspecified but deterministic order.
///
/// Each subtree folds into its own accumulator starting from `init()`; the accumulators are
/// combined with `merge` in token order.
pub fn fold_triangle_free<A, I, F, M>(
    n: usize,
    predicate: &Predicate,
    config: &SearchConfig,
    init: I,
    fold: F,
    merge: M,
) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(A, &Graph) -> A + Sync + Send,
    M: Fn(A, A) -> A,
{
    check_order(n, config.enumerate_ceiling, "enumerate_triangle_free", None)?;
    let depth = config.depth_for(n);
    let (roots, _) = frontier(n, depth, 0);
    let parts = map_parallel(&roots, config.jobs, |root| -> Result<A> {
        let mut acc = Some(init());
        let mut err = None;
        let mut visit = |g: &Graph| {
            match predicate.holds_on_triangle_free(g) {
                Ok(true) => acc = acc.take().map(|a| fold(a, g)),
                Ok(false) => {}
                Err(e) => err = err.take().or(Some(e)),
            }
            None
        };
        Walker {
            n,
            stop: n,
            min_edges: 0,
            nodes: 0,
            visit: &mut visit,
        }
        .descend(root);
        match err {
            Some(e) => Err(e),
            None => Ok(acc.expect("accumulator present")),
        }
    });
    let mut total = init();
    for p in parts {
        total = merge(total, p?);
    }
    Ok(total)
}

/// Number of isomorphism classes of triangle-free graphs on `n` vertices satisfying `predicate`.
pub fn count_triangle_free(n: usize, predicate: &Predicate, config: &SearchConfig) -> Result<u64> {
    fold_triangle_free(n, predicate, config, || 0u64, |c, _| c + 1, |a, b| a + b)
}

/// One canonical representative per isomorphism class of triangle-free graphs on `n` vertices
/// satisfying `predicate`, sorted by canonical form.
pub fn enumerate_triangle_free(
    n: usize,
    predicate: &Predicate,
    config: &SearchConfig,
) -> Result<Vec<Graph>> {
    let mut forms = fold_triangle_free(
        n,
        predicate,
        config,
        Vec::new,
        |mut v, g| {
            v.push(canonical_form(g));
            v
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )?;
    forms.sort();
    Ok(forms.iter().map(CanonicalForm::to_graph).collect())
}

/// Exact maximum edge count over a predicate class, with every extremal class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxEdges {
    /// `None` when no graph on `n` vertices satisfies the predicate.
    pub max: Option<u64>,
    /// Canonical forms of all extremal classes, sorted.
    pub witnesses: Vec<CanonicalForm>,
    /// Order-`n` classes reached by the pruned search.
    pub classes_visited: u64,
    /// Augmentation tree nodes expanded.
    pub nodes: u64,
}

/// Edge count of the best known construction satisfying `predicate`, used as the initial
/// pruning threshold. Only graphs that actually satisfy the predicate count.
pub fn seed_lower_bound(n: usize, predicate: &Predicate) -> Result<Option<u64>> {
    let mut candidates = vec![turan_graph(n, 2)?];
    if n >= 5 {
        candidates.push(h0(n)?);
    }
    if n >= 11 {
        candidates.push(grotzsch().disjoint_union(&Graph::empty(n - 11)));
    }
    if n >= 12 {
        candidates.extend(g_family_all(n).take(1));
    }
    if n >= 14 {
        candidates.push(h_n(n)?);
    }
    let mut best = None;
    for g in candidates {
        if predicate.holds(&g)? {
            let e = g.edge_count() as u64;
            best = Some(best.map_or(e, |b: u64| b.max(e)));
        }
    }
    Ok(best)
}

/// Exact maximum number of edges of a triangle-free graph on `n` vertices satisfying `predicate`.
///
/// Branch and bound over the augmentation tree: a node is cut when even the most generous
/// completion cannot reach the best edge count seen in its subtree (or the seed construction).
pub fn max_edges(n: usize, predicate: &Predicate, config: &SearchConfig) -> Result<MaxEdges> {
    let seed = seed_lower_bound(n, predicate)?;
    check_order(
        n,
        config.max_edges_ceiling,
        "max_edges",
        seed.map(|s| s as usize),
    )?;
    let threshold = seed.unwrap_or(0);
    let depth = config.depth_for(n);
    let (roots, interior) = frontier(n, depth, threshold);

    struct Part {
        best: Option<u64>,
        witnesses: Vec<CanonicalForm>,
        visited: u64,
        nodes: u64,
    }
    let parts = map_parallel(&roots, config.jobs, |root| -> Result<Part> {
        let mut part = Part {
            best: None,
            witnesses: Vec::new(),
            visited: 0,
            nodes: 0,
        };
        let mut err = None;
        let mut visit = |g: &Graph| {
            part.visited += 1;
            let e = g.edge_count() as u64;
            if part.best.is_some_and(|b| e < b) {
                return None;
            }
            match predicate.holds_on_triangle_free(g) {
                Ok(true) => {
                    if part.best != Some(e) {
                        part.best = Some(e);
                        part.witnesses.clear();
                    }
                    part.witnesses.push(canonical_form(g));
                    Some(e)
                }
                Ok(false) => None,
                Err(e) => {
                    err = err.take().or(Some(e));
                    None
                }
            }
        };
        let mut w = Walker {
            n,
            stop: n,
            min_edges: threshold,
            nodes: 0,
            visit: &mut visit,
        };
        w.descend(root);
        let nodes = w.nodes;
        if let Some(e) = err {
            return Err(e);
        }
        part.nodes = nodes;
        Ok(part)
    });

    let mut result = MaxEdges {
        max: None,
        witnesses: Vec::new(),
        classes_visited: 0,
        nodes: interior,
    };
    for p in parts {
        let p = p?;
        result.classes_visited += p.visited;
        result.nodes += p.nodes;
        match (p.best, result.max) {
            (Some(b), Some(m)) if b < m => {}
            (Some(b), Some(m)) if b == m => result.witnesses.extend(p.witnesses),
            (Some(b), _) => {
                result.max = Some(b);
                result.witnesses = p.witnesses;
            }
            (None, _) => {}
        }
    }
    result.witnesses.sort();
    Ok(result)
}

/// Result of checking every Grötzsch blow-up family member over a range of orders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyCertification {
    pub members: usize,
    /// Members failing the edge count, triangle-freeness or χ = 4, as `n:graph6`.
    pub failures: Vec<String>,
}

/// Checks that every family member on `n` vertices, `n` in `range`, is triangle-free, 4-chromatic
/// and has exactly `chi4_bound(n)` edges. Members are checked on `jobs` threads.
pub fn certify_g_family(
    range: std::ops::RangeInclusive<usize>,
    jobs: usize,
) -> Result<FamilyCertification> {
    let params: Vec<GFamilyParams> = range.flat_map(g_family_members).collect();
    let outcomes = map_parallel(&params, jobs, |p| -> Result<Option<String>> {
        let g = g_family(p)?;
        let ok = g.edge_count() as u64 == chi4_bound(p.n)
            && is_triangle_free(&g)
            && chromatic_number(&g)?.chi == 4;
        Ok((!ok).then(|| format!("{}:{}", p.n, to_graph6(&g))))
    });
    let mut failures = Vec::new();
    for o in outcomes {
        failures.extend(o?);
    }
    Ok(FamilyCertification {
        members: params.len(),
        failures,
    })
}

/// Outcome of comparing a search result with a closed-form bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    BoundMetWithEquality,
    BoundStrict,
    BoundViolated,
    BoundNotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::BoundMetWithEquality => "bound-met-with-equality",
            Verdict::BoundStrict => "bound-strict",
            Verdict::BoundViolated => "bound-violated",
            Verdict::BoundNotApplicable => "bound-not-applicable",
        }
    }
}

/// A bound and its value at one order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundValue {
    pub id: BoundId,
    pub value: u64,
}

/// One search run, optionally compared with a bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: usize,
    pub predicate: Predicate,
    pub classes_visited: u64,
    pub max_edges: Option<u64>,
    /// Extremal classes in canonical graph6, sorted.
    pub witnesses: Vec<String>,
    pub bound: Option<BoundValue>,
    pub verdict: Option<Verdict>,
    /// Whether the witnesses match the known extremal family, where one is known.
    pub family_check: Option<bool>,
    pub wall_ms: f64,
    pub nodes: u64,
}

impl SearchReport {
    fn from_max_edges(n: usize, predicate: &Predicate, m: MaxEdges, started: Instant) -> Self {
        SearchReport {
            n,
            predicate: predicate.clone(),
            classes_visited: m.classes_visited,
            max_edges: m.max,
            witnesses: m.witnesses.iter().map(|c| c.as_str().to_string()).collect(),
            bound: None,
            verdict: None,
            family_check: None,
            wall_ms: started.elapsed().as_secs_f64() * 1e3,
            nodes: m.nodes,
        }
    }

    pub fn witness_graphs(&self) -> Result<Vec<Graph>> {
        self.witnesses.iter().map(|w| from_graph6(w)).collect()
    }
}

/// Runs [`max_edges`] and packages the outcome.
pub fn search_report(
    n: usize,
    predicate: &Predicate,
    config: &SearchConfig,
) -> Result<SearchReport> {
    let started = Instant::now();
    let m = max_edges(n, predicate, config)?;
    Ok(SearchReport::from_max_edges(n, predicate, m, started))
}

/// Hypothesis class of each bound. Brouwer's bound is only searched for `r = 2`.
pub fn hypothesis(bound: BoundId) -> Predicate {
    match bound {
        BoundId::Mantel => Predicate::triangle_free(),
        BoundId::ErdosAndrasfai | BoundId::Brouwer => Predicate::new([Atom::NonBipartite]),
        BoundId::Chi4 => Predicate::new([Atom::ChiAtLeast(4)]),
        BoundId::D2ge4 => Predicate::new([Atom::D2AtLeast(4)]),
    }
}

fn family_check(bound: BoundId, n: usize, witnesses: &[Graph]) -> Result<Option<bool>> {
    if witnesses.is_empty() {
        return Ok(None);
    }
    Ok(match bound {
        BoundId::Mantel => {
            let t = turan_graph(n, 2)?;
            Some(witnesses.len() == 1 && is_isomorphic(&witnesses[0], &t))
        }
        BoundId::ErdosAndrasfai | BoundId::Brouwer if n >= 5 => {
            let h = h0(n)?;
            Some(witnesses.iter().any(|w| is_isomorphic(w, &h)))
        }
        BoundId::Chi4 if n >= 12 => {
            let family: Vec<CanonicalForm> = g_family_all(n).map(|g| canonical_form(&g)).collect();
            Some(
                witnesses
                    .iter()
                    .all(|w| family.contains(&canonical_form(w))),
            )
        }
        _ => None,
    })
}

/// Compares the exact extremal number with `bound` for each `n` in `range`.
///
/// Each order gets its own entry; a capacity or domain failure at one order does not stop the
/// others.
pub fn verify_theorem(
    bound: BoundId,
    r: Option<usize>,
    range: std::ops::RangeInclusive<usize>,
    config: &SearchConfig,
) -> Vec<(usize, Result<SearchReport>)> {
    range
        .map(|n| (n, verify_one(bound, r, n, config)))
        .collect()
}

fn verify_one(
    bound: BoundId,
    r: Option<usize>,
    n: usize,
    config: &SearchConfig,
) -> Result<SearchReport> {
    let r = match bound {
        BoundId::Brouwer => match r.unwrap_or(2) {
            2 => Some(2),
            other => {
                return Err(domain(format!(
                    "search covers triangle-free graphs only (r = 2), got r = {other}"
                )))
            }
        },
        _ => None,
    };
    let predicate = hypothesis(bound);
    let mut report = search_report(n, &predicate, config)?;
    let value = match bound.evaluate(n, r) {
        Ok(v) => Some(v),
        Err(Error::Domain(_)) => None,
        Err(e) => return Err(e),
    };
    report.bound = value.map(|value| BoundValue { id: bound, value });
    report.verdict = Some(match (report.max_edges, value) {
        (Some(m), Some(b)) if n >= bound.claimed_from() => {
            if m == b {
                Verdict::BoundMetWithEquality
            } else if m < b {
                Verdict::BoundStrict
            } else {
                Verdict::BoundViolated
            }
        }
        _ => Verdict::BoundNotApplicable,
    });
    report.family_check = family_check(bound, n, &report.witness_graphs()?)?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRIANGLE_FREE_CLASSES: [u64; 10] = [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172];

    #[test]
    fn counts_match_known_sequence() {
        let cfg = SearchConfig::default();
        for (i, &want) in TRIANGLE_FREE_CLASSES.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                count_triangle_free(n, &Predicate::triangle_free(), &cfg).unwrap(),
                want,
                "n={n}"
            );
        }
    }

    #[test]
    fn max_edges_small_cases() {
        let cfg = SearchConfig::default();
        let m = max_edges(6, &Predicate::triangle_free(), &cfg).unwrap();
        assert_eq!(m.max, Some(9));
        assert_eq!(m.witnesses.len(), 1);
        let nb = max_edges(5, &Predicate::new([Atom::NonBipartite]), &cfg).unwrap();
        assert_eq!(nb.max, Some(5));
        assert!(nb
            .witnesses
            .contains(&canonical_form(&crate::constructions::cycle(5).unwrap())));
        assert_eq!(
            max_edges(4, &Predicate::new([Atom::NonBipartite]), &cfg)
                .unwrap()
                .max,
            None
        );
    }

    #[test]
    fn ceilings_raise_capacity_errors() {
        let cfg = SearchConfig::default();
        assert!(matches!(
            count_triangle_free(12, &Predicate::triangle_free(), &cfg),
            Err(Error::Capacity { limit: 11, .. })
        ));
        let err = max_edges(20, &Predicate::new([Atom::ChiAtLeast(4)]), &cfg).unwrap_err();
        assert!(matches!(
            err,
            Error::Capacity {
                best_known: Some(_),
                ..
            }
        ));
    }

    #[test]
    fn family_certification_small_range() {
        let c = certify_g_family(12..=16, 2).unwrap();
        assert_eq!(c.members, 9);
        assert!(c.failures.is_empty());
    }

    #[test]
    fn frontier_depth_zero_is_single_root() {
        let t = split_frontier(8, &Predicate::triangle_free(), 0).unwrap();
        assert_eq!(t.len(), 1);
        assert!(split_frontier(8, &Predicate::triangle_free(), 8).is_err());
    }
}
