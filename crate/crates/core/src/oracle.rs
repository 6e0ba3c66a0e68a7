//! Exact exponential-time reference implementations.
//!
//! Everything here is decided by enumerating maximal independent sets,
//! maximal cliques or colourings outright, so it serves as ground truth for
//! the polynomial solvers. Intended for graphs of a few dozen vertices.

use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("the empty set is not a valid strong-clique query")]
    EmptyClique,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Bron–Kerbosch with Tomita pivoting over candidates `p`; `visit` may stop
/// the enumeration early.
fn bron_kerbosch<F>(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if p.is_clear() && x.is_clear() {
        return visit(r);
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection_count(g.neighbors(u)))
        .expect("p or x is nonempty");
    let mut branch = p.clone();
    branch.difference_with(g.neighbors(pivot));
    for v in branch.ones() {
        let mut np = p.clone();
        np.intersect_with(g.neighbors(v));
        let mut nx = x.clone();
        nx.intersect_with(g.neighbors(v));
        r.push(v);
        bron_kerbosch(g, r, np, nx, visit)?;
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
    ControlFlow::Continue(())
}

/// Visits every maximal clique of `g[within]`.
pub(crate) fn visit_maximal_cliques<F>(
    g: &Graph,
    within: FixedBitSet,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let x = FixedBitSet::with_capacity(g.n());
    bron_kerbosch(g, &mut Vec::new(), within, x, &mut visit)
}

fn collect_sorted(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = visit_maximal_cliques(g, g.all_vertices(), |c| {
        out.push(VertexSet::from(c.to_vec()));
        ControlFlow::Continue(())
    });
    out.sort();
    out
}

/// All inclusion-maximal cliques, in lexicographic order of their sorted
/// vertex lists. The empty graph has the single maximal clique `{}`.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    collect_sorted(g)
}

/// All inclusion-maximal independent sets, in lexicographic order.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    collect_sorted(&g.complement())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongCliqueWitness {
    pub strong: bool,
    /// A maximal independent set disjoint from the clique when `strong` is
    /// false; empty otherwise.
    pub witness: VertexSet,
}

/// Decides whether the nonempty clique `clique` meets every maximal
/// independent set.
pub fn is_strong_clique(g: &Graph, clique: &[usize]) -> Result<StrongCliqueWitness, OracleError> {
    if clique.is_empty() {
        return Err(OracleError::EmptyClique);
    }
    g.check_clique(clique)?;
    let n = g.n();
    let mut in_clique = FixedBitSet::with_capacity(n);
    for &c in clique {
        in_clique.insert(c);
    }
    // A maximal independent set of g avoiding C is exactly a maximal
    // independent set of g - C that dominates C.
    let co = g.complement();
    let mut rest = g.all_vertices();
    rest.difference_with(&in_clique);
    let mut witness = None;
    let _ = visit_maximal_cliques(&co, rest, |set| {
        let dominates = clique
            .iter()
            .all(|&c| set.iter().any(|&s| g.has_edge(c, s)));
        if dominates {
            witness = Some(VertexSet::from(set.to_vec()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(match witness {
        Some(w) => StrongCliqueWitness {
            strong: false,
            witness: w,
        },
        None => StrongCliqueWitness {
            strong: true,
            witness: VertexSet::new(),
        },
    })
}

/// Every strong clique (each is necessarily a maximal clique), in
/// lexicographic order.
pub fn strong_cliques_all(g: &Graph) -> Vec<VertexSet> {
    maximal_cliques(g)
        .into_iter()
        .filter(|c| !c.is_empty() && is_strong_clique(g, c).map(|w| w.strong).unwrap_or(false))
        .collect()
}

/// Lexicographically first strong clique containing `clique`, if any.
pub fn extension(g: &Graph, clique: &[usize]) -> Result<Option<VertexSet>, OracleError> {
    g.check_clique(clique)?;
    let want = VertexSet::from(clique.to_vec());
    Ok(strong_cliques_all(g)
        .into_iter()
        .find(|c| want.is_subset(c)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantsReport {
    /// Independence number.
    pub alpha: usize,
    /// Independent domination number.
    pub idom: usize,
    /// Clique cover number.
    pub theta: usize,
    /// Clique number.
    pub omega: usize,
    pub well_covered: bool,
    pub semi_perfect: bool,
}

pub fn invariants_report(g: &Graph) -> InvariantsReport {
    let mis = maximal_independent_sets(g);
    let alpha = mis.iter().map(|s| s.len()).max().unwrap_or(0);
    let idom = mis.iter().map(|s| s.len()).min().unwrap_or(0);
    let omega = maximal_cliques(g)
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(0);
    let theta = clique_cover_number(g);
    InvariantsReport {
        alpha,
        idom,
        theta,
        omega,
        well_covered: idom == alpha,
        semi_perfect: theta == alpha,
    }
}

/// Exact proper colouring with the minimum number of colours.
///
/// Iterative deepening on the number of colours; vertices are coloured in
/// largest-degree-first order and a vertex may only open one new colour.
pub fn optimal_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let lower = maximal_cliques(g)
        .iter()
        .map(|c| c.len())
        .max()
        .unwrap_or(1)
        .max(1);
    let mut colors = vec![usize::MAX; n];
    for k in lower..=n {
        if color_with(g, &order, 0, k, 0, &mut colors) {
            return colors;
        }
    }
    unreachable!("n colours always suffice")
}

fn color_with(
    g: &Graph,
    order: &[usize],
    depth: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbor_iter(v).any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_with(g, order, depth + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g)
        .iter()
        .map(|&c| c + 1)
        .max()
        .unwrap_or(0)
}

/// Minimum partition of the vertex set into cliques.
pub fn minimum_clique_cover(g: &Graph) -> Vec<VertexSet> {
    let colors = optimal_coloring(&g.complement());
    let k = colors.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut parts = vec![Vec::new(); k];
    for (v, &c) in colors.iter().enumerate() {
        parts[c].push(v);
    }
    let mut parts: Vec<VertexSet> = parts.into_iter().map(VertexSet::from).collect();
    parts.sort();
    parts
}

pub fn clique_cover_number(g: &Graph) -> usize {
    chromatic_number(&g.complement())
}

/// Chromatic index, as the chromatic number of the line graph.
pub fn chromatic_index_exact(g: &Graph) -> usize {
    chromatic_number(&g.line_graph().graph)
}

/// Lexicographically first partition of the vertex set into members of
/// `cliques`, by exact-cover search (smallest uncovered vertex first).
pub fn exact_cover(n: usize, cliques: &[VertexSet]) -> Option<Vec<VertexSet>> {
    fn search(
        n: usize,
        cliques: &[VertexSet],
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
    ) -> bool {
        let Some(v) = (0..n).find(|&v| !covered[v]) else {
            return true;
        };
        for (i, c) in cliques.iter().enumerate() {
            if !c.contains(v) || c.iter().any(|&u| covered[u]) {
                continue;
            }
            for &u in c.iter() {
                covered[u] = true;
            }
            chosen.push(i);
            if search(n, cliques, covered, chosen) {
                return true;
            }
            chosen.pop();
            for &u in c.iter() {
                covered[u] = false;
            }
        }
        false
    }
    let mut covered = vec![false; n];
    let mut chosen = Vec::new();
    if search(n, cliques, &mut covered, &mut chosen) {
        Some(chosen.into_iter().map(|i| cliques[i].clone()).collect())
    } else {
        None
    }
}

/// Partition of the vertex set into strong cliques, found by exact cover
/// over all strong cliques.
pub fn strong_clique_partition(g: &Graph) -> Option<Vec<VertexSet>> {
    exact_cover(g.n(), &strong_cliques_all(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Localizability {
    pub localizable: bool,
    pub partition: Option<Vec<VertexSet>>,
}

/// Localizability decided through `i(G) = θ(G)`; a true verdict carries the
/// lexicographically first strong-clique partition.
pub fn localizable_exact(g: &Graph) -> Localizability {
    let report = invariants_report(g);
    if report.idom != report.theta {
        return Localizability {
            localizable: false,
            partition: None,
        };
    }
    let partition = strong_clique_partition(g);
    debug_assert!(
        partition.is_some(),
        "i = θ but no strong-clique partition: {g:?}"
    );
    Localizability {
        localizable: true,
        partition,
    }
}

/// Independent sets of `g` inside `pool` that dominate every vertex of
/// `targets`; visited by increasing size up to `max_size`. Used by tests and
/// reports, not by the oracle decisions above.
pub fn independent_dominators_by_subsets(
    g: &Graph,
    targets: &[usize],
    pool: &[usize],
    max_size: usize,
) -> Option<VertexSet> {
    fn rec(
        g: &Graph,
        targets: &[usize],
        pool: &[usize],
        start: usize,
        left: usize,
        cur: &mut Vec<usize>,
    ) -> bool {
        if targets
            .iter()
            .all(|&t| cur.iter().any(|&s| g.has_edge(t, s)))
        {
            return true;
        }
        if left == 0 {
            return false;
        }
        for i in start..pool.len() {
            let v = pool[i];
            if cur.iter().any(|&s| g.has_edge(s, v)) {
                continue;
            }
            cur.push(v);
            if rec(g, targets, pool, i + 1, left - 1, cur) {
                return true;
            }
            cur.pop();
        }
        false
    }
    let mut cur = Vec::new();
    if rec(g, targets, pool, 0, max_size, &mut cur) {
        Some(VertexSet::from(cur))
    } else {
        None
    }
}
