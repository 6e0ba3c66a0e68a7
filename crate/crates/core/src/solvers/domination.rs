use fixedbitset::FixedBitSet;

use crate::graph::{Graph, VertexSet};

/// An independent set outside `clique` that dominates every vertex of it.
///
/// Such a set exists iff the clique misses some maximal independent set. The
/// search branches on the undominated clique vertex with the fewest usable
/// neighbours, so its depth is at most `|clique|`.
pub(crate) fn independent_dominator(g: &Graph, clique: &[usize]) -> Option<Vec<usize>> {
    let n = g.n();
    let mut blocked = FixedBitSet::with_capacity(n);
    for &c in clique {
        blocked.insert(c);
    }
    let mut chosen = Vec::new();
    if search(g, clique, &mut blocked, &mut chosen) {
        Some(chosen)
    } else {
        None
    }
}

/// `blocked` holds the clique plus the closed neighbourhood of `chosen`.
fn search(g: &Graph, clique: &[usize], blocked: &mut FixedBitSet, chosen: &mut Vec<usize>) -> bool {
    let mut best: Option<FixedBitSet> = None;
    for &c in clique {
        if chosen.iter().any(|&s| g.has_edge(c, s)) {
            continue;
        }
        let mut cand = g.neighbors(c).clone();
        cand.difference_with(blocked);
        let count = cand.count_ones(..);
        if count == 0 {
            return false;
        }
        if best.as_ref().is_none_or(|b| count < b.count_ones(..)) {
            best = Some(cand);
        }
    }
    let Some(cand) = best else {
        return true;
    };
    for x in cand.ones() {
        let saved = blocked.clone();
        blocked.union_with(g.neighbors(x));
        blocked.insert(x);
        chosen.push(x);
        if search(g, clique, blocked, chosen) {
            return true;
        }
        chosen.pop();
        *blocked = saved;
    }
    false
}

/// Greedy extension of the independent set `seed` by ascending vertex id,
/// never adding a vertex of `avoid`.
pub(crate) fn extend_to_maximal_independent(
    g: &Graph,
    seed: &[usize],
    avoid: &[usize],
) -> VertexSet {
    let n = g.n();
    let mut blocked = FixedBitSet::with_capacity(n);
    for &a in avoid {
        blocked.insert(a);
    }
    let mut set: Vec<usize> = seed.to_vec();
    for &s in seed {
        blocked.insert(s);
        blocked.union_with(g.neighbors(s));
    }
    for v in 0..n {
        if !blocked.contains(v) {
            set.push(v);
            blocked.insert(v);
            blocked.union_with(g.neighbors(v));
        }
    }
    VertexSet::from(set)
}

/// A maximal independent set disjoint from `clique`, if one exists.
pub(crate) fn disjoint_maximal_independent(g: &Graph, clique: &[usize]) -> Option<VertexSet> {
    independent_dominator(g, clique).map(|d| extend_to_maximal_independent(g, &d, clique))
}

/// For a non-maximal clique: some vertex complete to it seeds a maximal
/// independent set avoiding it.
pub(crate) fn non_maximal_witness(g: &Graph, clique: &[usize]) -> Option<VertexSet> {
    let mut common = g.all_vertices();
    for &c in clique {
        common.intersect_with(g.neighbors(c));
    }
    common
        .minimum()
        .map(|x| extend_to_maximal_independent(g, &[x], clique))
}
