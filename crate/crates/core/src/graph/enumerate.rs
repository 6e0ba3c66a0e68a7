//! Graph corpora for exhaustive and randomized campaigns.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::Rng;

use super::{find_isomorphism, invariant_hash, Graph};

fn pair_list(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Graph whose edge set is selected by the bits of `mask` over the pairs
/// `(u, v)`, `u < v`, in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let pairs = pair_list(n);
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    Graph::from_adjacency(adj)
}

/// Every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them), `n <= 11`.
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * n.saturating_sub(1) / 2;
    assert!(pairs < 64, "too many labeled graphs on {n} vertices");
    (0u64..1 << pairs).map(move |mask| graph_from_mask(n, mask))
}

/// Set of graphs up to isomorphism.
#[derive(Default)]
pub struct IsoClasses {
    buckets: HashMap<u64, Vec<Graph>>,
    len: usize,
}

impl IsoClasses {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `g` unless an isomorphic graph is present; returns whether it
    /// was new.
    pub fn insert(&mut self, g: Graph) -> bool {
        let bucket = self.buckets.entry(invariant_hash(&g)).or_default();
        if bucket.iter().any(|h| find_isomorphism(h, &g).is_some()) {
            return false;
        }
        bucket.push(g);
        self.len += 1;
        true
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.buckets
            .get(&invariant_hash(g))
            .is_some_and(|b| b.iter().any(|h| find_isomorphism(h, g).is_some()))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Members in a deterministic order (by edge count, then edge list).
    pub fn into_sorted(self) -> Vec<Graph> {
        let mut all: Vec<Graph> = self.buckets.into_values().flatten().collect();
        all.sort_by_key(|g| (g.edge_count(), g.edges()));
        all
    }
}

/// All graphs on `n` vertices up to isomorphism, optionally with maximum
/// degree at most `max_degree`, built by degree-constrained edge addition.
pub fn unlabeled_graphs(n: usize, max_degree: Option<usize>) -> Vec<Graph> {
    let cap = max_degree.unwrap_or(usize::MAX);
    let mut level = vec![Graph::empty(n)];
    let mut out = level.clone();
    loop {
        let mut next = IsoClasses::new();
        for g in &level {
            for (u, v) in pair_list(n) {
                if !g.has_edge(u, v) && g.degree(u) < cap && g.degree(v) < cap {
                    next.insert(g.with_edge(u, v));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next.into_sorted();
        out.extend(level.iter().cloned());
    }
    out
}

/// Connected graphs with maximum degree at most 3 on exactly `n` vertices,
/// up to isomorphism.
pub fn connected_subcubic(n: usize) -> Vec<Graph> {
    unlabeled_graphs(n, Some(3))
        .into_iter()
        .filter(|g| g.is_connected())
        .collect()
}

/// Erdős–Rényi graph G(n, p).
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (u, v) in pair_list(n) {
        if rng.gen_bool(p) {
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }
    Graph::from_adjacency(adj)
}

/// Random connected cubic graph on `n` vertices (`n` even, `n >= 4`) from the
/// pairing model with rejection.
pub fn random_connected_cubic<R: Rng>(n: usize, rng: &mut R) -> Graph {
    assert!(
        n >= 4 && n.is_multiple_of(2),
        "cubic graphs need an even order >= 4"
    );
    loop {
        let mut points: Vec<usize> = (0..3 * n).map(|p| p / 3).collect();
        points.shuffle(rng);
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        let simple = points.chunks(2).all(|pair| {
            let (u, v) = (pair[0], pair[1]);
            if u == v || adj[u].contains(v) {
                return false;
            }
            adj[u].insert(v);
            adj[v].insert(u);
            true
        });
        if simple {
            let g = Graph::from_adjacency(adj);
            if g.is_connected() {
                return g;
            }
        }
    }
}
