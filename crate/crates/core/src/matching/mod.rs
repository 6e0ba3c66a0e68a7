//! Maximum-weight and perfect matchings in general graphs.

mod blossom;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, GraphError};

/// A graph together with nonnegative integer edge weights.
#[derive(Clone, Debug)]
pub struct WeightedGraph {
    graph: Graph,
    /// `(u, v, w)` with `u < v`, one entry per weighted edge.
    weights: Vec<(usize, usize, u64)>,
}

impl WeightedGraph {
    /// Every edge of `graph` weighted by `weight(u, v)` (called with `u < v`).
    pub fn from_fn(graph: &Graph, mut weight: impl FnMut(usize, usize) -> u64) -> WeightedGraph {
        let weights = graph
            .edges()
            .into_iter()
            .map(|(u, v)| (u, v, weight(u, v)))
            .collect();
        WeightedGraph {
            graph: graph.clone(),
            weights,
        }
    }

    pub fn unit(graph: &Graph) -> WeightedGraph {
        Self::from_fn(graph, |_, _| 1)
    }

    /// Explicit weights; every listed pair must be an edge of `graph`.
    /// Unlisted edges get weight 0.
    pub fn new(
        graph: &Graph,
        weights: &[(usize, usize, u64)],
    ) -> Result<WeightedGraph, GraphError> {
        let mut table = std::collections::BTreeMap::new();
        for &(u, v, w) in weights {
            graph.check_vertices(&[u, v])?;
            if !graph.has_edge(u, v) {
                return Err(GraphError::EndpointOutOfRange(u, v, graph.n()));
            }
            table.insert((u.min(v), u.max(v)), w);
        }
        Ok(Self::from_fn(graph, |u, v| {
            table.get(&(u, v)).copied().unwrap_or(0)
        }))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<u64> {
        let key = (u.min(v), u.max(v));
        self.weights
            .binary_search_by_key(&key, |&(a, b, _)| (a, b))
            .ok()
            .map(|i| self.weights[i].2)
    }

    pub fn weighted_edges(&self) -> &[(usize, usize, u64)] {
        &self.weights
    }
}

/// A set of pairwise vertex-disjoint edges, stored with `u < v` and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching(Vec<(usize, usize)>);

impl Matching {
    pub fn from_mates(mate: &[Option<usize>]) -> Matching {
        let mut edges: Vec<(usize, usize)> = mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect();
        edges.sort_unstable();
        Matching(edges)
    }

    /// Builds a matching from arbitrary edges, rejecting shared endpoints.
    pub fn from_edges(edges: &[(usize, usize)]) -> Option<Matching> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v || !seen.insert(u) || !seen.insert(v) {
                return None;
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Some(Matching(out))
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn saturates(&self, v: usize) -> bool {
        self.0.iter().any(|&(a, b)| a == v || b == v)
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.0.iter().find_map(|&(a, b)| match () {
            _ if a == v => Some(b),
            _ if b == v => Some(a),
            _ => None,
        })
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.0.iter().all(|&(u, v)| {
            u < g.n() && v < g.n() && g.has_edge(u, v) && seen.insert(u) && seen.insert(v)
        })
    }

    pub fn weight_in(&self, wg: &WeightedGraph) -> u64 {
        self.0
            .iter()
            .map(|&(u, v)| wg.weight(u, v).unwrap_or(0))
            .sum()
    }
}

/// A maximum-weight matching and its total weight.
pub fn max_weight_matching(wg: &WeightedGraph) -> (Matching, u64) {
    let edges: Vec<(usize, usize, i64)> = wg
        .weights
        .iter()
        .filter(|e| e.2 > 0)
        .map(|&(u, v, w)| (u, v, i64::try_from(w).expect("weight fits in i64")))
        .collect();
    let mate = blossom::solve(wg.graph.n(), &edges, false);
    let m = Matching::from_mates(&mate);
    let w = m.weight_in(wg);
    (m, w)
}

/// A matching of maximum cardinality.
pub fn maximum_matching(g: &Graph) -> Matching {
    let edges: Vec<(usize, usize, i64)> = g.edges().into_iter().map(|(u, v)| (u, v, 1)).collect();
    Matching::from_mates(&blossom::solve(g.n(), &edges, true))
}

/// A perfect matching, if one exists.
pub fn has_perfect_matching(g: &Graph) -> Option<Matching> {
    if g.n() % 2 == 1 {
        return None;
    }
    let m = maximum_matching(g);
    (2 * m.len() == g.n()).then_some(m)
}

/// Is there a matching of `g` avoiding `forbidden` that saturates every
/// vertex of `s` (or at least `threshold` of them, when given)?
///
/// Edge `e` is weighted `|e ∩ s|`; a matching saturates exactly as many
/// vertices of `s` as its weight.
pub fn exists_matching_saturating(
    g: &Graph,
    s: &[usize],
    forbidden: &[(usize, usize)],
    threshold: Option<usize>,
) -> Option<Matching> {
    let n = g.n();
    let mut in_s = vec![false; n];
    for &v in s {
        in_s[v] = true;
    }
    let banned: std::collections::HashSet<(usize, usize)> = forbidden
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let wg = WeightedGraph::from_fn(g, |u, v| {
        if banned.contains(&(u, v)) {
            0
        } else {
            in_s[u] as u64 + in_s[v] as u64
        }
    });
    let need = threshold.unwrap_or(s.len()) as u64;
    let (m, w) = max_weight_matching(&wg);
    (w >= need).then_some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, NamedFamily};

    fn fam(f: NamedFamily) -> Graph {
        named(&f).unwrap()
    }

    #[test]
    fn small_examples() {
        let k3 = fam(NamedFamily::Complete(3));
        assert_eq!(max_weight_matching(&WeightedGraph::unit(&k3)).1, 1);
        let c4 = fam(NamedFamily::Cycle(4));
        assert_eq!(max_weight_matching(&WeightedGraph::unit(&c4)).1, 2);
        assert!(has_perfect_matching(&c4).is_some());
        assert!(has_perfect_matching(&fam(NamedFamily::Cycle(5))).is_none());
        let pet = fam(NamedFamily::Petersen);
        let m = has_perfect_matching(&pet).unwrap();
        assert!(m.is_valid_in(&pet));
        assert!((0..10).all(|v| m.saturates(v)));
    }

    #[test]
    fn saturation_examples() {
        // P4 a-b-c-d, S = {b, c}
        let p4 = fam(NamedFamily::Path(4));
        let m = exists_matching_saturating(&p4, &[1, 2], &[], None).unwrap();
        assert!(m.saturates(1) && m.saturates(2) && m.is_valid_in(&p4));
        let claw = fam(NamedFamily::CompleteBipartite(1, 3));
        assert!(exists_matching_saturating(&claw, &[1, 2, 3], &[], None).is_none());
        // triangle 0,1,2 with pendants 3 at 0 and 4 at 1
        let g = Graph::new(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)]).unwrap();
        let tri = [(0, 1), (0, 2), (1, 2)];
        assert!(exists_matching_saturating(&g, &[0, 1, 2], &tri, Some(2)).is_some());
        assert!(exists_matching_saturating(&g, &[0, 1, 2], &tri, Some(3)).is_none());
    }

    #[test]
    fn weights_prefer_heavy_edges() {
        // path 0-1-2-3 with heavy middle edge
        let p4 = fam(NamedFamily::Path(4));
        let wg = WeightedGraph::new(&p4, &[(0, 1, 2), (1, 2, 5), (2, 3, 2)]).unwrap();
        let (m, w) = max_weight_matching(&wg);
        assert_eq!(w, 5);
        assert_eq!(m.edges(), &[(1, 2)]);
        assert!(WeightedGraph::new(&p4, &[(0, 2, 1)]).is_err());
    }

    #[test]
    fn from_edges_rejects_overlap() {
        assert!(Matching::from_edges(&[(0, 1), (1, 2)]).is_none());
        assert_eq!(
            Matching::from_edges(&[(3, 2), (0, 1)]).unwrap().edges(),
            &[(0, 1), (2, 3)]
        );
    }
}
