//! Simple undirected graphs over dense vertex ids, plus the constructions and
//! structural predicates shared by every solver.

mod chordality;
pub mod enumerate;
pub(crate) mod families;
mod io;
mod iso;

use std::fmt;
use std::ops::Deref;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use chordality::{find_induced_c4, is_weakly_chordal, Chordality, HoleSide};
pub use families::{named, NamedFamily};
pub use io::{parse_edge_list, parse_labels, write_edge_list, write_labels};
pub use iso::{find_isomorphism, invariant_hash, is_isomorphic};

/// Sorted, duplicate-free list of vertex ids.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| !other.contains(v))
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn to_bits(&self, n: usize) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(n);
        for &v in &self.0 {
            bits.insert(v);
        }
        bits
    }

    pub fn from_bits(bits: &FixedBitSet) -> Self {
        VertexSet(bits.ones().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(mut v: Vec<usize>) -> Self {
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(v: [usize; N]) -> Self {
        VertexSet::from(v.to_vec())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from(iter.into_iter().collect::<Vec<_>>())
    }
}

impl Deref for VertexSet {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {0} outside 0..{1}")]
    VertexOutOfRange(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAClique(usize, usize),
    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
}

/// Immutable simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as one bitset per vertex so neighbourhood
/// intersections are word operations.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, labels: None })
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            labels: None,
        }
    }

    pub(crate) fn from_adjacency(adj: Vec<FixedBitSet>) -> Graph {
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbor_iter(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn closed_neighborhood(&self, v: usize) -> FixedBitSet {
        let mut bits = self.adj[v].clone();
        bits.insert(v);
        bits
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in self.adj[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn all_vertices(&self) -> FixedBitSet {
        let mut bits = FixedBitSet::with_capacity(self.n());
        bits.insert_range(..);
        bits
    }

    pub fn check_vertices(&self, vs: &[usize]) -> Result<(), GraphError> {
        match vs.iter().find(|&&v| v >= self.n()) {
            Some(&v) => Err(GraphError::VertexOutOfRange(v, self.n())),
            None => Ok(()),
        }
    }

    /// Checks that `vs` is a clique; the error names a non-adjacent pair.
    pub fn check_clique(&self, vs: &[usize]) -> Result<(), GraphError> {
        self.check_vertices(vs)?;
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                if u != v && !self.has_edge(u, v) {
                    return Err(GraphError::NotAClique(u, v));
                }
            }
        }
        Ok(())
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        self.check_clique(vs).is_ok()
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut bits = self.adj[v].clone();
                bits.toggle_range(..);
                bits.set(v, false);
                bits
            })
            .collect();
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    /// Line graph; vertex `i` of the result is `edges[i]` of `self`.
    pub fn line_graph(&self) -> LineGraph {
        let edges = self.edges();
        let m = edges.len();
        let mut adj = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            let (a, b) = edges[i];
            for j in i + 1..m {
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        LineGraph {
            graph: Graph::from_adjacency(adj),
            edges,
        }
    }

    /// Subgraph induced by `vs` (in the given order); vertex `i` of the result
    /// is `vs[i]`.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Graph {
        let k = vs.len();
        let mut adj = vec![FixedBitSet::with_capacity(k); k];
        for i in 0..k {
            for j in i + 1..k {
                if self.has_edge(vs[i], vs[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| vs.iter().map(|&v| l[v].clone()).collect());
        Graph { adj, labels }
    }

    /// Copy of the graph with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        assert!(u != v && u < self.n() && v < self.n());
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Graph {
            adj,
            labels: self.labels.clone(),
        }
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n() + other.n();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for u in 0..self.n() {
            for v in self.neighbor_iter(u) {
                adj[u].insert(v);
            }
        }
        for u in 0..other.n() {
            for v in other.neighbor_iter(u) {
                adj[self.n() + u].insert(self.n() + v);
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Graph::new(self.n(), &edges).expect("permutation of a valid graph")
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.adj[u].ones() {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            out.push(VertexSet::from(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        let min = degrees.iter().copied().min().unwrap_or(0);
        let max = degrees.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            min,
            max,
            regular: min == max,
            cubic: self.n() > 0 && min == 3 && max == 3,
            subcubic: max <= 3,
        }
    }

    /// Two-colouring of the graph, if it is bipartite.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.adj[u].ones() {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        let left = (0..n).filter(|&v| side[v] == Some(false)).collect();
        let right = (0..n).filter(|&v| side[v] == Some(true)).collect();
        Some((left, right))
    }

    /// Some triangle, if one exists.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for (u, v) in self.edges() {
            let mut common = self.adj[u].clone();
            common.intersect_with(&self.adj[v]);
            if let Some(w) = common.ones().next() {
                let mut t = [u, v, w];
                t.sort_unstable();
                return Some(t);
            }
        }
        None
    }

    /// A clique of size `size`, if one exists.
    pub fn find_clique_of_size(&self, size: usize) -> Option<VertexSet> {
        fn grow(g: &Graph, cur: &mut Vec<usize>, cand: FixedBitSet, size: usize) -> bool {
            if cur.len() == size {
                return true;
            }
            if cur.len() + cand.count_ones(..) < size {
                return false;
            }
            for v in cand.ones() {
                let mut next = cand.clone();
                next.intersect_with(&g.adj[v]);
                // only extend with larger ids to avoid revisiting
                next.remove_range(..v + 1);
                cur.push(v);
                if grow(g, cur, next, size) {
                    return true;
                }
                cur.pop();
            }
            false
        }
        let mut cur = Vec::new();
        if grow(self, &mut cur, self.all_vertices(), size) {
            Some(VertexSet::from(cur))
        } else {
            None
        }
    }
}

/// Line graph together with the vertex-to-edge correspondence.
#[derive(Clone, Debug)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the root edge represented by line-graph vertex `i`.
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub min: usize,
    pub max: usize,
    pub regular: bool,
    pub cubic: bool,
    pub subcubic: bool,
}
