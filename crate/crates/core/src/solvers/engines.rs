//! Strong clique extension engines, one per graph class.

use std::ops::ControlFlow;

use crate::graph::{find_induced_c4, Graph, VertexSet};
use crate::linegraph::{
    edge_families, recognize_line_graph, translate_clique, EdgeFamilyMG, MemberKind, RootGraphMap,
};
use crate::matching::{exists_matching_saturating, max_weight_matching, Matching, WeightedGraph};
use crate::oracle;

use super::domination::{disjoint_maximal_independent, independent_dominator};
use super::{Method, SolverError};

pub(crate) trait CliqueEngine {
    fn method(&self) -> Method;

    /// A strong clique containing the clique `c` (possibly empty), if any.
    fn extend(&self, c: &[usize]) -> Option<VertexSet>;

    /// For a maximal clique that is not strong: a maximal independent set
    /// disjoint from it.
    fn witness(&self, c: &[usize]) -> Option<VertexSet>;
}

pub(crate) struct C4Free<'g> {
    g: &'g Graph,
    simplicial: Vec<VertexSet>,
}

impl<'g> C4Free<'g> {
    pub fn new(g: &'g Graph) -> Result<Self, SolverError> {
        if let Some(c4) = find_induced_c4(g) {
            return Err(SolverError::InducedC4(c4));
        }
        let mut simplicial: Vec<VertexSet> = (0..g.n())
            .map(|v| VertexSet::from_bits(&g.closed_neighborhood(v)))
            .filter(|nv| g.is_clique(nv))
            .collect();
        simplicial.sort();
        simplicial.dedup();
        Ok(C4Free { g, simplicial })
    }
}

impl CliqueEngine for C4Free<'_> {
    fn method(&self) -> Method {
        Method::C4Free
    }

    fn extend(&self, c: &[usize]) -> Option<VertexSet> {
        let c = VertexSet::from(c.to_vec());
        self.simplicial.iter().find(|s| c.is_subset(s)).cloned()
    }

    fn witness(&self, c: &[usize]) -> Option<VertexSet> {
        disjoint_maximal_independent(self.g, c)
    }
}

/// Greedy completion of `m` to a maximal matching of `h` that never uses an
/// edge from `avoid`.
fn complete_matching(
    h: &Graph,
    m: &[(usize, usize)],
    avoid: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let mut used = vec![false; h.n()];
    let mut out = m.to_vec();
    for &(u, v) in m {
        used[u] = true;
        used[v] = true;
    }
    for (u, v) in h.edges() {
        if !used[u] && !used[v] && !avoid.contains(&(u, v)) {
            used[u] = true;
            used[v] = true;
            out.push((u, v));
        }
    }
    out.sort_unstable();
    out
}

/// Line graphs: cliques are members of the root's triangle/star family, and a
/// member is strong unless a matching avoiding it blocks all its edges.
pub(crate) struct LineGraphEngine {
    map: RootGraphMap,
    families: EdgeFamilyMG,
    /// Per maximal member: `None` if strong, else a blocking matching.
    blocking: Vec<Option<Matching>>,
    g: Graph,
}

impl LineGraphEngine {
    pub fn new(g: &Graph) -> Result<Self, SolverError> {
        let map = recognize_line_graph(g).map_err(|e| SolverError::NotLineGraph(e.obstruction))?;
        let families =
            edge_families(&map.root).map_err(|e| SolverError::Inconsistent(e.to_string()))?;
        let h = &map.root;
        let blocking = families
            .maximal
            .iter()
            .map(|member| match member.kind {
                MemberKind::Triangle(t) => {
                    exists_matching_saturating(h, &t, &member.edges, Some(2))
                }
                MemberKind::Star(v) => {
                    let nb: Vec<usize> = h.neighbor_iter(v).collect();
                    exists_matching_saturating(h, &nb, &member.edges, None)
                }
            })
            .collect();
        Ok(LineGraphEngine {
            map,
            families,
            blocking,
            g: g.clone(),
        })
    }
}

impl CliqueEngine for LineGraphEngine {
    fn method(&self) -> Method {
        Method::LineGraph
    }

    fn extend(&self, c: &[usize]) -> Option<VertexSet> {
        let (edges, _) = translate_clique(&self.map, &self.g, c).ok()?;
        self.families
            .maximal
            .iter()
            .zip(&self.blocking)
            .find(|(m, b)| b.is_none() && edges.iter().all(|e| m.edges.binary_search(e).is_ok()))
            .map(|(m, _)| self.map.vertices_of(&m.edges))
    }

    fn witness(&self, c: &[usize]) -> Option<VertexSet> {
        let edges = self.map.edges_of(c);
        let (member, blocking) = self
            .families
            .maximal
            .iter()
            .zip(&self.blocking)
            .find(|(m, _)| m.edges == edges)?;
        let m = blocking.as_ref()?;
        let full = complete_matching(&self.map.root, m.edges(), &member.edges);
        Some(self.map.vertices_of(&full))
    }
}

/// Complements of line graphs: cliques are matchings of the root, and a
/// clique is strong iff its matching meets every family member.
pub(crate) struct CoLineEngine {
    map: RootGraphMap,
    families: EdgeFamilyMG,
    /// Number of maximal members containing each root edge.
    member_count: Vec<((usize, usize), u64)>,
    g: Graph,
}

impl CoLineEngine {
    pub fn new(g: &Graph) -> Result<Self, SolverError> {
        let co = g.complement();
        let map = recognize_line_graph(&co)
            .map_err(|e| SolverError::ComplementNotLineGraph(e.obstruction))?;
        let families =
            edge_families(&map.root).map_err(|e| SolverError::Inconsistent(e.to_string()))?;
        let member_count = map
            .root
            .edges()
            .into_iter()
            .map(|e| {
                (
                    e,
                    families
                        .maximal
                        .iter()
                        .filter(|m| m.edges.binary_search(&e).is_ok())
                        .count() as u64,
                )
            })
            .collect();
        Ok(CoLineEngine {
            map,
            families,
            member_count,
            g: g.clone(),
        })
    }
}

impl CliqueEngine for CoLineEngine {
    fn method(&self) -> Method {
        Method::CoLine
    }

    fn extend(&self, c: &[usize]) -> Option<VertexSet> {
        if self.g.check_clique(c).is_err() {
            return None;
        }
        let h = &self.map.root;
        let c_h = self.map.edges_of(c);
        let mut touched = vec![false; h.n()];
        for &(u, v) in &c_h {
            touched[u] = true;
            touched[v] = true;
        }
        // drop edges outside the matching that meet it
        let weights: Vec<(usize, usize, u64)> = self
            .member_count
            .iter()
            .filter(|(e, _)| c_h.binary_search(e).is_ok() || !(touched[e.0] || touched[e.1]))
            .map(|&((u, v), w)| (u, v, w))
            .collect();
        let wg = WeightedGraph::new(h, &weights).expect("root edges");
        let (m, w) = max_weight_matching(&wg);
        if w != self.families.maximal.len() as u64 {
            return None;
        }
        // edges of m at the matching's ends are its own edges; add the rest
        let mut seed: Vec<(usize, usize)> = c_h.clone();
        seed.extend(
            m.edges()
                .iter()
                .filter(|&&(u, v)| !touched[u] && !touched[v]),
        );
        let full = complete_matching(h, &seed, &[]);
        Some(self.map.vertices_of(&full))
    }

    fn witness(&self, c: &[usize]) -> Option<VertexSet> {
        let c_h = self.map.edges_of(c);
        self.families
            .maximal
            .iter()
            .find(|m| m.edges.iter().all(|e| c_h.binary_search(e).is_err()))
            .map(|m| self.map.vertices_of(&m.edges))
    }
}

/// Bounded clique number: test every maximal clique through `c` by searching
/// for an independent dominating set of size at most its order.
pub(crate) struct BoundedOmega<'g> {
    g: &'g Graph,
}

impl<'g> BoundedOmega<'g> {
    pub fn new(g: &'g Graph, k: usize) -> Result<Self, SolverError> {
        if let Some(witness) = g.find_clique_of_size(k + 1) {
            return Err(SolverError::OmegaExceeds { cap: k, witness });
        }
        Ok(BoundedOmega { g })
    }

    fn maximal_cliques_through(&self, c: &[usize]) -> Vec<VertexSet> {
        let mut common = self.g.all_vertices();
        for &v in c {
            common.intersect_with(self.g.neighbors(v));
        }
        let mut out = Vec::new();
        let _ = oracle::visit_maximal_cliques(self.g, common, |rest| {
            out.push(rest.iter().chain(c).copied().collect::<VertexSet>());
            ControlFlow::Continue(())
        });
        out.sort();
        out
    }
}

impl CliqueEngine for BoundedOmega<'_> {
    fn method(&self) -> Method {
        Method::BoundedOmega
    }

    fn extend(&self, c: &[usize]) -> Option<VertexSet> {
        if self.g.check_clique(c).is_err() {
            return None;
        }
        self.maximal_cliques_through(c)
            .into_iter()
            .find(|q| !q.is_empty() && independent_dominator(self.g, q).is_none())
    }

    fn witness(&self, c: &[usize]) -> Option<VertexSet> {
        disjoint_maximal_independent(self.g, c)
    }
}

pub(crate) struct Oracle<'g> {
    g: &'g Graph,
}

impl<'g> Oracle<'g> {
    pub fn new(g: &'g Graph, cap: usize) -> Result<Self, SolverError> {
        if g.n() > cap {
            return Err(SolverError::OracleRefused { n: g.n(), cap });
        }
        Ok(Oracle { g })
    }
}

impl CliqueEngine for Oracle<'_> {
    fn method(&self) -> Method {
        Method::Oracle
    }

    fn extend(&self, c: &[usize]) -> Option<VertexSet> {
        oracle::extension(self.g, c).ok().flatten()
    }

    fn witness(&self, c: &[usize]) -> Option<VertexSet> {
        let w = oracle::is_strong_clique(self.g, c).ok()?;
        (!w.strong).then_some(w.witness)
    }
}
