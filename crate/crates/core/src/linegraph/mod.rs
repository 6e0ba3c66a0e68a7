//! Line graphs: recognition with a root graph, and the triangle/star edge
//! families that describe cliques of a line graph inside its root.

mod recognize;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};

pub use recognize::{find_induced_claw, recognize_line_graph};

/// Sorted list of edges `(u, v)`, `u < v`.
pub type EdgeSet = Vec<(usize, usize)>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LineGraphError {
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("not a line graph; induced obstruction on {0}")]
    NotALineGraph(VertexSet),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Failed recognition, with a minimal induced subgraph that is not a line
/// graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotALineGraph {
    pub obstruction: VertexSet,
}

impl From<NotALineGraph> for LineGraphError {
    fn from(e: NotALineGraph) -> Self {
        LineGraphError::NotALineGraph(e.obstruction)
    }
}

/// A root `H` of a recognised graph `G`, with vertex `v` of `G` standing for
/// edge `to_edge[v]` of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootGraphMap {
    pub root: Graph,
    pub to_edge: Vec<(usize, usize)>,
}

impl RootGraphMap {
    /// `to_edge` is a bijection onto `E(root)` and adjacency matches.
    pub fn verify(&self, g: &Graph) -> bool {
        if self.to_edge.len() != g.n() || self.root.edge_count() != g.n() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        let bijective = self
            .to_edge
            .iter()
            .all(|&(a, b)| a < b && self.root.has_edge(a, b) && seen.insert((a, b)));
        bijective
            && (0..g.n()).all(|u| {
                (u + 1..g.n()).all(|v| {
                    let (a, b) = self.to_edge[u];
                    let (c, d) = self.to_edge[v];
                    g.has_edge(u, v) == (a == c || a == d || b == c || b == d)
                })
            })
    }

    /// Inverse map: the vertex of `G` for a root edge.
    pub fn vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.to_edge.iter().position(|&e| e == key)
    }

    pub fn vertices_of(&self, edges: &[(usize, usize)]) -> VertexSet {
        edges
            .iter()
            .filter_map(|&(u, v)| self.vertex_of(u, v))
            .collect()
    }

    pub fn edges_of(&self, vertices: &[usize]) -> EdgeSet {
        let mut out: EdgeSet = vertices.iter().map(|&v| self.to_edge[v]).collect();
        out.sort_unstable();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MemberKind {
    Triangle([usize; 3]),
    Star(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Member {
    pub kind: MemberKind,
    pub edges: EdgeSet,
}

/// Triangles `T`, stars `S` (one per vertex) and the inclusion-maximal
/// members `M` of `T ∪ S`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeFamilyMG {
    pub triangles: Vec<Member>,
    pub stars: Vec<Member>,
    pub maximal: Vec<Member>,
}

fn is_subset(a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    a.iter().all(|e| b.binary_search(e).is_ok())
}

pub fn edge_families(h: &Graph) -> Result<EdgeFamilyMG, LineGraphError> {
    if let Some(v) = (0..h.n()).find(|&v| h.degree(v) == 0) {
        return Err(LineGraphError::IsolatedVertex(v));
    }
    let n = h.n();
    let stars: Vec<Member> = (0..n)
        .map(|v| {
            let mut edges: EdgeSet = h.neighbor_iter(v).map(|u| (u.min(v), u.max(v))).collect();
            edges.sort_unstable();
            Member {
                kind: MemberKind::Star(v),
                edges,
            }
        })
        .collect();
    let mut triangles = Vec::new();
    for (a, b) in h.edges() {
        for c in h.neighbor_iter(a).filter(|&c| c > b && h.has_edge(b, c)) {
            triangles.push(Member {
                kind: MemberKind::Triangle([a, b, c]),
                edges: vec![(a, b), (a, c), (b, c)],
            });
        }
    }
    let all: Vec<&Member> = triangles.iter().chain(stars.iter()).collect();
    let mut maximal: Vec<Member> = Vec::new();
    for (i, m) in all.iter().enumerate() {
        let dominated = all.iter().enumerate().any(|(j, other)| {
            // strictly larger superset, or an equal set listed earlier
            is_subset(&m.edges, &other.edges) && (other.edges.len() > m.edges.len() || j < i)
        });
        if !dominated {
            maximal.push((*m).clone());
        }
    }
    Ok(EdgeFamilyMG {
        triangles,
        stars,
        maximal,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CliqueShape {
    Empty,
    /// All edges share `center`; a single edge reports its smaller end.
    SubStar {
        center: usize,
    },
    Triangle([usize; 3]),
}

/// The root edge set of a clique of `G`, with its shape.
pub fn translate_clique(
    map: &RootGraphMap,
    g: &Graph,
    clique: &[usize],
) -> Result<(EdgeSet, CliqueShape), LineGraphError> {
    g.check_clique(clique)?;
    let edges = map.edges_of(clique);
    let common = edges.first().and_then(|&(a, b)| {
        [a, b]
            .into_iter()
            .find(|&c| edges.iter().all(|&(x, y)| x == c || y == c))
    });
    let shape = match (edges.is_empty(), common) {
        (true, _) => CliqueShape::Empty,
        (false, Some(center)) => CliqueShape::SubStar { center },
        (false, None) => {
            // pairwise-meeting edges without a common end form a triangle
            let mut vs: Vec<usize> = edges.iter().flat_map(|&(x, y)| [x, y]).collect();
            vs.sort_unstable();
            vs.dedup();
            CliqueShape::Triangle([vs[0], vs[1], vs[2]])
        }
    };
    Ok((edges, shape))
}
