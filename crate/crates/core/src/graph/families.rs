use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Named graph families used throughout the solvers and tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedFamily {
    Complete(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// K4 minus one edge; vertices 0,1 are the degree-3 pair.
    Diamond,
    /// Complement of P2 + P3 (P2 on {0,1}, P3 the path 2-3-4).
    CoP2PlusP3,
    /// Complement of C6, the triangular prism.
    CoC6,
    /// The six-vertex gadget made of two triangles {x,y,z}, {x',y',z'}
    /// joined by y-y' and z-z'.
    FGadget,
    /// `n >= 2` gadgets joined in a cycle by the edges x_i - x'_{i+1}.
    Fn(usize),
    Petersen,
}

/// Offsets inside one F gadget.
pub(crate) mod gadget {
    pub const X: usize = 0;
    pub const X_PRIME: usize = 1;
    pub const Y: usize = 2;
    pub const Y_PRIME: usize = 3;
    pub const Z: usize = 4;
    pub const Z_PRIME: usize = 5;
    pub const SIZE: usize = 6;

    pub const EDGES: [(usize, usize); 8] = [
        (X, Y),
        (X, Z),
        (Y, Z),
        (Y, Y_PRIME),
        (Z, Z_PRIME),
        (Y_PRIME, Z_PRIME),
        (Y_PRIME, X_PRIME),
        (Z_PRIME, X_PRIME),
    ];
    pub const NAMES: [&str; 6] = ["x", "x'", "y", "y'", "z", "z'"];
}

fn gadget_edges(base: usize, out: &mut Vec<(usize, usize)>) {
    for (a, b) in gadget::EDGES {
        out.push((base + a, base + b));
    }
}

fn gadget_labels(index: usize, out: &mut Vec<String>) {
    for name in gadget::NAMES {
        let (stem, prime) = name.split_at(1);
        out.push(format!("{stem}{}{prime}", index + 1));
    }
}

/// Builds the requested graph.
pub fn named(family: &NamedFamily) -> Result<Graph, GraphError> {
    use NamedFamily::*;
    let invalid = |msg: &str| Err(GraphError::InvalidFamily(format!("{family}: {msg}")));
    match *family {
        Complete(n) => {
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::new(n, &edges)
        }
        Path(n) => {
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::new(n, &edges)
        }
        Cycle(n) => {
            if n < 3 {
                return invalid("a cycle needs at least 3 vertices");
            }
            let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
            Graph::new(n, &edges)
        }
        CompleteBipartite(a, b) => {
            let edges: Vec<_> = (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect();
            Graph::new(a + b, &edges)
        }
        Diamond => Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        CoP2PlusP3 => Ok(Graph::new(5, &[(0, 1), (2, 3), (3, 4)])?.complement()),
        CoC6 => Ok(named(&Cycle(6))?.complement()),
        FGadget => {
            let mut edges = Vec::new();
            gadget_edges(0, &mut edges);
            let mut labels = Vec::new();
            gadget_labels(0, &mut labels);
            Graph::new(gadget::SIZE, &edges)?.with_labels(labels)
        }
        Fn(n) => {
            if n < 2 {
                return invalid("F_n requires n >= 2");
            }
            let mut edges = Vec::new();
            let mut labels = Vec::new();
            for i in 0..n {
                gadget_edges(gadget::SIZE * i, &mut edges);
                gadget_labels(i, &mut labels);
                let next = (i + 1) % n;
                edges.push((
                    gadget::SIZE * i + gadget::X,
                    gadget::SIZE * next + gadget::X_PRIME,
                ));
            }
            Graph::new(gadget::SIZE * n, &edges)?.with_labels(labels)
        }
        Petersen => {
            let mut edges = Vec::new();
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((i + 5, (i + 2) % 5 + 5));
            }
            Graph::new(10, &edges)
        }
    }
}

impl fmt::Display for NamedFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use NamedFamily::*;
        match self {
            Complete(n) => write!(f, "complete:{n}"),
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            Diamond => write!(f, "diamond"),
            CoP2PlusP3 => write!(f, "co_P2_plus_P3"),
            CoC6 => write!(f, "co_C6"),
            FGadget => write!(f, "F_gadget"),
            Fn(n) => write!(f, "F_n:{n}"),
            Petersen => write!(f, "petersen"),
        }
    }
}

impl FromStr for NamedFamily {
    type Err = GraphError;

    /// Parses `tag[:p1[,p2]]`, e.g. `cycle:5`, `complete_bipartite:3,3`,
    /// `F_n:4`, `petersen`. Tags are case-insensitive.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || GraphError::InvalidFamily(s.to_string());
        let (tag, params) = match s.split_once(':') {
            Some((t, p)) => (t, p),
            None => (s, ""),
        };
        let nums: Vec<usize> = if params.is_empty() {
            Vec::new()
        } else {
            params
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| err()))
                .collect::<Result<_, _>>()?
        };
        let one = || match nums.as_slice() {
            [n] => Ok(*n),
            _ => Err(err()),
        };
        let none = |fam: NamedFamily| if nums.is_empty() { Ok(fam) } else { Err(err()) };
        use NamedFamily::*;
        match tag.to_ascii_lowercase().as_str() {
            "complete" | "k" => Ok(Complete(one()?)),
            "path" | "p" => Ok(Path(one()?)),
            "cycle" | "c" => Ok(Cycle(one()?)),
            "complete_bipartite" | "kbip" => match nums.as_slice() {
                [a, b] => Ok(CompleteBipartite(*a, *b)),
                _ => Err(err()),
            },
            "diamond" => none(Diamond),
            "co_p2_plus_p3" => none(CoP2PlusP3),
            "co_c6" => none(CoC6),
            "f_gadget" | "f" => none(FGadget),
            "f_n" | "fn" => Ok(Fn(one()?)),
            "petersen" => none(Petersen),
            _ => Err(err()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f2_is_cubic_with_unique_triangles() {
        let g = named(&NamedFamily::Fn(2)).unwrap();
        assert_eq!(g.n(), 12);
        assert!(g.degree_profile().cubic);
        for v in 0..g.n() {
            let tri = count_triangles_at(&g, v);
            assert_eq!(tri, 1, "vertex {v}");
        }
    }

    fn count_triangles_at(g: &Graph, v: usize) -> usize {
        let nb: Vec<usize> = g.neighbor_iter(v).collect();
        let mut count = 0;
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                if g.has_edge(nb[i], nb[j]) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn fn_has_2n_disjoint_triangles() {
        for n in 2..7 {
            let g = named(&NamedFamily::Fn(n)).unwrap();
            assert!(g.degree_profile().cubic);
            let triangles: usize = (0..g.n()).map(|v| count_triangles_at(&g, v)).sum::<usize>() / 3;
            assert_eq!(triangles, 2 * n);
            assert!((0..g.n()).all(|v| count_triangles_at(&g, v) == 1));
        }
    }

    #[test]
    fn small_families() {
        let d = named(&NamedFamily::Diamond).unwrap();
        assert_eq!((d.n(), d.edge_count()), (4, 5));
        let c = named(&NamedFamily::CoC6).unwrap();
        assert_eq!(c.n(), 6);
        assert!(c.degree_profile().cubic);
        // two disjoint triangles {0,2,4}, {1,3,5} joined by a perfect matching
        assert!(c.is_clique(&[0, 2, 4]) && c.is_clique(&[1, 3, 5]));
        let p = named(&NamedFamily::Petersen).unwrap();
        assert!(p.degree_profile().cubic);
        assert_eq!(p.edge_count(), 15);
        assert!(p.find_triangle().is_none());
    }

    #[test]
    fn invalid_parameters() {
        assert!(named(&NamedFamily::Fn(1)).is_err());
        assert!(named(&NamedFamily::Cycle(2)).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for fam in [
            NamedFamily::Complete(4),
            NamedFamily::CompleteBipartite(3, 3),
            NamedFamily::Fn(5),
            NamedFamily::CoC6,
            NamedFamily::CoP2PlusP3,
            NamedFamily::Petersen,
            NamedFamily::FGadget,
        ] {
            assert_eq!(fam.to_string().parse::<NamedFamily>().unwrap(), fam);
        }
        assert!("fn:x".parse::<NamedFamily>().is_err());
        assert!("diamond:3".parse::<NamedFamily>().is_err());
    }

    #[test]
    fn fn_labels_follow_gadget_layout() {
        let g = named(&NamedFamily::Fn(2)).unwrap();
        let labels = g.labels().unwrap();
        assert_eq!(&labels[..6], &["x1", "x1'", "y1", "y1'", "z1", "z1'"]);
        // x_1 ~ x'_2 and x_2 ~ x'_1
        assert!(g.has_edge(0, 7));
        assert!(g.has_edge(6, 1));
    }
}
