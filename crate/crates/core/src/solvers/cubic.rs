use serde::{Deserialize, Serialize};

use crate::graph::families::gadget;
use crate::graph::{find_isomorphism, named, Graph, NamedFamily};

use super::localize::strong_cliques_subcubic;
use super::SolverError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CubicFamily {
    K33,
    K4,
    CoC6,
    Fn(usize),
}

impl CubicFamily {
    pub fn named(self) -> NamedFamily {
        match self {
            CubicFamily::K33 => NamedFamily::CompleteBipartite(3, 3),
            CubicFamily::K4 => NamedFamily::Complete(4),
            CubicFamily::CoC6 => NamedFamily::CoC6,
            CubicFamily::Fn(n) => NamedFamily::Fn(n),
        }
    }
}

impl std::fmt::Display for CubicFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CubicFamily::K33 => write!(f, "K33"),
            CubicFamily::K4 => write!(f, "K4"),
            CubicFamily::CoC6 => write!(f, "coC6"),
            CubicFamily::Fn(n) => write!(f, "Fn({n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CubicClassification {
    /// `isomorphism[v]` is the image of `v` in the named family graph.
    Family {
        family: CubicFamily,
        isomorphism: Vec<usize>,
    },
    /// `uncovered` lies in no strong clique.
    NotLocalizable { uncovered: usize },
}

impl CubicClassification {
    pub fn is_localizable(&self) -> bool {
        matches!(self, CubicClassification::Family { .. })
    }

    pub fn tag(&self) -> String {
        match self {
            CubicClassification::Family { family, .. } => family.to_string(),
            CubicClassification::NotLocalizable { .. } => "NotLocalizable".to_string(),
        }
    }
}

pub fn classify_cubic(g: &Graph) -> Result<CubicClassification, SolverError> {
    if !g.degree_profile().cubic {
        return Err(SolverError::NotCubic);
    }
    if !g.is_connected() {
        return Err(SolverError::NotConnected);
    }
    let fixed = [CubicFamily::K4, CubicFamily::K33, CubicFamily::CoC6];
    for family in fixed {
        let h = named(&family.named()).expect("fixed family");
        if let Some(isomorphism) = find_isomorphism(g, &h) {
            return Ok(CubicClassification::Family {
                family,
                isomorphism,
            });
        }
    }
    if let Some((n, isomorphism)) = match_fn(g) {
        return Ok(CubicClassification::Family {
            family: CubicFamily::Fn(n),
            isomorphism,
        });
    }
    let mut covered = vec![false; g.n()];
    for c in strong_cliques_subcubic(g) {
        for &v in c.iter() {
            covered[v] = true;
        }
    }
    match covered.iter().position(|&c| !c) {
        Some(uncovered) => Ok(CubicClassification::NotLocalizable { uncovered }),
        None => Err(SolverError::Inconsistent(
            "cubic graph outside the listed families has every vertex in a strong clique".into(),
        )),
    }
}

/// Structural match against `F_n`: every vertex lies in exactly one triangle,
/// triangles pair up through two edges into gadgets, and the remaining edges
/// link the gadgets into one cycle. Returns `n` and a map onto `F_n`.
fn match_fn(g: &Graph) -> Option<(usize, Vec<usize>)> {
    let n = g.n();
    if !n.is_multiple_of(6) || n < 12 {
        return None;
    }
    // the triangle through each vertex, as its two other vertices
    let mut tri = vec![[usize::MAX; 2]; n];
    for v in 0..n {
        let nb: Vec<usize> = g.neighbor_iter(v).collect();
        let mut found = Vec::new();
        for i in 0..3 {
            for j in i + 1..3 {
                if g.has_edge(nb[i], nb[j]) {
                    found.push([nb[i], nb[j]]);
                }
            }
        }
        if found.len() != 1 {
            return None;
        }
        tri[v] = found[0];
    }
    // third neighbour, outside the triangle
    let ext: Vec<usize> = (0..n)
        .map(|v| {
            g.neighbor_iter(v)
                .find(|u| !tri[v].contains(u))
                .expect("cubic")
        })
        .collect();
    let members = |v: usize| {
        let mut t = [v, tri[v][0], tri[v][1]];
        t.sort_unstable();
        t
    };
    // in a gadget triangle exactly two vertices reach the partner triangle
    let split = |v: usize| -> Option<(usize, [usize; 2])> {
        let t = members(v);
        for &x in &t {
            let others: Vec<usize> = t.iter().copied().filter(|&y| y != x).collect();
            let partner = members(ext[others[0]]);
            if members(ext[others[1]]) == partner && partner != t && !partner.contains(&ext[x]) {
                return Some((x, [others[0], others[1]]));
            }
        }
        None
    };
    let gadgets = n / 6;
    let mut map = vec![usize::MAX; n];
    // gadget 0 takes the triangle of vertex 0 as its unprimed side
    let mut x = split(0)?.0;
    for i in 0..gadgets {
        let (x_here, [y, z]) = split(x)?;
        debug_assert_eq!(x_here, x);
        let (x_prime, _) = split(ext[y])?;
        let base = gadget::SIZE * i;
        for (v, role) in [
            (x, gadget::X),
            (x_prime, gadget::X_PRIME),
            (y, gadget::Y),
            (ext[y], gadget::Y_PRIME),
            (z, gadget::Z),
            (ext[z], gadget::Z_PRIME),
        ] {
            if map[v] != usize::MAX {
                return None;
            }
            map[v] = base + role;
        }
        // x links to the primed side of the next gadget
        let next_prime = ext[x];
        let (np, [a, _]) = split(next_prime)?;
        if np != next_prime {
            return None;
        }
        x = split(ext[a])?.0;
        if i + 1 == gadgets && map[x] != gadget::X {
            return None;
        }
    }
    let target = named(&NamedFamily::Fn(gadgets)).ok()?;
    let preserves = g
        .edges()
        .into_iter()
        .all(|(u, v)| target.has_edge(map[u], map[v]));
    preserves.then_some((gadgets, map))
}
