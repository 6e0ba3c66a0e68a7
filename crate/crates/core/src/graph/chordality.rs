use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum HoleSide {
    Graph,
    Complement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    WeaklyChordal,
    /// An induced cycle of length at least 5, listed in cycle order, found in
    /// the graph or in its complement.
    Hole {
        cycle: Vec<usize>,
        side: HoleSide,
    },
}

impl Chordality {
    pub fn is_weakly_chordal(&self) -> bool {
        matches!(self, Chordality::WeaklyChordal)
    }
}

/// Neither the graph nor its complement has an induced cycle of length >= 5.
///
/// Exhaustive induced-path search; meant for graphs of a few dozen vertices.
pub fn is_weakly_chordal(g: &Graph) -> Chordality {
    if let Some(cycle) = find_hole(g, 5) {
        return Chordality::Hole {
            cycle,
            side: HoleSide::Graph,
        };
    }
    if let Some(cycle) = find_hole(&g.complement(), 5) {
        return Chordality::Hole {
            cycle,
            side: HoleSide::Complement,
        };
    }
    Chordality::WeaklyChordal
}

/// Finds an induced cycle of length at least `min_len` (>= 4) whose smallest
/// vertex is the search root.
fn find_hole(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    let n = g.n();
    for s in 0..n {
        // vertices available to the path: ids above s
        let mut allowed = FixedBitSet::with_capacity(n);
        allowed.insert_range(s + 1..);
        for p1 in g.neighbor_iter(s).filter(|&v| v > s) {
            let mut path = vec![s, p1];
            // vertices that can no longer appear: the path and N[s] minus the
            // endpoints handled explicitly
            let mut blocked = g.closed_neighborhood(s);
            blocked.insert(p1);
            if let Some(c) = extend_hole(g, &allowed, &mut path, &blocked, min_len) {
                return Some(c);
            }
        }
    }
    None
}

fn extend_hole(
    g: &Graph,
    allowed: &FixedBitSet,
    path: &mut Vec<usize>,
    blocked: &FixedBitSet,
    min_len: usize,
) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().unwrap();
    let prev = path[path.len() - 2];
    // candidates: neighbours of `last` not adjacent to any interior vertex
    // except `last`, and not on the path
    let mut cand = g.neighbors(last).clone();
    cand.intersect_with(allowed);
    cand.set(prev, false);
    for x in cand.ones() {
        if path.contains(&x) {
            continue;
        }
        let touches_interior = path[1..path.len() - 1].iter().any(|&p| g.has_edge(p, x));
        if touches_interior {
            continue;
        }
        if g.has_edge(s, x) {
            // closes the cycle s, p1, ..., last, x
            if path.len() + 1 >= min_len && path.len() >= 2 && !g.has_edge(s, last) {
                let mut cycle = path.clone();
                cycle.push(x);
                return Some(cycle);
            }
            continue;
        }
        if blocked.contains(x) {
            continue;
        }
        let mut next_blocked = blocked.clone();
        next_blocked.insert(x);
        path.push(x);
        if let Some(c) = extend_hole(g, allowed, path, &next_blocked, min_len) {
            return Some(c);
        }
        path.pop();
    }
    None
}

/// An induced C4 `[a, b, c, d]` (in cycle order), if one exists.
pub fn find_induced_c4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for a in 0..n {
        for c in a + 1..n {
            if g.has_edge(a, c) {
                continue;
            }
            let mut common = g.neighbors(a).clone();
            common.intersect_with(g.neighbors(c));
            let common: Vec<usize> = common.ones().collect();
            for (i, &b) in common.iter().enumerate() {
                if let Some(&d) = common[i + 1..].iter().find(|&&d| !g.has_edge(b, d)) {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, NamedFamily};

    fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
        let k = cycle.len();
        (0..k).all(|i| {
            (0..k).all(|j| {
                if i == j {
                    return true;
                }
                let consecutive = (i + 1) % k == j || (j + 1) % k == i;
                g.has_edge(cycle[i], cycle[j]) == consecutive
            })
        })
    }

    #[test]
    fn c5_is_its_own_obstruction() {
        let c5 = named(&NamedFamily::Cycle(5)).unwrap();
        match is_weakly_chordal(&c5) {
            Chordality::Hole { cycle, side } => {
                assert_eq!(side, HoleSide::Graph);
                assert_eq!(cycle.len(), 5);
                assert!(is_induced_cycle(&c5, &cycle));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn small_examples() {
        assert!(is_weakly_chordal(&named(&NamedFamily::Path(4)).unwrap()).is_weakly_chordal());
        assert!(is_weakly_chordal(&named(&NamedFamily::Cycle(4)).unwrap()).is_weakly_chordal());
        // complement of C7 has an anti-hole; C7 itself is a hole
        let c7 = named(&NamedFamily::Cycle(7)).unwrap();
        let co = c7.complement();
        match is_weakly_chordal(&co) {
            Chordality::Hole { cycle, side } => {
                assert_eq!(side, HoleSide::Complement);
                assert!(is_induced_cycle(&c7, &cycle));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(!is_weakly_chordal(&named(&NamedFamily::Petersen).unwrap()).is_weakly_chordal());
    }

    #[test]
    fn hole_search_matches_brute_force() {
        // brute force: some subset of size >= 5 induces a cycle
        fn brute(g: &Graph) -> bool {
            let n = g.n();
            (0u32..1 << n).any(|mask| {
                let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
                if vs.len() < 5 {
                    return false;
                }
                let sub = g.induced_subgraph(&vs);
                sub.is_connected() && (0..sub.n()).all(|v| sub.degree(v) == 2)
            })
        }
        for g in crate::graph::enumerate::labeled_graphs(6).step_by(7) {
            assert_eq!(find_hole(&g, 5).is_some(), brute(&g), "{g:?}");
        }
    }

    #[test]
    fn induced_c4() {
        let c4 = named(&NamedFamily::Cycle(4)).unwrap();
        let w = find_induced_c4(&c4).unwrap();
        assert!(is_induced_cycle(&c4, &w));
        assert!(find_induced_c4(&named(&NamedFamily::Diamond).unwrap()).is_none());
        assert!(find_induced_c4(&named(&NamedFamily::Cycle(5)).unwrap()).is_none());
    }
}
