use fixedbitset::FixedBitSet;

use crate::graph::{find_isomorphism, Graph, VertexSet};

use super::{NotALineGraph, RootGraphMap};

/// Search state for a Krausz partition of one component: edges of the
/// component covered by cliques, each vertex in at most two of them.
struct Krausz<'a> {
    g: &'a Graph,
    /// `covered[u]` holds the neighbours `w` with `uw` already in a clique.
    covered: Vec<FixedBitSet>,
    count: Vec<u8>,
    cliques: Vec<Vec<usize>>,
}

impl<'a> Krausz<'a> {
    fn uncovered(&self, u: usize) -> FixedBitSet {
        let mut rest = self.g.neighbors(u).clone();
        rest.difference_with(&self.covered[u]);
        rest
    }

    /// Adds `members` as a clique if all its edges are uncovered and no member
    /// is already in two cliques.
    fn push(&mut self, members: Vec<usize>) -> bool {
        for (i, &a) in members.iter().enumerate() {
            if self.count[a] >= 2 {
                return false;
            }
            for &b in &members[i + 1..] {
                if !self.g.has_edge(a, b) || self.covered[a].contains(b) {
                    return false;
                }
            }
        }
        for (i, &a) in members.iter().enumerate() {
            self.count[a] += 1;
            for &b in &members[i + 1..] {
                self.covered[a].insert(b);
                self.covered[b].insert(a);
            }
        }
        self.cliques.push(members);
        true
    }

    fn pop(&mut self) {
        let members = self.cliques.pop().expect("pop after push");
        for (i, &a) in members.iter().enumerate() {
            self.count[a] -= 1;
            for &b in &members[i + 1..] {
                self.covered[a].set(b, false);
                self.covered[b].set(a, false);
            }
        }
    }

    fn search(&mut self, vertices: &[usize]) -> bool {
        // a vertex already in one clique has a forced second clique
        let pending: Vec<usize> = vertices
            .iter()
            .copied()
            .filter(|&u| !self.uncovered(u).is_clear())
            .collect();
        let Some(&first) = pending.first() else {
            return true;
        };
        if pending.iter().any(|&u| self.count[u] >= 2) {
            return false;
        }
        if let Some(&u) = pending.iter().find(|&&u| self.count[u] == 1) {
            let mut members: Vec<usize> = self.uncovered(u).ones().collect();
            members.push(u);
            members.sort_unstable();
            if !self.push(members) {
                return false;
            }
            if self.search(vertices) {
                return true;
            }
            self.pop();
            return false;
        }
        let u = first;
        // split the uncovered neighbourhood of u into at most two cliques:
        // a 2-colouring of the complement of G[N(u)]
        let nb: Vec<usize> = self.uncovered(u).ones().collect();
        let Some(splits) = two_clique_splits(self.g, &nb) else {
            return false;
        };
        for (a, b) in splits {
            let mut qa = a.clone();
            qa.push(u);
            qa.sort_unstable();
            if !self.push(qa) {
                continue;
            }
            let ok_b = if b.is_empty() {
                true
            } else {
                let mut qb = b.clone();
                qb.push(u);
                qb.sort_unstable();
                self.push(qb)
            };
            if ok_b {
                if self.search(vertices) {
                    return true;
                }
                if !b.is_empty() {
                    self.pop();
                }
            }
            self.pop();
        }
        false
    }
}

/// Ways to split `nb` into two cliques `(A, B)` with `nb[0] ∈ A`, fewest
/// flipped complement components first. `None` if no split exists.
fn two_clique_splits(g: &Graph, nb: &[usize]) -> Option<Splits> {
    let k = nb.len();
    // components of the complement of G[nb], each 2-coloured
    let mut color = vec![u8::MAX; k];
    let mut comps: Vec<Vec<(usize, bool)>> = Vec::new();
    for s in 0..k {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for y in 0..k {
                if y == x || g.has_edge(nb[x], nb[y]) {
                    continue;
                }
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    comp.push(y);
                } else if color[y] == color[x] {
                    return None;
                }
            }
        }
        comps.push(comp.into_iter().map(|x| (nb[x], color[x] == 0)).collect());
    }
    Some(Splits {
        comps,
        flips: 0,
        chosen: Vec::new(),
        started: false,
    })
}

/// Lazy enumeration of flip sets over components `1..`, by increasing size.
struct Splits {
    /// Per complement component: vertex and whether it has colour 0.
    comps: Vec<Vec<(usize, bool)>>,
    flips: usize,
    chosen: Vec<usize>,
    started: bool,
}

impl Splits {
    fn advance(&mut self) -> bool {
        let free = self.comps.len().saturating_sub(1);
        if !self.started {
            self.started = true;
            return true;
        }
        // next combination of `flips` indices from 1..=free
        let k = self.chosen.len();
        let mut i = k;
        while i > 0 {
            i -= 1;
            if self.chosen[i] < free - (k - 1 - i) {
                self.chosen[i] += 1;
                for j in i + 1..k {
                    self.chosen[j] = self.chosen[j - 1] + 1;
                }
                return true;
            }
        }
        self.flips += 1;
        if self.flips > free {
            return false;
        }
        self.chosen = (1..=self.flips).collect();
        true
    }
}

impl Iterator for Splits {
    type Item = (Vec<usize>, Vec<usize>);

    fn next(&mut self) -> Option<Self::Item> {
        if !self.advance() {
            return None;
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (ci, comp) in self.comps.iter().enumerate() {
            let flip = self.chosen.contains(&ci);
            for &(v, first_color) in comp {
                if first_color != flip {
                    a.push(v);
                } else {
                    b.push(v);
                }
            }
        }
        a.sort_unstable();
        b.sort_unstable();
        Some((a, b))
    }
}

/// Krausz cliques of `g`, one search per component, or `None`.
fn krausz_partition(g: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    let mut state = Krausz {
        g,
        covered: vec![FixedBitSet::with_capacity(n); n],
        count: vec![0; n],
        cliques: Vec::new(),
    };
    for comp in g.connected_components() {
        if !state.search(&comp) {
            return None;
        }
    }
    Some(state.cliques)
}

/// Root graph for `g` from its Krausz cliques, padding each vertex up to two
/// cliques with fresh single-vertex ones.
fn root_from_cliques(g: &Graph, cliques: &[Vec<usize>]) -> (Graph, Vec<(usize, usize)>) {
    let n = g.n();
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, q) in cliques.iter().enumerate() {
        for &v in q {
            ends[v].push(i);
        }
    }
    let mut next = cliques.len();
    let mut to_edge = Vec::with_capacity(n);
    for e in ends.iter_mut() {
        while e.len() < 2 {
            e.push(next);
            next += 1;
        }
        to_edge.push((e[0].min(e[1]), e[0].max(e[1])));
    }
    let root = Graph::new(next, &to_edge).expect("Krausz cliques give a simple root");
    (root, to_edge)
}

/// Smallest-first greedy shrink to an inclusion-minimal induced subgraph that
/// is not a line graph.
fn minimal_obstruction(g: &Graph) -> VertexSet {
    if let Some(claw) = find_induced_claw(g) {
        return VertexSet::from(claw.to_vec());
    }
    let mut keep: Vec<usize> = (0..g.n()).collect();
    let mut i = 0;
    while i < keep.len() {
        let mut trial = keep.clone();
        trial.remove(i);
        if krausz_partition(&g.induced_subgraph(&trial)).is_none() {
            keep = trial;
        } else {
            i += 1;
        }
    }
    VertexSet::from(keep)
}

/// An induced `K_{1,3}` as `[center, a, b, c]`.
pub fn find_induced_claw(g: &Graph) -> Option<[usize; 4]> {
    for c in 0..g.n() {
        let nb: Vec<usize> = g.neighbor_iter(c).collect();
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                if let Some(&d) = nb[j + 1..]
                    .iter()
                    .find(|&&d| !g.has_edge(a, d) && !g.has_edge(b, d))
                {
                    return Some([c, a, b, d]);
                }
            }
        }
    }
    None
}

pub fn recognize_line_graph(g: &Graph) -> Result<RootGraphMap, NotALineGraph> {
    if let Some(claw) = find_induced_claw(g) {
        return Err(NotALineGraph {
            obstruction: VertexSet::from(claw.to_vec()),
        });
    }
    let Some(cliques) = krausz_partition(g) else {
        return Err(NotALineGraph {
            obstruction: minimal_obstruction(g),
        });
    };
    let (root, to_edge) = root_from_cliques(g, &cliques);
    let map = RootGraphMap { root, to_edge };
    assert!(
        map.verify(g),
        "Krausz root does not reproduce the input graph"
    );
    debug_assert!(find_isomorphism(g, &map.root.line_graph().graph).is_some());
    Ok(map)
}
