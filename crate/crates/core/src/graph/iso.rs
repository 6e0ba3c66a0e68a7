//! Small-graph isomorphism: colour refinement for invariants, then
//! backtracking over colour-compatible assignments.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::Graph;

fn hash_of<T: Hash>(t: &T) -> u64 {
    let mut h = DefaultHasher::new();
    t.hash(&mut h);
    h.finish()
}

/// Stable colour refinement. Colours are hashes of the refinement history, so
/// they are comparable between different graphs.
fn refine(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let mut colors: Vec<u64> = (0..n).map(|v| hash_of(&g.degree(v))).collect();
    let mut classes = count_classes(&colors);
    loop {
        let next: Vec<u64> = (0..n)
            .map(|v| {
                let mut nb: Vec<u64> = g.neighbor_iter(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                hash_of(&(colors[v], nb))
            })
            .collect();
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return colors;
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[u64]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Isomorphism-invariant fingerprint; equal for isomorphic graphs.
pub fn invariant_hash(g: &Graph) -> u64 {
    let mut colors = refine(g);
    colors.sort_unstable();
    hash_of(&(g.n(), g.edge_count(), colors))
}

/// A bijection `map` with `g.has_edge(u, v) == h.has_edge(map[u], map[v])`.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let cg = refine(g);
    let ch = refine(h);
    let mut sg = cg.clone();
    let mut sh = ch.clone();
    sg.sort_unstable();
    sh.sort_unstable();
    if sg != sh {
        return None;
    }
    // Order g's vertices so each one (after the first in its component) is
    // adjacent to an earlier one; start from the rarest colour.
    let freq = |c: u64| cg.iter().filter(|&&x| x == c).count();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (freq(cg[v]), v))
            .unwrap();
        placed[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for w in g.neighbor_iter(u) {
                if !placed[w] {
                    placed[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(g, h, &cg, &ch, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    g: &Graph,
    h: &Graph,
    cg: &[u64],
    ch: &[u64],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let u = order[depth];
    for x in 0..h.n() {
        if used[x] || ch[x] != cg[u] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&w| g.has_edge(u, w) == h.has_edge(x, map[w]));
        if !consistent {
            continue;
        }
        map[u] = x;
        used[x] = true;
        if assign(g, h, cg, ch, order, depth + 1, map, used) {
            return true;
        }
        used[x] = false;
        map[u] = usize::MAX;
    }
    false
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    find_isomorphism(g, h).is_some()
}
