//! Reference oracles computed straight from the definitions by subset
//! enumeration. Everything here is exponential in the order and meant for
//! graphs on at most about 16 vertices.

use strong_cliques::Graph;

pub type Mask = u64;

pub fn mask_of(vs: &[usize]) -> Mask {
    vs.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn vertices(mask: Mask) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn submasks(mask: Mask) -> impl Iterator<Item = Mask> {
    let mut next = Some(mask);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & mask)
        };
        Some(cur)
    })
}

/// A graph with its maximal independent sets listed once.
pub struct Brute {
    pub n: usize,
    pub adj: Vec<Mask>,
    pub mis: Vec<Mask>,
}

impl Brute {
    pub fn new(g: &Graph) -> Brute {
        let n = g.n();
        assert!(n <= 20, "brute force is limited to 20 vertices");
        let adj: Vec<Mask> = (0..n)
            .map(|v| mask_of(&g.neighbor_iter(v).collect::<Vec<_>>()))
            .collect();
        let mut b = Brute {
            n,
            adj,
            mis: Vec::new(),
        };
        b.mis = (0..1u64 << n)
            .filter(|&m| b.is_maximal_independent(m))
            .collect();
        b
    }

    pub fn full(&self) -> Mask {
        (1u64 << self.n) - 1
    }

    pub fn is_independent(&self, m: Mask) -> bool {
        vertices(m).iter().all(|&v| self.adj[v] & m == 0)
    }

    pub fn is_clique(&self, m: Mask) -> bool {
        vertices(m)
            .iter()
            .all(|&v| (m & !(1 << v)) & !self.adj[v] == 0)
    }

    pub fn dominates(&self, set: Mask, target: Mask) -> bool {
        vertices(target)
            .iter()
            .all(|&v| set >> v & 1 == 1 || self.adj[v] & set != 0)
    }

    pub fn is_maximal_independent(&self, m: Mask) -> bool {
        self.is_independent(m) && self.dominates(m, self.full())
    }

    pub fn cliques(&self) -> Vec<Mask> {
        (1..1u64 << self.n).filter(|&m| self.is_clique(m)).collect()
    }

    pub fn maximal_cliques(&self) -> Vec<Mask> {
        let all = self.cliques();
        all.iter()
            .copied()
            .filter(|&c| (0..self.n).all(|v| c >> v & 1 == 1 || self.adj[v] & c != c))
            .collect()
    }

    /// Meets every maximal independent set.
    pub fn is_strong(&self, c: Mask) -> bool {
        self.mis.iter().all(|&i| i & c != 0)
    }

    pub fn strong_cliques(&self) -> Vec<Mask> {
        self.cliques()
            .into_iter()
            .filter(|&c| self.is_strong(c))
            .collect()
    }

    /// Some independent set outside `c` dominates `c`.
    pub fn dominated_from_outside(&self, c: Mask) -> bool {
        submasks(self.full() & !c)
            .any(|i| self.is_independent(i) && vertices(c).iter().all(|&v| self.adj[v] & i != 0))
    }

    pub fn alpha(&self) -> usize {
        self.mis
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn idom(&self) -> usize {
        self.mis
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn well_covered(&self) -> bool {
        self.alpha() == self.idom()
    }

    /// Clique cover number by dynamic programming over vertex subsets.
    pub fn theta(&self) -> usize {
        let full = self.full();
        let mut best = vec![usize::MAX; 1 << self.n];
        best[0] = 0;
        for m in 1..=full {
            let low = m & m.wrapping_neg();
            best[m as usize] = submasks(m)
                .filter(|&s| s & low != 0 && self.is_clique(s))
                .map(|s| best[(m ^ s) as usize] + 1)
                .min()
                .expect("singletons are cliques");
        }
        best[full as usize]
    }

    /// Every partition of the vertex set into exactly `k` cliques.
    pub fn clique_partitions(&self, k: usize) -> Vec<Vec<Mask>> {
        fn rec(b: &Brute, rest: Mask, k: usize, cur: &mut Vec<Mask>, out: &mut Vec<Vec<Mask>>) {
            if rest == 0 {
                if cur.len() == k {
                    out.push(cur.clone());
                }
                return;
            }
            if cur.len() == k {
                return;
            }
            let low = rest & rest.wrapping_neg();
            for s in submasks(rest).filter(|&s| s & low != 0 && b.is_clique(s)) {
                cur.push(s);
                rec(b, rest ^ s, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(self, self.full(), k, &mut Vec::new(), &mut out);
        out
    }

    /// Some partition of the vertex set into strong cliques.
    pub fn localizable(&self) -> bool {
        let strong = self.strong_cliques();
        fn rec(strong: &[Mask], rest: Mask) -> bool {
            if rest == 0 {
                return true;
            }
            let low = rest & rest.wrapping_neg();
            strong
                .iter()
                .any(|&s| s & low != 0 && s & !rest == 0 && rec(strong, rest ^ s))
        }
        rec(&strong, self.full())
    }
}

/// Heaviest matching by trying every edge subset.
pub fn max_weight_matching(n: usize, edges: &[(usize, usize, u64)]) -> u64 {
    fn rec(edges: &[(usize, usize, u64)], used: Mask) -> u64 {
        let Some((&(u, v, w), rest)) = edges.split_first() else {
            return 0;
        };
        let skip = rec(rest, used);
        if used >> u & 1 == 1 || used >> v & 1 == 1 {
            return skip;
        }
        skip.max(w + rec(rest, used | 1 << u | 1 << v))
    }
    assert!(n <= 64);
    rec(edges, 0)
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    fn rec(g: &Graph, free: Mask) -> bool {
        if free == 0 {
            return true;
        }
        let u = free.trailing_zeros() as usize;
        g.neighbor_iter(u)
            .any(|v| free >> v & 1 == 1 && rec(g, free & !(1 << u) & !(1 << v)))
    }
    rec(g, (1u64 << g.n()) - 1)
}

/// All matchings of `g` that no edge can extend, as edge lists.
pub fn maximal_matchings(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let edges = g.edges();
    let m = edges.len();
    assert!(m <= 20);
    (0..1u64 << m)
        .filter_map(|sel| {
            let chosen: Vec<(usize, usize)> = vertices(sel).into_iter().map(|i| edges[i]).collect();
            let used = chosen
                .iter()
                .fold(0u64, |acc, &(u, v)| acc | 1 << u | 1 << v);
            let disjoint = used.count_ones() as usize == 2 * chosen.len();
            let maximal = edges
                .iter()
                .all(|&(u, v)| used >> u & 1 == 1 || used >> v & 1 == 1);
            (disjoint && maximal).then_some(chosen)
        })
        .collect()
}

/// Satisfiability by trying every assignment.
pub fn satisfiable(num_vars: usize, clauses: &[[i32; 3]]) -> bool {
    (0..1u64 << num_vars).any(|a| {
        clauses.iter().all(|c| {
            c.iter()
                .any(|&l| (a >> (l.unsigned_abs() - 1) & 1 == 1) == (l > 0))
        })
    })
}
