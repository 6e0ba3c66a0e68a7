use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strong_cliques::graph::enumerate::{labeled_graphs, random_graph};
use strong_cliques::matching::{
    exists_matching_saturating, has_perfect_matching, max_weight_matching, maximum_matching,
    WeightedGraph,
};
use strong_cliques::Graph;

/// Maximum over all matchings of the summed weight, by edge-inclusion search.
fn brute_max_weight(n: usize, edges: &[(usize, usize, u64)]) -> u64 {
    fn rec(edges: &[(usize, usize, u64)], i: usize, used: &mut Vec<bool>) -> u64 {
        if i == edges.len() {
            return 0;
        }
        let skip = rec(edges, i + 1, used);
        let (u, v, w) = edges[i];
        if used[u] || used[v] {
            return skip;
        }
        used[u] = true;
        used[v] = true;
        let take = w + rec(edges, i + 1, used);
        used[u] = false;
        used[v] = false;
        skip.max(take)
    }
    rec(edges, 0, &mut vec![false; n])
}

fn check(g: &Graph, wg: &WeightedGraph) {
    let (m, w) = max_weight_matching(wg);
    assert!(m.is_valid_in(g), "invalid matching on {g:?}");
    assert_eq!(w, m.weight_in(wg));
    assert_eq!(
        w,
        brute_max_weight(g.n(), wg.weighted_edges()),
        "{g:?} {:?}",
        wg.weighted_edges()
    );
}

#[test]
fn unit_weights_on_all_labeled_graphs_of_order_six() {
    for g in labeled_graphs(6) {
        check(&g, &WeightedGraph::unit(&g));
        let card = maximum_matching(&g);
        assert!(card.is_valid_in(&g));
        assert_eq!(
            card.len() as u64,
            brute_max_weight(6, WeightedGraph::unit(&g).weighted_edges())
        );
        assert_eq!(has_perfect_matching(&g).is_some(), 2 * card.len() == 6);
    }
}

#[test]
fn random_weights_seeded_sweep() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for round in 0..3000 {
        let n = 2 + round % 8;
        let g = random_graph(n, rng.gen_range(0.2..0.9), &mut rng);
        let wg = WeightedGraph::from_fn(&g, |_, _| rng.gen_range(0..=5));
        check(&g, &wg);
    }
}

#[test]
fn odd_order_has_no_perfect_matching() {
    for n in [1, 3, 5, 7] {
        let k = Graph::new(
            n,
            &(0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(has_perfect_matching(&k).is_none());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn engine_matches_brute_force(n in 1usize..=8, mask in any::<u64>(), seed in any::<u64>()) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate()
            .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let wg = WeightedGraph::from_fn(&g, |_, _| rng.gen_range(0..=5));
        let (m, w) = max_weight_matching(&wg);
        prop_assert!(m.is_valid_in(&g));
        prop_assert_eq!(w, m.weight_in(&wg));
        prop_assert_eq!(w, brute_max_weight(n, wg.weighted_edges()));
    }

    #[test]
    fn saturation_agrees_with_brute_force(n in 2usize..=7, mask in any::<u64>(), smask in any::<u8>(), t in 0usize..=4) {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let edges: Vec<(usize, usize)> = pairs.iter().enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        let s: Vec<usize> = (0..n).filter(|&v| smask >> v & 1 == 1).collect();
        let forbidden: Vec<(usize, usize)> = edges.iter().copied().step_by(3).collect();
        let allowed: Vec<(usize, usize, u64)> = edges.iter()
            .filter(|e| !forbidden.contains(e))
            .map(|&(u, v)| (u, v, s.contains(&u) as u64 + s.contains(&v) as u64))
            .collect();
        let best = brute_max_weight(n, &allowed);
        let threshold = t.min(s.len());
        let got = exists_matching_saturating(&g, &s, &forbidden, Some(threshold));
        prop_assert_eq!(got.is_some(), best >= threshold as u64);
        if let Some(m) = got {
            prop_assert!(m.is_valid_in(&g));
            prop_assert!(m.edges().iter().all(|e| !forbidden.contains(e)));
            prop_assert!(s.iter().filter(|&&v| m.saturates(v)).count() >= threshold);
        }
        let full = exists_matching_saturating(&g, &s, &forbidden, None);
        prop_assert_eq!(full.is_some(), best >= s.len() as u64);
    }
}
