//! Class-specific solvers and the router against subset enumeration.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use strong_cliques::graph::enumerate::{
    connected_subcubic, labeled_graphs, random_connected_cubic, random_graph, unlabeled_graphs,
};
use strong_cliques::graph::{find_induced_c4, is_isomorphic, named};
use strong_cliques::solvers::{
    classify_cubic, localizable_alpha2, localizable_subcubic, sce_bounded_omega, sce_c4free,
    sce_coline, sce_linegraph, solve_oracle, Certificate, CubicClassification, Method, Query,
    Solver, SolverConfig, SolverError, Verdict,
};
use strong_cliques::{Graph, NamedFamily, VertexSet};
use testkit::{mask_of, vertices, Brute, Mask};

fn set(m: Mask) -> VertexSet {
    VertexSet::from(vertices(m))
}

fn extends(b: &Brute, c: Mask) -> bool {
    b.strong_cliques().iter().any(|&s| s & c == c)
}

fn omega(b: &Brute) -> usize {
    b.maximal_cliques()
        .iter()
        .map(|c| c.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Checks a certificate with the reference oracles only.
fn check_certificate(b: &Brute, g: &Graph, q: &Query, v: &Verdict) {
    let strong = |s: &VertexSet| {
        let m = mask_of(s);
        assert!(
            b.is_clique(m) && b.is_strong(m),
            "{s} is not a strong clique of {g:?}"
        );
    };
    let avoiding = |w: &VertexSet, c: &VertexSet| {
        let m = mask_of(w);
        assert!(
            b.mis.contains(&m) && m & mask_of(c) == 0,
            "{w} does not avoid {c}"
        );
    };
    let Some(cert) = &v.certificate else {
        return;
    };
    match (q, v.answer, cert) {
        (Query::StrongClique(c), true, Certificate::StrongClique(s)) => {
            assert_eq!(c, s);
            strong(s)
        }
        (Query::StrongClique(c), false, Certificate::IndependentSet(w)) => avoiding(w, c),
        (Query::Extension(c), true, Certificate::StrongClique(s)) => {
            assert!(c.is_subset(s));
            strong(s)
        }
        (Query::Existence, true, Certificate::StrongClique(s)) => strong(s),
        (Query::VertexCover, true, Certificate::StrongCliques(list)) => {
            assert_eq!(list.len(), g.n());
            list.iter().enumerate().for_each(|(v, s)| {
                assert!(s.contains(v));
                strong(s)
            });
        }
        (Query::EdgeCover, true, Certificate::StrongCliques(list)) => {
            for ((u, w), s) in g.edges().into_iter().zip(list) {
                assert!(s.contains(u) && s.contains(w));
                strong(s)
            }
        }
        (Query::VertexCover | Query::EdgeCover, false, Certificate::Uncovered(t)) => {
            assert!(!extends(b, mask_of(t)), "{t} does lie in a strong clique")
        }
        (Query::Partition(_) | Query::PartitionExistence, true, Certificate::Partition(parts)) => {
            let cover = parts.iter().map(|p| mask_of(p)).fold(0, |acc, m| {
                assert_eq!(acc & m, 0);
                acc | m
            });
            assert_eq!(cover, b.full());
            parts.iter().for_each(strong);
        }
        (Query::Partition(parts), false, Certificate::IndependentSet(w)) => {
            let part = parts
                .iter()
                .find(|p| p.is_disjoint(w))
                .expect("some part avoided");
            avoiding(w, part)
        }
        other => panic!("unexpected certificate shape {other:?}"),
    }
}

fn ext_query(c: Mask) -> Query {
    Query::Extension(set(c))
}

fn check_extension(b: &Brute, g: &Graph, c: Mask, v: Verdict) {
    assert_eq!(v.answer, extends(b, c), "{g:?} clique {:?}", vertices(c));
    check_certificate(b, g, &ext_query(c), &v);
}

#[test]
fn bounded_omega_extension() {
    let graphs = labeled_graphs(5).chain((6..=7).flat_map(|n| unlabeled_graphs(n, None)));
    for g in graphs {
        let b = Brute::new(&g);
        let w = omega(&b).max(1);
        for c in b.cliques() {
            check_extension(&b, &g, c, sce_bounded_omega(&g, &vertices(c), w).unwrap());
        }
        if w > 1 {
            let err = sce_bounded_omega(&g, &[0], w - 1).unwrap_err();
            assert!(matches!(err, SolverError::OmegaExceeds { .. }));
        }
    }
}

#[test]
fn c4_free_extension() {
    let mut c4_free = 0;
    for g in (1..=7).flat_map(|n| unlabeled_graphs(n, None)) {
        let b = Brute::new(&g);
        match find_induced_c4(&g) {
            None => {
                c4_free += 1;
                for c in b.cliques() {
                    let v = sce_c4free(&g, &vertices(c)).unwrap();
                    assert_eq!(v.method, Method::C4Free);
                    check_extension(&b, &g, c, v);
                }
            }
            Some(q) => {
                assert!(q.iter().all(|&v| v < g.n()));
                assert!(matches!(
                    sce_c4free(&g, &[0]),
                    Err(SolverError::InducedC4(_))
                ));
            }
        }
    }
    assert!(c4_free > 300);
}

#[test]
fn line_and_co_line_extension() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let roots = (2..=6)
        .flat_map(|n| unlabeled_graphs(n, None))
        .filter(|h| h.is_connected());
    for h in roots {
        let l = h.line_graph().graph;
        let mut perm: Vec<usize> = (0..l.n()).collect();
        for i in (1..perm.len()).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let l = l.permute(&perm);
        let co = l.complement();
        let (bl, bc) = (Brute::new(&l), Brute::new(&co));
        for c in bl.cliques() {
            check_extension(&bl, &l, c, sce_linegraph(&l, &vertices(c)).unwrap());
        }
        for c in bc.cliques() {
            check_extension(&bc, &co, c, sce_coline(&co, &vertices(c)).unwrap());
        }
    }
    let claw = named(&NamedFamily::CompleteBipartite(1, 3)).unwrap();
    assert!(matches!(
        sce_linegraph(&claw, &[0]),
        Err(SolverError::NotLineGraph(_))
    ));
    assert!(matches!(
        sce_coline(&claw.complement(), &[1]),
        Err(SolverError::ComplementNotLineGraph(_))
    ));
}

#[test]
fn subcubic_localizability() {
    let mut counts = [0usize; 2];
    let graphs = (1..=9)
        .flat_map(connected_subcubic)
        .chain((2..=7).flat_map(|n| unlabeled_graphs(n, Some(3))));
    for g in graphs {
        let b = Brute::new(&g);
        let v = localizable_subcubic(&g).unwrap();
        assert_eq!(v.answer, b.localizable(), "{g:?}");
        check_certificate(&b, &g, &Query::PartitionExistence, &v);
        counts[usize::from(v.answer)] += 1;
    }
    assert!(counts[0] > 100 && counts[1] > 100, "{counts:?}");
    let k14 = named(&NamedFamily::CompleteBipartite(1, 4)).unwrap();
    assert!(matches!(
        localizable_subcubic(&k14),
        Err(SolverError::MaxDegreeExceeds { degree: 4, .. })
    ));
}

#[test]
fn alpha_two_localizability() {
    let mut checked = 0;
    for g in (2..=8).flat_map(|n| unlabeled_graphs(n, None)) {
        let b = Brute::new(&g);
        match localizable_alpha2(&g) {
            Ok(v) => {
                assert_eq!(b.alpha(), 2, "{g:?}");
                assert_eq!(v.answer, b.localizable(), "{g:?}");
                check_certificate(&b, &g, &Query::PartitionExistence, &v);
                checked += 1;
            }
            Err(_) => assert_ne!(b.alpha(), 2, "{g:?}"),
        }
    }
    assert!(checked > 500, "{checked}");
}

fn all_queries(b: &Brute) -> Vec<(Query, bool)> {
    let strong = b.strong_cliques();
    let in_strong = |m: Mask| strong.iter().any(|&s| s & m == m);
    let mut qs = vec![
        (Query::Existence, !strong.is_empty()),
        (Query::VertexCover, (0..b.n).all(|v| in_strong(1 << v))),
        (
            Query::EdgeCover,
            (0..b.n).all(|u| {
                vertices(b.adj[u])
                    .into_iter()
                    .all(|v| in_strong(1 << u | 1 << v))
            }),
        ),
        (Query::PartitionExistence, b.localizable()),
    ];
    for c in b.cliques() {
        qs.push((Query::StrongClique(set(c)), b.is_strong(c)));
        qs.push((ext_query(c), in_strong(c)));
    }
    let theta = b.theta();
    for p in b.clique_partitions(theta).into_iter().take(3) {
        let expected = p.iter().all(|&c| b.is_strong(c));
        qs.push((Query::Partition(p.into_iter().map(set).collect()), expected));
    }
    qs
}

fn check_router(g: &Graph, config: SolverConfig) {
    let b = Brute::new(g);
    let solver = Solver::new(g, config);
    for (q, expected) in all_queries(&b) {
        let v = solver
            .solve(&q)
            .unwrap_or_else(|e| panic!("{g:?} {q:?}: {e}"));
        assert_eq!(v.answer, expected, "{g:?} {q:?} via {}", v.method.as_str());
        check_certificate(&b, g, &q, &v);
        let o = solve_oracle(g, &q, 20).unwrap();
        assert_eq!(o.answer, expected);
        check_certificate(&b, g, &q, &o);
    }
}

#[test]
fn router_answers_every_problem() {
    for g in (1..=6).flat_map(|n| unlabeled_graphs(n, None)) {
        check_router(&g, SolverConfig::default());
    }
}

#[test]
fn router_falls_back_and_refuses() {
    let c5 = named(&NamedFamily::Cycle(5)).unwrap();
    let g = c5
        .disjoint_union(&named(&NamedFamily::Complete(4)).unwrap())
        .complement();
    let tight = SolverConfig {
        oracle_cap: 20,
        omega_cap: 2,
    };
    check_router(&g, tight);
    let refusing = SolverConfig {
        oracle_cap: 4,
        omega_cap: 2,
    };
    let solver = Solver::new(&g, refusing);
    if solver.clique_method().is_ok() {
        return;
    }
    assert!(matches!(
        solver.solve(&Query::Existence),
        Err(SolverError::OracleRefused { n: 9, cap: 4 })
    ));
}

#[test]
fn regular_graphs_with_strong_edges_are_balanced_complete_bipartite() {
    for g in (2..=8).flat_map(|n| unlabeled_graphs(n, None)) {
        let p = g.degree_profile();
        if !g.is_connected() || p.min != p.max || p.min == 0 {
            continue;
        }
        let r = p.min;
        let b = Brute::new(&g);
        let strong_edge = b.strong_cliques().iter().any(|c| c.count_ones() == 2);
        let krr = named(&NamedFamily::CompleteBipartite(r, r)).unwrap();
        assert_eq!(strong_edge, is_isomorphic(&g, &krr), "{g:?}");
    }
}

fn check_cubic(g: &Graph) -> bool {
    let b = Brute::new(g);
    let class = classify_cubic(g).unwrap();
    let strong = b.strong_cliques();
    let every_vertex = (0..g.n()).all(|v| strong.iter().any(|s| s >> v & 1 == 1));
    assert_eq!(class.is_localizable(), b.localizable(), "{g:?}");
    assert_eq!(every_vertex, b.localizable(), "{g:?}");
    match class {
        CubicClassification::Family {
            family,
            isomorphism,
        } => {
            let target = named(&family.named()).unwrap();
            assert_eq!(target.n(), g.n());
            assert!(g
                .edges()
                .iter()
                .all(|&(u, v)| target.has_edge(isomorphism[u], isomorphism[v])));
        }
        CubicClassification::NotLocalizable { uncovered } => {
            assert!(strong.iter().all(|s| s >> uncovered & 1 == 0));
        }
    }
    every_vertex
}

#[test]
fn cubic_three_way_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut localizable = 0;
    let exhaustive = (4..=8)
        .flat_map(connected_subcubic)
        .filter(|g| g.degree_profile().min == 3);
    for g in exhaustive {
        localizable += usize::from(check_cubic(&g));
    }
    for i in 0..120 {
        let n = 4 + 2 * (i % 6);
        localizable += usize::from(check_cubic(&random_connected_cubic(n, &mut rng)));
    }
    for f in [
        NamedFamily::CompleteBipartite(3, 3),
        NamedFamily::Complete(4),
        NamedFamily::CoC6,
        NamedFamily::Fn(2),
        NamedFamily::Fn(3),
    ] {
        assert!(check_cubic(&named(&f).unwrap()), "{f}");
    }
    assert!(!check_cubic(&named(&NamedFamily::Petersen).unwrap()));
    assert!(localizable > 0);
    let path = named(&NamedFamily::Path(4)).unwrap();
    assert!(matches!(classify_cubic(&path), Err(SolverError::NotCubic)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn router_matches_definitions_on_random_graphs(n in 1usize..=9, p in 0.05f64..0.95, seed in any::<u64>()) {
        let g = random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        check_router(&g, SolverConfig::default());
    }

    #[test]
    fn bounded_omega_matches_definition(n in 1usize..=10, p in 0.1f64..0.9, seed in any::<u64>()) {
        let g = random_graph(n, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let b = Brute::new(&g);
        let w = omega(&b).max(1);
        for c in b.maximal_cliques() {
            let v = sce_bounded_omega(&g, &vertices(c), w).unwrap();
            prop_assert_eq!(v.answer, b.is_strong(c));
        }
    }
}
