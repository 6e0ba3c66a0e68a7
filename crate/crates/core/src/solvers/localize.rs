use crate::graph::{is_isomorphic, named, Graph, NamedFamily, VertexSet};
use crate::matching::has_perfect_matching;
use crate::oracle;

use super::domination::independent_dominator;
use super::{Certificate, Method, Problem, SolverError, Verdict};

/// Strong cliques of a graph with maximum degree at most 3 (every strong
/// clique is maximal, so only maximal cliques are tested).
pub(crate) fn strong_cliques_subcubic(g: &Graph) -> Vec<VertexSet> {
    oracle::maximal_cliques(g)
        .into_iter()
        .filter(|c| !c.is_empty() && independent_dominator(g, c).is_none())
        .collect()
}

/// Partition of one connected component into strong cliques, or `None`.
fn localize_component(g: &Graph) -> Option<Vec<VertexSet>> {
    let n = g.n();
    if n == 1 {
        return Some(vec![VertexSet::from([0])]);
    }
    if n == 4 && g.edge_count() == 6 {
        return Some(vec![VertexSet::from([0, 1, 2, 3])]);
    }
    let strong = strong_cliques_subcubic(g);
    let triangles: Vec<&VertexSet> = strong.iter().filter(|c| c.len() == 3).collect();
    let overlapping = triangles
        .iter()
        .any(|t| strong.iter().any(|c| c != *t && !c.is_disjoint(t)));
    if overlapping {
        let co_p2p3 = named(&NamedFamily::CoP2PlusP3).expect("fixed family");
        return if is_isomorphic(g, &co_p2p3) {
            oracle::exact_cover(n, &strong)
        } else {
            None
        };
    }
    // strong triangles are forced parts; the rest must pair up along strong edges
    let mut in_triangle = vec![false; n];
    for t in &triangles {
        for &v in t.iter() {
            in_triangle[v] = true;
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| !in_triangle[v]).collect();
    let index = |v: usize| rest.binary_search(&v).ok();
    let derived_edges: Vec<(usize, usize)> = strong
        .iter()
        .filter(|c| c.len() == 2)
        .filter_map(|c| Some((index(c[0])?, index(c[1])?)))
        .collect();
    let derived = Graph::new(rest.len(), &derived_edges).expect("valid derived graph");
    let m = has_perfect_matching(&derived)?;
    let mut parts: Vec<VertexSet> = triangles.into_iter().cloned().collect();
    parts.extend(
        m.edges()
            .iter()
            .map(|&(a, b)| VertexSet::from([rest[a], rest[b]])),
    );
    Some(parts)
}

pub fn localizable_subcubic(g: &Graph) -> Result<Verdict, SolverError> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) > 3) {
        return Err(SolverError::MaxDegreeExceeds {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let mut parts = Vec::new();
    for comp in g.connected_components() {
        let sub = g.induced_subgraph(&comp);
        match localize_component(&sub) {
            Some(local) => parts.extend(
                local
                    .into_iter()
                    .map(|p| p.iter().map(|&i| comp[i]).collect::<VertexSet>()),
            ),
            None => {
                return Ok(Verdict::new(
                    Problem::PartitionExistence,
                    false,
                    Method::Subcubic,
                    None,
                ));
            }
        }
    }
    parts.sort();
    Ok(Verdict::new(
        Problem::PartitionExistence,
        true,
        Method::Subcubic,
        Some(Certificate::Partition(parts)),
    ))
}

/// `α(g) = 2`: the complement is triangle-free and `g` is not complete.
pub(crate) fn check_alpha_two(g: &Graph) -> Result<(), SolverError> {
    let co = g.complement();
    if let Some(t) = co.find_triangle() {
        return Err(SolverError::AlphaAboveTwo(VertexSet::from(t.to_vec())));
    }
    if co.edge_count() == 0 {
        return Err(SolverError::AlphaNotTwo(g.n().min(1)));
    }
    Ok(())
}

pub fn localizable_alpha2(g: &Graph) -> Result<Verdict, SolverError> {
    check_alpha_two(g)?;
    let co = g.complement();
    let no_isolated = (0..co.n()).all(|v| co.degree(v) > 0);
    let split = co.bipartition().filter(|_| no_isolated);
    Ok(match split {
        Some((a, b)) => {
            let mut parts = vec![a, b];
            parts.sort();
            Verdict::new(
                Problem::PartitionExistence,
                true,
                Method::Alpha2,
                Some(Certificate::Partition(parts)),
            )
        }
        None => Verdict::new(Problem::PartitionExistence, false, Method::Alpha2, None),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(f: NamedFamily) -> Graph {
        named(&f).unwrap()
    }

    fn partition_of(v: &Verdict) -> Vec<VertexSet> {
        match &v.certificate {
            Some(Certificate::Partition(p)) => p.clone(),
            other => panic!("no partition: {other:?}"),
        }
    }

    #[test]
    fn subcubic_examples() {
        let k4 = localizable_subcubic(&fam(NamedFamily::Complete(4))).unwrap();
        assert!(k4.answer);
        assert_eq!(partition_of(&k4), vec![VertexSet::from([0, 1, 2, 3])]);
        assert!(
            localizable_subcubic(&fam(NamedFamily::CoP2PlusP3))
                .unwrap()
                .answer
        );
        assert!(
            !localizable_subcubic(&fam(NamedFamily::Cycle(5)))
                .unwrap()
                .answer
        );
        assert!(
            !localizable_subcubic(&fam(NamedFamily::Diamond))
                .unwrap()
                .answer
        );
        let f3 = localizable_subcubic(&fam(NamedFamily::Fn(3))).unwrap();
        assert!(f3.answer);
        let parts = partition_of(&f3);
        assert_eq!(parts.len(), 6);
        assert!(parts.iter().all(|p| p.len() == 3));
        assert!(localizable_subcubic(&Graph::empty(3)).unwrap().answer);
        assert!(matches!(
            localizable_subcubic(&fam(NamedFamily::Complete(5))),
            Err(SolverError::MaxDegreeExceeds { .. })
        ));
    }

    #[test]
    fn alpha2_examples() {
        // 2K2: complement is C4
        let two_k2 = fam(NamedFamily::Cycle(4)).complement();
        let v = localizable_alpha2(&two_k2).unwrap();
        assert!(v.answer);
        assert_eq!(
            partition_of(&v),
            vec![VertexSet::from([0, 2]), VertexSet::from([1, 3])]
        );
        assert!(
            !localizable_alpha2(&fam(NamedFamily::Cycle(5)))
                .unwrap()
                .answer
        );
        assert!(matches!(
            localizable_alpha2(&fam(NamedFamily::Complete(4))),
            Err(SolverError::AlphaNotTwo(1))
        ));
        assert!(matches!(
            localizable_alpha2(&Graph::empty(3)),
            Err(SolverError::AlphaAboveTwo(_))
        ));
    }
}
