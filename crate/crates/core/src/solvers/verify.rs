use crate::graph::{Graph, VertexSet};
use crate::oracle;

use super::{Certificate, Query, Verdict};

fn strong(g: &Graph, c: &VertexSet) -> Result<(), String> {
    match oracle::is_strong_clique(g, c) {
        Ok(w) if w.strong => Ok(()),
        Ok(w) => Err(format!("{c} is not strong: {} avoids it", w.witness)),
        Err(e) => Err(format!("{c}: {e}")),
    }
}

fn maximal_independent_avoiding(g: &Graph, w: &VertexSet, c: &VertexSet) -> Result<(), String> {
    g.check_vertices(w).map_err(|e| e.to_string())?;
    if !g.is_independent(w) {
        return Err(format!("{w} is not independent"));
    }
    let maximal = (0..g.n()).all(|v| w.contains(v) || w.iter().any(|&u| g.has_edge(u, v)));
    if !maximal {
        return Err(format!("{w} is not maximal"));
    }
    if !w.is_disjoint(c) {
        return Err(format!("{w} meets {c}"));
    }
    Ok(())
}

fn partition(g: &Graph, parts: &[VertexSet]) -> Result<(), String> {
    let mut seen = vec![false; g.n()];
    for p in parts {
        for &v in p.iter() {
            if v >= g.n() || std::mem::replace(&mut seen[v], true) {
                return Err(format!("part {p} overlaps or leaves the graph"));
            }
        }
        strong(g, p)?;
    }
    match seen.iter().position(|&s| !s) {
        Some(v) => Err(format!("vertex {v} is uncovered")),
        None => Ok(()),
    }
}

fn no_extension(g: &Graph, t: &VertexSet) -> Result<(), String> {
    match oracle::extension(g, t) {
        Ok(None) => Ok(()),
        Ok(Some(c)) => Err(format!("{t} extends to strong clique {c}")),
        Err(e) => Err(e.to_string()),
    }
}

/// Re-checks a verdict's certificate against the exact definitions.
///
/// Exponential: meant for tests and campaigns at desk scale. Verdicts
/// without a certificate pass trivially.
pub fn verify_verdict(g: &Graph, query: &Query, verdict: &Verdict) -> Result<(), String> {
    if verdict.problem != query.problem() {
        return Err(format!(
            "verdict is for {}, query is {}",
            verdict.problem,
            query.problem()
        ));
    }
    let Some(cert) = &verdict.certificate else {
        return Ok(());
    };
    match (query, verdict.answer, cert) {
        (Query::StrongClique(c), true, Certificate::StrongClique(s)) if s == c => strong(g, s),
        (Query::StrongClique(c), false, Certificate::IndependentSet(w)) => {
            maximal_independent_avoiding(g, w, c)
        }
        (Query::Extension(c), true, Certificate::StrongClique(s)) => {
            if !c.is_subset(s) {
                return Err(format!("{s} does not contain {c}"));
            }
            strong(g, s)
        }
        (Query::Existence, true, Certificate::StrongClique(s)) => strong(g, s),
        (Query::VertexCover, true, Certificate::StrongCliques(list)) => {
            if list.len() != g.n() {
                return Err("one clique per vertex expected".into());
            }
            list.iter().enumerate().try_for_each(|(v, s)| {
                if !s.contains(v) {
                    return Err(format!("{s} misses vertex {v}"));
                }
                strong(g, s)
            })
        }
        (Query::EdgeCover, true, Certificate::StrongCliques(list)) => {
            let edges = g.edges();
            if list.len() != edges.len() {
                return Err("one clique per edge expected".into());
            }
            edges.iter().zip(list).try_for_each(|(&(u, v), s)| {
                if !(s.contains(u) && s.contains(v)) {
                    return Err(format!("{s} misses edge {u}{v}"));
                }
                strong(g, s)
            })
        }
        (Query::VertexCover | Query::EdgeCover, false, Certificate::Uncovered(t)) => {
            no_extension(g, t)
        }
        (Query::Partition(parts), true, Certificate::Partition(p)) => {
            let mut a = parts.clone();
            a.sort();
            if &a != p {
                return Err("certificate is not the queried partition".into());
            }
            partition(g, p)
        }
        (Query::Partition(parts), false, Certificate::IndependentSet(w)) => {
            let part = parts
                .iter()
                .find(|p| p.is_disjoint(w))
                .ok_or_else(|| format!("{w} meets every part"))?;
            maximal_independent_avoiding(g, w, part)
        }
        (Query::PartitionExistence, true, Certificate::Partition(p)) => partition(g, p),
        _ => Err(format!(
            "certificate {cert:?} does not fit a {} answer",
            verdict.answer
        )),
    }
}
