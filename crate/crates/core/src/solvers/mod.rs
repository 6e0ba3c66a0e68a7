//! Polynomial-time strong clique algorithms for special graph classes, and a
//! router that answers all six strong clique problems.
//!
//! Every clique problem reduces to extension: does a given clique lie in some
//! strong clique? The router picks the first applicable engine in the order
//! C4-free, line graph, complement of a line graph, bounded clique number,
//! exact oracle. Localizability (partition existence) routes through the
//! subcubic and `α = 2` algorithms before the oracle.

mod cubic;
mod domination;
mod engines;
mod localize;
mod verify;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexSet};
use crate::oracle;

pub use cubic::{classify_cubic, CubicClassification, CubicFamily};
pub use localize::{localizable_alpha2, localizable_subcubic};
pub use verify::verify_verdict;

use domination::non_maximal_witness;
use engines::{BoundedOmega, C4Free, CliqueEngine, CoLineEngine, LineGraphEngine, Oracle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Problem {
    StrongClique,
    Existence,
    VertexCover,
    EdgeCover,
    Partition,
    PartitionExistence,
    Extension,
}

impl Problem {
    pub const ALL: [Problem; 7] = [
        Problem::StrongClique,
        Problem::Existence,
        Problem::VertexCover,
        Problem::EdgeCover,
        Problem::Partition,
        Problem::PartitionExistence,
        Problem::Extension,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Problem::StrongClique => "strong-clique",
            Problem::Existence => "existence",
            Problem::VertexCover => "vertex-cover",
            Problem::EdgeCover => "edge-cover",
            Problem::Partition => "partition",
            Problem::PartitionExistence => "partition-existence",
            Problem::Extension => "extension",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Problem::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown problem `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "oracle")]
    Oracle,
    #[serde(rename = "c4free")]
    C4Free,
    #[serde(rename = "linegraph")]
    LineGraph,
    #[serde(rename = "coline")]
    CoLine,
    #[serde(rename = "bounded_omega")]
    BoundedOmega,
    #[serde(rename = "subcubic")]
    Subcubic,
    #[serde(rename = "alpha2")]
    Alpha2,
    #[serde(rename = "cubic_classification")]
    CubicClassification,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::Oracle,
        Method::C4Free,
        Method::LineGraph,
        Method::CoLine,
        Method::BoundedOmega,
        Method::Subcubic,
        Method::Alpha2,
        Method::CubicClassification,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::C4Free => "c4free",
            Method::LineGraph => "linegraph",
            Method::CoLine => "coline",
            Method::BoundedOmega => "bounded_omega",
            Method::Subcubic => "subcubic",
            Method::Alpha2 => "alpha2",
            Method::CubicClassification => "cubic_classification",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Certificate {
    /// A strong clique containing the queried clique.
    StrongClique(VertexSet),
    /// A maximal independent set disjoint from the queried clique (or from
    /// the failing part of a partition).
    IndependentSet(VertexSet),
    /// A partition of the vertex set into strong cliques.
    Partition(Vec<VertexSet>),
    /// For covers: one strong clique per vertex or edge, in query order.
    StrongCliques(Vec<VertexSet>),
    /// A vertex or edge that lies in no strong clique.
    Uncovered(VertexSet),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub problem: Problem,
    pub answer: bool,
    pub method: Method,
    pub certificate: Option<Certificate>,
}

impl Verdict {
    pub fn new(
        problem: Problem,
        answer: bool,
        method: Method,
        certificate: Option<Certificate>,
    ) -> Self {
        Verdict {
            problem,
            answer,
            method,
            certificate,
        }
    }
}

/// A problem together with its input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    StrongClique(VertexSet),
    Existence,
    VertexCover,
    EdgeCover,
    Partition(Vec<VertexSet>),
    PartitionExistence,
    Extension(VertexSet),
}

impl Query {
    pub fn problem(&self) -> Problem {
        match self {
            Query::StrongClique(_) => Problem::StrongClique,
            Query::Existence => Problem::Existence,
            Query::VertexCover => Problem::VertexCover,
            Query::EdgeCover => Problem::EdgeCover,
            Query::Partition(_) => Problem::Partition,
            Query::PartitionExistence => Problem::PartitionExistence,
            Query::Extension(_) => Problem::Extension,
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("the empty set is not a valid strong-clique query")]
    EmptyClique,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph has an induced C4 on {0:?}")]
    InducedC4([usize; 4]),
    #[error("not a line graph; induced obstruction on {0}")]
    NotLineGraph(VertexSet),
    #[error("complement is not a line graph; induced obstruction on {0}")]
    ComplementNotLineGraph(VertexSet),
    #[error("clique number exceeds {cap}: clique {witness}")]
    OmegaExceeds { cap: usize, witness: VertexSet },
    #[error("vertex {vertex} has degree {degree}, above 3")]
    MaxDegreeExceeds { vertex: usize, degree: usize },
    #[error("independence number is {0}, not 2")]
    AlphaNotTwo(usize),
    #[error("independence number exceeds 2: independent set {0}")]
    AlphaAboveTwo(VertexSet),
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not connected")]
    NotConnected,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("exact fallback refused: {n} vertices exceeds the cap of {cap}")]
    OracleRefused { n: usize, cap: usize },
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverConfig {
    /// Largest order accepted by the exponential fallback.
    pub oracle_cap: usize,
    /// Largest clique number routed to the bounded-ω engine.
    pub omega_cap: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            oracle_cap: 20,
            omega_cap: 6,
        }
    }
}

/// Answers queries on one graph, preparing the class engine on first use.
pub struct Solver<'g> {
    g: &'g Graph,
    config: SolverConfig,
    engine: OnceCell<Result<Box<dyn CliqueEngine + 'g>, SolverError>>,
}

impl<'g> Solver<'g> {
    pub fn new(g: &'g Graph, config: SolverConfig) -> Self {
        Solver {
            g,
            config,
            engine: OnceCell::new(),
        }
    }

    fn engine(&self) -> Result<&dyn CliqueEngine, SolverError> {
        let g = self.g;
        let config = self.config;
        let slot = self.engine.get_or_init(|| select_engine(g, &config));
        match slot {
            Ok(e) => Ok(e.as_ref()),
            Err(e) => Err(e.clone()),
        }
    }

    /// The method the clique problems route to.
    pub fn clique_method(&self) -> Result<Method, SolverError> {
        Ok(self.engine()?.method())
    }

    pub fn solve(&self, query: &Query) -> Result<Verdict, SolverError> {
        match query {
            Query::PartitionExistence => self.partition_existence(),
            _ => solve_with(self.g, self.engine()?, query),
        }
    }

    fn partition_existence(&self) -> Result<Verdict, SolverError> {
        let g = self.g;
        if g.degree_profile().max <= 3 {
            return localizable_subcubic(g);
        }
        if localize::check_alpha_two(g).is_ok() {
            return localizable_alpha2(g);
        }
        if g.n() > self.config.oracle_cap {
            return Err(SolverError::OracleRefused {
                n: g.n(),
                cap: self.config.oracle_cap,
            });
        }
        let result = oracle::localizable_exact(g);
        let certificate = result.partition.map(Certificate::Partition);
        Ok(Verdict::new(
            Problem::PartitionExistence,
            result.localizable,
            Method::Oracle,
            certificate,
        ))
    }
}

fn select_engine<'g>(
    g: &'g Graph,
    config: &SolverConfig,
) -> Result<Box<dyn CliqueEngine + 'g>, SolverError> {
    if let Ok(e) = C4Free::new(g) {
        return Ok(Box::new(e));
    }
    if let Ok(e) = LineGraphEngine::new(g) {
        return Ok(Box::new(e));
    }
    if let Ok(e) = CoLineEngine::new(g) {
        return Ok(Box::new(e));
    }
    if let Ok(e) = BoundedOmega::new(g, config.omega_cap) {
        return Ok(Box::new(e));
    }
    Ok(Box::new(Oracle::new(g, config.oracle_cap)?))
}

/// Routes one query through the default engine order.
pub fn solve(g: &Graph, query: &Query, config: &SolverConfig) -> Result<Verdict, SolverError> {
    Solver::new(g, *config).solve(query)
}

fn validate_partition(g: &Graph, parts: &[VertexSet]) -> Result<(), SolverError> {
    let mut seen = vec![false; g.n()];
    for p in parts {
        if p.is_empty() {
            return Err(SolverError::InvalidPartition("empty part".into()));
        }
        g.check_clique(p)?;
        for &v in p.iter() {
            if std::mem::replace(&mut seen[v], true) {
                return Err(SolverError::InvalidPartition(format!(
                    "vertex {v} is in two parts"
                )));
            }
        }
    }
    if let Some(v) = seen.iter().position(|&s| !s) {
        return Err(SolverError::InvalidPartition(format!(
            "vertex {v} is in no part"
        )));
    }
    Ok(())
}

/// Strongness of a nonempty clique: `Ok(())` or a disjoint maximal
/// independent set.
fn strong_or_witness(
    g: &Graph,
    engine: &dyn CliqueEngine,
    c: &[usize],
) -> Result<Result<(), VertexSet>, SolverError> {
    if c.is_empty() {
        return Err(SolverError::EmptyClique);
    }
    g.check_clique(c)?;
    if let Some(w) = non_maximal_witness(g, c) {
        return Ok(Err(w));
    }
    // a maximal clique extends only to itself
    if engine.extend(c).is_some() {
        return Ok(Ok(()));
    }
    engine.witness(c).map(Err).ok_or_else(|| {
        SolverError::Inconsistent(format!(
            "no witness for non-strong clique {}",
            VertexSet::from(c.to_vec())
        ))
    })
}

fn solve_with(g: &Graph, engine: &dyn CliqueEngine, query: &Query) -> Result<Verdict, SolverError> {
    let method = engine.method();
    let problem = query.problem();
    let verdict = |answer, certificate| Ok(Verdict::new(problem, answer, method, certificate));
    match query {
        Query::StrongClique(c) => match strong_or_witness(g, engine, c)? {
            Ok(()) => verdict(true, Some(Certificate::StrongClique(c.clone()))),
            Err(w) => verdict(false, Some(Certificate::IndependentSet(w))),
        },
        Query::Extension(c) => {
            g.check_clique(c)?;
            let found = engine.extend(c);
            verdict(found.is_some(), found.map(Certificate::StrongClique))
        }
        Query::Existence => {
            let found = if g.n() == 0 { None } else { engine.extend(&[]) };
            verdict(found.is_some(), found.map(Certificate::StrongClique))
        }
        Query::VertexCover => {
            let targets: Vec<Vec<usize>> = (0..g.n()).map(|v| vec![v]).collect();
            cover(engine, &targets, problem, method)
        }
        Query::EdgeCover => {
            let targets: Vec<Vec<usize>> = g.edges().into_iter().map(|(u, v)| vec![u, v]).collect();
            cover(engine, &targets, problem, method)
        }
        Query::Partition(parts) => {
            validate_partition(g, parts)?;
            for p in parts {
                if let Err(w) = strong_or_witness(g, engine, p)? {
                    return verdict(false, Some(Certificate::IndependentSet(w)));
                }
            }
            let mut sorted = parts.clone();
            sorted.sort();
            verdict(true, Some(Certificate::Partition(sorted)))
        }
        Query::PartitionExistence => unreachable!("routed separately"),
    }
}

fn cover(
    engine: &dyn CliqueEngine,
    targets: &[Vec<usize>],
    problem: Problem,
    method: Method,
) -> Result<Verdict, SolverError> {
    let mut found = Vec::with_capacity(targets.len());
    for t in targets {
        match engine.extend(t) {
            Some(c) => found.push(c),
            None => {
                let cert = Certificate::Uncovered(VertexSet::from(t.clone()));
                return Ok(Verdict::new(problem, false, method, Some(cert)));
            }
        }
    }
    Ok(Verdict::new(
        problem,
        true,
        method,
        Some(Certificate::StrongCliques(found)),
    ))
}

fn extension_verdict(
    g: &Graph,
    engine: &dyn CliqueEngine,
    c: &[usize],
) -> Result<Verdict, SolverError> {
    solve_with(g, engine, &Query::Extension(VertexSet::from(c.to_vec())))
}

/// Strong clique extension on a C4-free graph, where the strong cliques are
/// exactly the simplicial cliques `N[v]`.
pub fn sce_c4free(g: &Graph, c: &[usize]) -> Result<Verdict, SolverError> {
    extension_verdict(g, &C4Free::new(g)?, c)
}

/// Strong clique extension on a line graph, through matchings in its root.
pub fn sce_linegraph(g: &Graph, c: &[usize]) -> Result<Verdict, SolverError> {
    extension_verdict(g, &LineGraphEngine::new(g)?, c)
}

/// Strong clique extension on the complement of a line graph, through a
/// weighted matching in the root.
pub fn sce_coline(g: &Graph, c: &[usize]) -> Result<Verdict, SolverError> {
    extension_verdict(g, &CoLineEngine::new(g)?, c)
}

/// Strong clique extension when the clique number is at most `k`.
pub fn sce_bounded_omega(g: &Graph, c: &[usize], k: usize) -> Result<Verdict, SolverError> {
    extension_verdict(g, &BoundedOmega::new(g, k)?, c)
}

/// The same queries answered by the exact oracle, refusing graphs above
/// `cap` vertices.
pub fn solve_oracle(g: &Graph, query: &Query, cap: usize) -> Result<Verdict, SolverError> {
    let engine = Oracle::new(g, cap)?;
    match query {
        Query::PartitionExistence => {
            let result = oracle::localizable_exact(g);
            Ok(Verdict::new(
                Problem::PartitionExistence,
                result.localizable,
                Method::Oracle,
                result.partition.map(Certificate::Partition),
            ))
        }
        _ => solve_with(g, &engine, query),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named, NamedFamily};

    fn fam(f: NamedFamily) -> Graph {
        named(&f).unwrap()
    }

    fn clique_of(v: &Verdict) -> Option<VertexSet> {
        match &v.certificate {
            Some(Certificate::StrongClique(c)) => Some(c.clone()),
            _ => None,
        }
    }

    #[test]
    fn c4free_examples() {
        let p4 = fam(NamedFamily::Path(4));
        let v = sce_c4free(&p4, &[1]).unwrap();
        assert!(v.answer);
        assert_eq!(clique_of(&v), Some(VertexSet::from([0, 1])));
        assert!(!sce_c4free(&p4, &[1, 2]).unwrap().answer);
        // K3 on 0,1,2 with pendant 3 at 0
        let g = Graph::new(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let v = sce_c4free(&g, &[3]).unwrap();
        assert_eq!(clique_of(&v), Some(VertexSet::from([0, 3])));
        assert!(matches!(
            sce_c4free(&fam(NamedFamily::Cycle(4)), &[0]),
            Err(SolverError::InducedC4(_))
        ));
        assert!(sce_c4free(&p4, &[0, 2]).is_err());
    }

    #[test]
    fn linegraph_examples() {
        let lp4 = fam(NamedFamily::Path(4)).line_graph().graph;
        assert!(sce_linegraph(&lp4, &[0, 1]).unwrap().answer);
        let lc5 = fam(NamedFamily::Cycle(5)).line_graph().graph;
        for v in 0..5 {
            assert!(!sce_linegraph(&lc5, &[v]).unwrap().answer);
        }
        let lclaw = fam(NamedFamily::CompleteBipartite(1, 3)).line_graph().graph;
        let v = sce_linegraph(&lclaw, &[]).unwrap();
        assert_eq!(clique_of(&v), Some(VertexSet::from([0, 1, 2])));
        assert!(matches!(
            sce_linegraph(&fam(NamedFamily::CompleteBipartite(1, 3)), &[]),
            Err(SolverError::NotLineGraph(_))
        ));
    }

    #[test]
    fn coline_examples() {
        let co_lc4 = fam(NamedFamily::Cycle(4)).line_graph().graph.complement();
        assert!(sce_coline(&co_lc4, &[0]).unwrap().answer);
        let co_lclaw = fam(NamedFamily::CompleteBipartite(1, 3))
            .line_graph()
            .graph
            .complement();
        let v = sce_coline(&co_lclaw, &[1]).unwrap();
        assert_eq!(clique_of(&v), Some(VertexSet::from([1])));
        let co_lpet = fam(NamedFamily::Petersen).line_graph().graph.complement();
        let v = sce_coline(&co_lpet, &[]).unwrap();
        assert!(v.answer);
        let c = clique_of(&v).unwrap();
        assert!(oracle::is_strong_clique(&co_lpet, &c).unwrap().strong);
    }

    #[test]
    fn bounded_omega_examples() {
        assert!(
            !sce_bounded_omega(&fam(NamedFamily::Cycle(5)), &[0], 2)
                .unwrap()
                .answer
        );
        let v = sce_bounded_omega(&fam(NamedFamily::Path(4)), &[0], 2).unwrap();
        assert_eq!(clique_of(&v), Some(VertexSet::from([0, 1])));
        // both triangles of the diamond meet the three maximal independent
        // sets {0}, {1}, {2,3}
        let diamond = fam(NamedFamily::Diamond);
        let v = sce_bounded_omega(&diamond, &[0, 1], 3).unwrap();
        assert!(v.answer);
        assert_eq!(oracle::extension(&diamond, &[0, 1]).unwrap(), clique_of(&v));
        assert!(matches!(
            sce_bounded_omega(&fam(NamedFamily::Complete(4)), &[], 3),
            Err(SolverError::OmegaExceeds { cap: 3, .. })
        ));
    }

    #[test]
    fn router_examples() {
        let config = SolverConfig::default();
        let lp4 = fam(NamedFamily::Path(4)).line_graph().graph;
        assert!(solve(&lp4, &Query::EdgeCover, &config).unwrap().answer);
        let p4 = fam(NamedFamily::Path(4));
        let parts = vec![VertexSet::from([0, 1]), VertexSet::from([2, 3])];
        assert!(
            solve(&p4, &Query::Partition(parts), &config)
                .unwrap()
                .answer
        );
        let v = solve(
            &fam(NamedFamily::Diamond),
            &Query::PartitionExistence,
            &config,
        )
        .unwrap();
        assert!(!v.answer);
        assert_eq!(v.method, Method::Subcubic);
        assert!(matches!(
            solve(
                &p4,
                &Query::Partition(vec![VertexSet::from([0, 1])]),
                &config
            ),
            Err(SolverError::InvalidPartition(_))
        ));
        assert_eq!(
            solve(&p4, &Query::StrongClique(VertexSet::new()), &config),
            Err(SolverError::EmptyClique)
        );
        let empty = Graph::empty(0);
        assert!(!solve(&empty, &Query::Existence, &config).unwrap().answer);
        assert!(
            solve(&empty, &Query::PartitionExistence, &config)
                .unwrap()
                .answer
        );
    }

    #[test]
    fn strong_clique_false_carries_disjoint_mis() {
        let config = SolverConfig::default();
        let c5 = fam(NamedFamily::Cycle(5));
        let v = solve(&c5, &Query::StrongClique(VertexSet::from([0, 1])), &config).unwrap();
        assert!(!v.answer);
        match v.certificate {
            Some(Certificate::IndependentSet(w)) => {
                assert!(w.is_disjoint(&VertexSet::from([0, 1])));
                assert!(oracle::maximal_independent_sets(&c5).contains(&w));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn names_round_trip() {
        for p in Problem::ALL {
            assert_eq!(p.as_str().parse::<Problem>().unwrap(), p);
        }
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
            assert_eq!(serde_json::to_string(&m).unwrap(), format!("\"{m}\""));
        }
    }
}
