//! Batch verification: every polynomial verdict in a preset corpus is
//! compared with the exact oracle and its certificate re-checked.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::json;

use strong_cliques::generators::{
    random_3sat, sat_bruteforce, sat_gadget, sat_gadget_prime, Assumptions, SatError, SatInstance,
};
use strong_cliques::graph::enumerate::{
    connected_subcubic, graph_from_mask, random_connected_cubic, unlabeled_graphs,
};
use strong_cliques::graph::{find_induced_c4, is_isomorphic, is_weakly_chordal, named};
use strong_cliques::linegraph::recognize_line_graph;
use strong_cliques::oracle;
use strong_cliques::solvers::{
    classify_cubic, sce_coline, sce_linegraph, Method, Query, Solver, SolverConfig,
};
use strong_cliques::{Graph, NamedFamily, VertexSet};

use crate::record::Record;
use crate::verdict_record;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    SmallExhaustive,
    LineRoundtrip,
    Subcubic,
    CubicFamilies,
    SatReductions,
}

impl Preset {
    pub const ALL: [Preset; 5] = [
        Preset::SmallExhaustive,
        Preset::LineRoundtrip,
        Preset::Subcubic,
        Preset::CubicFamilies,
        Preset::SatReductions,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Preset::SmallExhaustive => "small-exhaustive",
            Preset::LineRoundtrip => "line-roundtrip",
            Preset::Subcubic => "subcubic",
            Preset::CubicFamilies => "cubic-families",
            Preset::SatReductions => "sat-reductions",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Preset {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Preset::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown preset `{s}`"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct CampaignOptions {
    pub seed: u64,
    pub config: SolverConfig,
    /// Keep only the first `limit` instances.
    pub limit: Option<usize>,
    /// Sample count for the randomised presets.
    pub samples: usize,
}

impl Default for CampaignOptions {
    fn default() -> Self {
        CampaignOptions {
            seed: 0,
            config: SolverConfig::default(),
            limit: None,
            samples: 500,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CampaignReport {
    pub preset: Preset,
    pub instances: usize,
    pub records: Vec<Record>,
}

impl CampaignReport {
    pub fn failures(&self) -> impl Iterator<Item = &Record> {
        self.records
            .iter()
            .filter(|r| !r.is_ok() && !r.is_skipped())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    /// Record count per method tag.
    pub fn methods(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for r in &self.records {
            *out.entry(r.method.clone()).or_insert(0) += 1;
        }
        out
    }
}

enum Job {
    Graph(Graph),
    Root(Graph),
    Cubic(Graph, Option<&'static str>),
    Sat(Result<SatInstance, String>, bool),
}

pub fn run_campaign(preset: Preset, opts: &CampaignOptions) -> CampaignReport {
    let mut jobs = instances(preset, opts);
    if let Some(limit) = opts.limit {
        jobs.truncate(limit);
    }
    let mut records: Vec<Record> = jobs
        .par_iter()
        .flat_map_iter(|(id, job)| match job {
            Job::Graph(g) => graph_checks(id, g, opts.config, preset == Preset::Subcubic),
            Job::Root(h) => root_checks(id, h, opts.config),
            Job::Cubic(g, tag) => cubic_checks(id, g, *tag, opts.config),
            Job::Sat(phi, full) => sat_checks(id, phi, *full, opts.config),
        })
        .collect();
    records.sort_by(|a, b| a.instance.cmp(&b.instance));
    CampaignReport {
        preset,
        instances: jobs.len(),
        records,
    }
}

fn instances(preset: Preset, opts: &CampaignOptions) -> Vec<(String, Job)> {
    match preset {
        Preset::SmallExhaustive => (1..=6usize)
            .flat_map(|n| {
                let pairs = n * (n - 1) / 2;
                (0..1u64 << pairs).map(move |mask| {
                    (
                        format!("n{n}-{mask:05}"),
                        Job::Graph(graph_from_mask(n, mask)),
                    )
                })
            })
            .collect(),
        Preset::LineRoundtrip => (2..=6)
            .flat_map(|n| {
                unlabeled_graphs(n, None)
                    .into_iter()
                    .filter(|h| h.is_connected())
                    .enumerate()
                    .map(move |(i, h)| (format!("root-n{n}-{i:03}"), Job::Root(h)))
            })
            .collect(),
        Preset::Subcubic => (1..=9)
            .flat_map(|n| {
                connected_subcubic(n)
                    .into_iter()
                    .enumerate()
                    .map(move |(i, g)| (format!("n{n}-{i:04}"), Job::Graph(g)))
            })
            .collect(),
        Preset::CubicFamilies => {
            let families: [(&'static str, NamedFamily); 8] = [
                ("K33", NamedFamily::CompleteBipartite(3, 3)),
                ("K4", NamedFamily::Complete(4)),
                ("coC6", NamedFamily::CoC6),
                ("Fn(2)", NamedFamily::Fn(2)),
                ("Fn(3)", NamedFamily::Fn(3)),
                ("Fn(4)", NamedFamily::Fn(4)),
                ("Fn(5)", NamedFamily::Fn(5)),
                ("NotLocalizable", NamedFamily::Petersen),
            ];
            let mut jobs: Vec<(String, Job)> = families
                .into_iter()
                .map(|(tag, f)| {
                    (
                        format!("family-{f}"),
                        Job::Cubic(named(&f).expect("fixed family"), Some(tag)),
                    )
                })
                .collect();
            let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
            jobs.extend((0..opts.samples).map(|i| {
                let n = 2 * rng.gen_range(2..=7);
                (
                    format!("random-{i:04}"),
                    Job::Cubic(random_connected_cubic(n, &mut rng), None),
                )
            }));
            jobs
        }
        Preset::SatReductions => sat_corpus(opts.samples, opts.seed)
            .into_iter()
            .enumerate()
            .map(|(i, (phi, full))| {
                (
                    format!("sat-{i:04}"),
                    Job::Sat(phi.map_err(|e| e.to_string()), full),
                )
            })
            .collect(),
    }
}

/// Random 3-SAT instances with `n <= 6`, `m <= 10`. Even positions satisfy
/// all three assumptions (`true` flag), odd ones only the first. Positions
/// 0 and 1 mod 4 are resampled until unsatisfiable, since random formulas
/// this small are almost always satisfiable.
pub fn sat_corpus(samples: usize, seed: u64) -> Vec<(Result<SatInstance, SatError>, bool)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|i| {
            let full = i % 2 == 0;
            let required = if full {
                Assumptions::ALL
            } else {
                Assumptions::BASIC
            };
            let phi = match i % 4 {
                0 => sample_unsat(4, 10, required, &mut rng),
                1 => sample_unsat(3, 10, required, &mut rng),
                2 => {
                    let n = rng.gen_range(4..=6);
                    random_3sat(n, rng.gen_range(n + 2..=10), rng.gen(), required)
                }
                _ => random_3sat(
                    rng.gen_range(3..=6),
                    rng.gen_range(1..=10),
                    rng.gen(),
                    required,
                ),
            };
            (phi, full)
        })
        .collect()
}

fn sample_unsat(
    n: usize,
    m: usize,
    required: Assumptions,
    rng: &mut ChaCha8Rng,
) -> Result<SatInstance, SatError> {
    const TRIES: usize = 1_000_000;
    for _ in 0..TRIES {
        let phi = random_3sat(n, m, rng.gen(), required)?;
        if sat_bruteforce(&phi)?.is_none() {
            return Ok(phi);
        }
    }
    Err(SatError::RetryBudget {
        n,
        m,
        attempts: TRIES,
    })
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_micros() as u64)
}

fn check(instance: &str, problem: &str, method: &str, answer: bool, expected: bool) -> Record {
    let mut r = Record::new(instance, problem, method);
    r.answer = Some(answer);
    r.expected = Some(expected);
    if answer != expected {
        r.status = "mismatch".into();
    }
    r
}

/// Flags records of `problem` whose method is not in `allowed`.
fn require_method(records: &mut [Record], problem: &str, allowed: &[Method]) {
    for r in records
        .iter_mut()
        .filter(|r| r.problem == problem && r.is_ok())
    {
        if !allowed.iter().any(|m| m.as_str() == r.method) {
            r.status = format!("mismatch: routed to {}", r.method);
        }
    }
}

/// All six problems through the router, against oracle answers.
fn router_checks(id: &str, g: &Graph, config: SolverConfig) -> Vec<Record> {
    let solver = Solver::new(g, config);
    let strong = oracle::strong_cliques_all(g);
    let in_strong = |vs: &[usize]| strong.iter().any(|s| vs.iter().all(|&v| s.contains(v)));
    let mut queries: Vec<(Query, bool)> = oracle::maximal_cliques(g)
        .into_iter()
        .filter(|c| !c.is_empty())
        .map(|c| {
            let truth = strong.contains(&c);
            (Query::StrongClique(c), truth)
        })
        .collect();
    let cover = oracle::minimum_clique_cover(g);
    let cover_strong = cover.iter().all(|p| strong.contains(p));
    queries.extend([
        (Query::Existence, !strong.is_empty()),
        (Query::VertexCover, (0..g.n()).all(|v| in_strong(&[v]))),
        (
            Query::EdgeCover,
            g.edges().iter().all(|&(u, v)| in_strong(&[u, v])),
        ),
        (Query::Partition(cover), cover_strong),
        (
            Query::PartitionExistence,
            oracle::localizable_exact(g).localizable,
        ),
    ]);
    queries
        .into_iter()
        .map(|(q, truth)| {
            let (result, micros) = timed(|| solver.solve(&q));
            verdict_record(id, g, &q, result, micros, Some(truth), true)
        })
        .collect()
}

fn graph_checks(id: &str, g: &Graph, config: SolverConfig, subcubic: bool) -> Vec<Record> {
    let mut records = router_checks(id, g, config);
    if subcubic {
        require_method(&mut records, "partition-existence", &[Method::Subcubic]);
    } else if find_induced_c4(g).is_none() {
        require_method(&mut records, "strong-clique", &[Method::C4Free]);
    }
    records
}

/// Every nonempty clique, as subsets of maximal cliques.
fn all_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = BTreeSet::new();
    for c in oracle::maximal_cliques(g) {
        for mask in 1u64..1 << c.len() {
            out.insert(
                c.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect::<VertexSet>(),
            );
        }
    }
    out.into_iter().collect()
}

fn extension_checks(
    id: &str,
    g: &Graph,
    engine: fn(
        &Graph,
        &[usize],
    )
        -> Result<strong_cliques::solvers::Verdict, strong_cliques::solvers::SolverError>,
) -> Vec<Record> {
    all_cliques(g)
        .into_iter()
        .map(|c| {
            let truth = oracle::extension(g, &c).expect("nonempty clique").is_some();
            let (result, micros) = timed(|| engine(g, &c));
            verdict_record(
                id,
                g,
                &Query::Extension(c),
                result,
                micros,
                Some(truth),
                true,
            )
        })
        .collect()
}

fn root_checks(id: &str, h: &Graph, config: SolverConfig) -> Vec<Record> {
    let l = h.line_graph().graph;
    let co = l.complement();
    let line_id = format!("{id}/L");
    let co_id = format!("{id}/coL");

    let (recognized, micros) = timed(|| recognize_line_graph(&l));
    let mut rec = match &recognized {
        Ok(map) => {
            let ok = map.verify(&l) && is_isomorphic(&map.root.line_graph().graph, &l);
            let mut r = check(
                &line_id,
                "recognize-line",
                Method::LineGraph.as_str(),
                ok,
                true,
            );
            r.certificate = json!({ "root_n": map.root.n(), "root_edges": map.to_edge });
            r
        }
        Err(e) => {
            let mut r = check(
                &line_id,
                "recognize-line",
                Method::LineGraph.as_str(),
                false,
                true,
            );
            r.certificate = json!({ "obstruction": e.obstruction });
            r
        }
    };
    rec.micros = micros;

    let mut records = vec![rec];
    records.extend(extension_checks(&line_id, &l, sce_linegraph));
    records.extend(extension_checks(&co_id, &co, sce_coline));
    let mut line_router = router_checks(&line_id, &l, config);
    require_method(
        &mut line_router,
        "strong-clique",
        &[Method::C4Free, Method::LineGraph],
    );
    let mut co_router = router_checks(&co_id, &co, config);
    require_method(
        &mut co_router,
        "strong-clique",
        &[Method::C4Free, Method::LineGraph, Method::CoLine],
    );
    records.extend(line_router);
    records.extend(co_router);
    records
}

fn cubic_checks(id: &str, g: &Graph, tag: Option<&str>, config: SolverConfig) -> Vec<Record> {
    let strong = oracle::strong_cliques_all(g);
    let localizable = oracle::exact_cover(g.n(), &strong).is_some();
    let covered = (0..g.n()).all(|v| strong.iter().any(|s| s.contains(v)));

    let (class, micros) = timed(|| classify_cubic(g));
    let mut records = Vec::new();
    let mut r = match class {
        Ok(c) => {
            let mut r = check(
                id,
                "classify-cubic",
                Method::CubicClassification.as_str(),
                c.is_localizable(),
                localizable,
            );
            if tag.is_some_and(|t| t != c.tag()) {
                r.status = format!("mismatch: tagged {}", c.tag());
            }
            r.certificate = serde_json::to_value(&c).expect("serializable");
            let three_way = localizable == covered && covered == c.is_localizable();
            records.push(check(
                id,
                "three-way",
                Method::CubicClassification.as_str(),
                three_way,
                true,
            ));
            r
        }
        Err(e) => {
            let mut r = Record::new(id, "classify-cubic", Method::CubicClassification.as_str());
            r.status = format!("error: {e}");
            r
        }
    };
    r.micros = micros;
    records.push(r);

    let solver = Solver::new(g, config);
    for (q, truth) in [
        (Query::VertexCover, covered),
        (Query::PartitionExistence, localizable),
    ] {
        let (result, micros) = timed(|| solver.solve(&q));
        records.push(verdict_record(id, g, &q, result, micros, Some(truth), true));
    }
    require_method(&mut records, "partition-existence", &[Method::Subcubic]);
    records
}

fn sat_checks(
    id: &str,
    phi: &Result<SatInstance, String>,
    full: bool,
    config: SolverConfig,
) -> Vec<Record> {
    let phi = match phi {
        Ok(phi) => phi,
        Err(e) => {
            let mut r = Record::new(id, "generate", "-");
            r.status = format!("error: {e}");
            return vec![r];
        }
    };
    // gadgets exceed the default caps; clique number is at most m + 1
    let config = SolverConfig {
        oracle_cap: config.oracle_cap.max(64),
        omega_cap: config.omega_cap.max(phi.clauses().len() + 1),
    };
    let unsat = sat_bruteforce(phi).expect("small instance").is_none();
    let g = sat_gadget(phi).expect("valid instance");
    let solver = Solver::new(&g.graph, config);
    let mut records = Vec::new();
    let mut run = |graph: &Graph, solver: &Solver, q: Query, truth: bool, problem: &str| {
        let (result, micros) = timed(|| solver.solve(&q));
        let mut r = verdict_record(id, graph, &q, result, micros, Some(truth), true);
        r.problem = problem.to_string();
        records.push(r);
    };
    run(
        &g.graph,
        &solver,
        Query::StrongClique(g.clause_clique.clone()),
        unsat,
        "gadget-strong-clique",
    );
    run(
        &g.graph,
        &solver,
        Query::Partition(g.canonical_partition()),
        unsat,
        "gadget-partition",
    );
    for &(a, b) in &g.literal_pairs {
        run(
            &g.graph,
            &solver,
            Query::StrongClique(VertexSet::from([a, b])),
            true,
            "literal-pair",
        );
    }
    let mut chordal = is_weakly_chordal(&g.graph).is_weakly_chordal();
    if full {
        run(
            &g.graph,
            &solver,
            Query::VertexCover,
            unsat,
            "gadget-vertex-cover",
        );
        let gp = sat_gadget_prime(phi).expect("instance satisfies all assumptions");
        chordal &= is_weakly_chordal(&gp.graph).is_weakly_chordal();
        let prime_solver = Solver::new(&gp.graph, config);
        run(
            &gp.graph,
            &prime_solver,
            Query::Existence,
            unsat,
            "gprime-existence",
        );
    }
    let mut r = check(id, "weakly-chordal", "-", chordal, true);
    r.certificate = json!({ "cnf": phi.to_dimacs() });
    records.push(r);
    records
}
