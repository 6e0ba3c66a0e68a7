use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use strong_cliques::generators::{
    parse_dimacs_cnf, random_3sat, sat_gadget, sat_gadget_prime, Assumptions,
};
use strong_cliques::graph::enumerate::{random_connected_cubic, random_graph};
use strong_cliques::graph::{named, parse_edge_list, write_edge_list, write_labels};
use strong_cliques::linegraph::recognize_line_graph;
use strong_cliques::oracle;
use strong_cliques::solvers::{
    classify_cubic, solve_oracle, Method, Problem, Query, Solver, SolverConfig, SolverError,
};
use strong_cliques::{Graph, NamedFamily};

use crate::campaign::{run_campaign, CampaignOptions, Preset};
use crate::record::{Format, Record, TSV_HEADER};
use crate::{parse_clique, parse_partition, verdict_record};

#[derive(Debug, Parser)]
#[command(
    name = "strong-cliques",
    version,
    about = "Strong clique problems with certificates"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Record format.
    #[arg(long, global = true, default_value = "tsv")]
    pub format: Format,
    /// Largest graph the exact fallback accepts.
    #[arg(long, global = true, default_value_t = 20)]
    pub oracle_cap: usize,
    /// Largest clique number routed to the bounded-clique-number engine.
    #[arg(long, global = true, default_value_t = 6)]
    pub omega_cap: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Answer every problem for one graph.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// Clique for the strong-clique query; every maximal clique if absent.
        #[arg(long)]
        clique: Option<String>,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Is the clique strong? Exit 1 if not.
    CheckStrong {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        clique: String,
    },
    /// Does the clique lie in a strong clique? Exit 1 if not.
    Extend {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        clique: String,
    },
    /// Partition into strong cliques (or check a given one). Exit 1 if none.
    Localizable {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Classify a connected cubic graph. Exit 1 if not localizable.
    ClassifyCubic {
        #[arg(long)]
        input: PathBuf,
    },
    /// Recognize a line graph and print a root. Exit 1 if not a line graph.
    RecognizeLine {
        #[arg(long)]
        input: PathBuf,
    },
    /// Print a generated graph or CNF.
    Gen {
        #[command(subcommand)]
        what: Generate,
    },
    /// Build the gadget graph of a 3-CNF formula.
    ReduceSat {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Variant::G)]
        variant: Variant,
        /// Write the `vertex_id role name` label map here.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Answer one problem with the exact exponential oracle.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        problem: Problem,
        #[arg(long)]
        clique: Option<String>,
        #[arg(long)]
        partition: Option<String>,
    },
    /// Compare every polynomial verdict of a preset corpus with the oracle.
    VerifyCampaign {
        preset: Preset,
        /// Keep only the first N instances.
        #[arg(long)]
        limit: Option<usize>,
        /// Sample count for randomised presets.
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum Generate {
    /// A named family, e.g. `petersen`, `cycle:5`, `F_n:3`.
    Family { name: String },
    /// G(n, p).
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// A random connected cubic graph.
    Cubic {
        #[arg(long)]
        n: usize,
    },
    /// A random 3-CNF formula in DIMACS.
    Cnf {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        clauses: usize,
        #[arg(long, value_enum, default_value_t = AssumptionSet::Basic)]
        assumptions: AssumptionSet,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    G,
    Gprime,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AssumptionSet {
    /// No complementary pair in a clause.
    Basic,
    /// Also: every literal occurs, and no variable occurs in every clause.
    All,
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs one command. `Err` is an input error (exit status 2).
pub fn run(cli: &Cli) -> Result<Outcome, String> {
    if cli.oracle_cap == 0 {
        return Err("--oracle-cap must be at least 1".into());
    }
    let config = SolverConfig {
        oracle_cap: cli.oracle_cap,
        omega_cap: cli.omega_cap,
    };
    match &cli.command {
        Command::Analyze {
            input,
            clique,
            partition,
        } => {
            let (id, g) = read_graph(input)?;
            let solver = Solver::new(&g, config);
            let mut queries = match clique {
                Some(c) => vec![Query::StrongClique(clique_arg(&g, c)?)],
                None => oracle::maximal_cliques(&g)
                    .into_iter()
                    .filter(|c| !c.is_empty())
                    .map(Query::StrongClique)
                    .collect(),
            };
            queries.extend([Query::Existence, Query::VertexCover, Query::EdgeCover]);
            let mut records: Vec<Record> = queries
                .iter()
                .map(|q| solve_record(&id, &g, &solver, q))
                .collect();
            match partition {
                Some(p) => records.push(solve_record(
                    &id,
                    &g,
                    &solver,
                    &Query::Partition(parse_partition(p)?),
                )),
                None => {
                    let mut r = Record::new(&id, Problem::Partition.as_str(), "-");
                    r.status = "skipped: no --partition".into();
                    records.push(r);
                }
            }
            records.push(solve_record(&id, &g, &solver, &Query::PartitionExistence));
            Ok(emit(&records, cli.format, 0))
        }
        Command::CheckStrong { input, clique } => {
            let (id, g) = read_graph(input)?;
            let q = Query::StrongClique(clique_arg(&g, clique)?);
            let r = solve_record(&id, &g, &Solver::new(&g, config), &q);
            single(r, cli.format)
        }
        Command::Extend { input, clique } => {
            let (id, g) = read_graph(input)?;
            let q = Query::Extension(clique_arg(&g, clique)?);
            let r = solve_record(&id, &g, &Solver::new(&g, config), &q);
            single(r, cli.format)
        }
        Command::Localizable { input, partition } => {
            let (id, g) = read_graph(input)?;
            let q = match partition {
                Some(p) => Query::Partition(parse_partition(p)?),
                None => Query::PartitionExistence,
            };
            let r = solve_record(&id, &g, &Solver::new(&g, config), &q);
            single(r, cli.format)
        }
        Command::ClassifyCubic { input } => {
            let (id, g) = read_graph(input)?;
            let start = Instant::now();
            let c = classify_cubic(&g).map_err(|e| e.to_string())?;
            let mut r = Record::new(id, "classify-cubic", Method::CubicClassification.as_str());
            r.micros = start.elapsed().as_micros() as u64;
            r.answer = Some(c.is_localizable());
            r.certificate = json!({ "tag": c.tag(), "classification": c });
            single(r, cli.format)
        }
        Command::RecognizeLine { input } => {
            let (id, g) = read_graph(input)?;
            let start = Instant::now();
            let result = recognize_line_graph(&g);
            let mut r = Record::new(id, "recognize-line", Method::LineGraph.as_str());
            r.micros = start.elapsed().as_micros() as u64;
            r.answer = Some(result.is_ok());
            r.certificate = match result {
                Ok(map) => json!({ "root_n": map.root.n(), "root_edges": map.to_edge }),
                Err(e) => json!({ "obstruction": e.obstruction }),
            };
            single(r, cli.format)
        }
        Command::Gen { what } => generate(what, cli.seed).map(|stdout| Outcome {
            stdout,
            ..Outcome::default()
        }),
        Command::ReduceSat {
            input,
            variant,
            labels,
        } => {
            let phi = parse_dimacs_cnf(&read_input(input)?).map_err(|e| e.to_string())?;
            let gadget = match variant {
                Variant::G => sat_gadget(&phi),
                Variant::Gprime => sat_gadget_prime(&phi),
            }
            .map_err(|e| e.to_string())?;
            if let Some(path) = labels {
                let text = write_labels(&gadget.graph, |v| gadget.role(v).to_string());
                fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(Outcome {
                stdout: write_edge_list(&gadget.graph),
                ..Outcome::default()
            })
        }
        Command::Oracle {
            input,
            problem,
            clique,
            partition,
        } => {
            let (id, g) = read_graph(input)?;
            let q = build_query(&g, *problem, clique.as_deref(), partition.as_deref())?;
            let start = Instant::now();
            let result = solve_oracle(&g, &q, config.oracle_cap);
            let micros = start.elapsed().as_micros() as u64;
            if let Err(
                e @ SolverError::Graph(_)
                | e @ SolverError::EmptyClique
                | e @ SolverError::InvalidPartition(_),
            ) = &result
            {
                return Err(e.to_string());
            }
            single(
                verdict_record(&id, &g, &q, result, micros, None, false),
                cli.format,
            )
        }
        Command::VerifyCampaign {
            preset,
            limit,
            samples,
        } => {
            let opts = CampaignOptions {
                seed: cli.seed,
                config,
                limit: *limit,
                samples: *samples,
            };
            let report = run_campaign(*preset, &opts);
            let failures = report.failures().count();
            let methods: Vec<String> = report
                .methods()
                .iter()
                .map(|(m, c)| format!("{m}={c}"))
                .collect();
            let mut out = emit(&report.records, cli.format, i32::from(failures > 0));
            out.stderr = format!(
                "{}: {} instances, {} records, {} failures; methods {}\n",
                report.preset,
                report.instances,
                report.records.len(),
                failures,
                methods.join(" ")
            );
            Ok(out)
        }
    }
}

fn read_input(path: &Path) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_graph(path: &Path) -> Result<(String, Graph), String> {
    let text = read_input(path)?;
    let g = parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let id = if path.as_os_str() == "-" {
        "stdin".to_string()
    } else {
        path.display().to_string()
    };
    Ok((id, g))
}

fn clique_arg(g: &Graph, s: &str) -> Result<strong_cliques::VertexSet, String> {
    let c = parse_clique(s)?;
    g.check_clique(&c).map_err(|e| e.to_string())?;
    Ok(c)
}

fn build_query(
    g: &Graph,
    problem: Problem,
    clique: Option<&str>,
    partition: Option<&str>,
) -> Result<Query, String> {
    let need_clique = || {
        clique
            .ok_or_else(|| format!("--problem {problem} needs --clique"))
            .and_then(|c| clique_arg(g, c))
    };
    Ok(match problem {
        Problem::StrongClique => Query::StrongClique(need_clique()?),
        Problem::Extension => Query::Extension(need_clique()?),
        Problem::Existence => Query::Existence,
        Problem::VertexCover => Query::VertexCover,
        Problem::EdgeCover => Query::EdgeCover,
        Problem::Partition => {
            let p = partition.ok_or_else(|| format!("--problem {problem} needs --partition"))?;
            Query::Partition(parse_partition(p)?)
        }
        Problem::PartitionExistence => Query::PartitionExistence,
    })
}

fn solve_record(id: &str, g: &Graph, solver: &Solver, q: &Query) -> Record {
    let start = Instant::now();
    let result = solver.solve(q);
    verdict_record(
        id,
        g,
        q,
        result,
        start.elapsed().as_micros() as u64,
        None,
        false,
    )
}

fn emit(records: &[Record], format: Format, code: i32) -> Outcome {
    let mut stdout = String::new();
    if format == Format::Tsv {
        stdout.push_str(TSV_HEADER);
        stdout.push('\n');
    }
    for r in records {
        stdout.push_str(&r.to_line(format));
        stdout.push('\n');
    }
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}

/// Single-query commands: 1 on a false answer, 2 when no answer was produced.
fn single(r: Record, format: Format) -> Result<Outcome, String> {
    let code = match r.answer {
        Some(true) => 0,
        Some(false) => 1,
        None => 2,
    };
    let mut out = emit(std::slice::from_ref(&r), format, code);
    if code == 2 {
        out.stderr = format!("{}\n", r.status);
    }
    Ok(out)
}

fn generate(what: &Generate, seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let g = match what {
        Generate::Family { name } => {
            let family: NamedFamily = name
                .parse()
                .map_err(|e: strong_cliques::GraphError| e.to_string())?;
            named(&family).map_err(|e| e.to_string())?
        }
        Generate::Random { n, p } => {
            if !(0.0..=1.0).contains(p) {
                return Err(format!("probability {p} outside [0, 1]"));
            }
            random_graph(*n, *p, &mut rng)
        }
        Generate::Cubic { n } => {
            if *n < 4 || n % 2 == 1 {
                return Err("cubic graphs need an even order of at least 4".into());
            }
            random_connected_cubic(*n, &mut rng)
        }
        Generate::Cnf {
            vars,
            clauses,
            assumptions,
        } => {
            let required = match assumptions {
                AssumptionSet::Basic => Assumptions::BASIC,
                AssumptionSet::All => Assumptions::ALL,
            };
            return random_3sat(*vars, *clauses, seed, required)
                .map(|phi| phi.to_dimacs())
                .map_err(|e| e.to_string());
        }
    };
    Ok(write_edge_list(&g))
}
