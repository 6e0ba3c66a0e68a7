//! Command-line front end: graph ingestion, query routing, certificate
//! output and verification campaigns.

pub mod campaign;
pub mod record;
pub mod run;

use strong_cliques::solvers::{verify_verdict, Query, SolverError, Verdict};
use strong_cliques::{Graph, VertexSet};

use record::Record;

pub use run::{run, Cli, Outcome};

/// Parses `"v1,v2,..."`.
pub fn parse_clique(s: &str) -> Result<VertexSet, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(VertexSet::default());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("invalid vertex `{t}`"))
        })
        .collect()
}

/// Parses `"v1,v2|v3,..."`.
pub fn parse_partition(s: &str) -> Result<Vec<VertexSet>, String> {
    s.split('|').map(parse_clique).collect()
}

fn ids(c: &VertexSet) -> String {
    c.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// The query argument in command-line syntax.
pub fn query_text(q: &Query) -> Option<String> {
    match q {
        Query::StrongClique(c) | Query::Extension(c) => Some(ids(c)),
        Query::Partition(parts) => Some(parts.iter().map(ids).collect::<Vec<_>>().join("|")),
        _ => None,
    }
}

/// Turns a solver result into a record. With `expected` set, a differing
/// answer is a mismatch; with `verify`, the certificate is re-checked.
pub fn verdict_record(
    instance: &str,
    g: &Graph,
    query: &Query,
    result: Result<Verdict, SolverError>,
    micros: u64,
    expected: Option<bool>,
    verify: bool,
) -> Record {
    let mut r = Record::new(instance, query.problem().as_str(), "-");
    r.query = query_text(query);
    r.micros = micros;
    r.expected = expected;
    match result {
        Err(SolverError::OracleRefused { .. }) => r.status = "skipped: cap".into(),
        Err(e) => r.status = format!("error: {e}"),
        Ok(v) => {
            r.method = v.method.as_str().into();
            r.answer = Some(v.answer);
            r.certificate = serde_json::to_value(&v.certificate).expect("certificates serialize");
            if expected.is_some_and(|e| e != v.answer) {
                r.status = "mismatch".into();
            } else if verify {
                if let Err(msg) = verify_verdict(g, query, &v) {
                    r.status = format!("bad-certificate: {msg}");
                }
            }
        }
    }
    r
}
