//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! 0-based ids. Lines starting with `#` and blank lines are ignored.
//!
//! Label sidecar format: one line `vertex_id role name` per vertex.

use std::fmt::Write;

use super::{Graph, GraphError};

fn parse_err(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, s: &str) -> Result<(usize, usize), GraphError> {
    let mut it = s.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it
            .next()
            .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if it.next().is_some() {
        return Err(parse_err(line, "expected exactly two fields"));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing `n m` header"))?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for (line, s) in lines {
        let (u, v) = parse_pair(line, s)?;
        if u >= n || v >= n {
            return Err(parse_err(line, format!("endpoint out of range 0..{n}")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop at {u}")));
        }
        edges.push((u, v));
        last_line = line;
    }
    if edges.len() != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::new(n, &edges)
}

/// Writes the canonical form: edges sorted, each as `u v` with `u < v`.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Writes `vertex_id role name` lines; `role` is produced by `role_of`.
pub fn write_labels(g: &Graph, role_of: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        let name = g.labels().map(|l| l[v].as_str()).unwrap_or("-");
        writeln!(out, "{v} {} {name}", role_of(v)).unwrap();
    }
    out
}

/// Parses a label sidecar into `(role, name)` per vertex.
pub fn parse_labels(text: &str, n: usize) -> Result<Vec<(String, String)>, GraphError> {
    let mut out: Vec<Option<(String, String)>> = vec![None; n];
    for (line, s) in content_lines(text) {
        let fields: Vec<&str> = s.split_whitespace().collect();
        let [id, role, name] = fields[..] else {
            return Err(parse_err(line, "expected `vertex_id role name`"));
        };
        let id: usize = id
            .parse()
            .map_err(|_| parse_err(line, format!("invalid vertex id `{id}`")))?;
        if id >= n {
            return Err(parse_err(line, format!("vertex {id} out of range")));
        }
        out[id] = Some((role.to_string(), name.to_string()));
    }
    let found = out.iter().filter(|x| x.is_some()).count();
    if found != n {
        return Err(GraphError::LabelCount { expected: n, found });
    }
    Ok(out.into_iter().map(Option::unwrap).collect())
}
