//! 3-SAT instances and the gadget graphs built from them.
//!
//! Literals are signed, 1-based variable indices: `3` is `x3`, `-3` its
//! negation. Gadget graphs use a fixed vertex layout: the `m` clause
//! vertices first, then `x_i, ~x_i` for each variable, then (prime variant
//! only) `u_i, v_i, ~u_i, ~v_i` for each variable.

use std::fmt;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexSet};

pub type Literal = i32;

/// Largest instance `sat_bruteforce` accepts.
pub const BRUTEFORCE_MAX_VARS: usize = 24;

const RETRY_BUDGET: usize = 10_000;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SatError {
    #[error("clause {clause}: literal {literal} outside 1..={num_vars}")]
    LiteralOutOfRange {
        clause: usize,
        literal: Literal,
        num_vars: usize,
    },
    #[error("clause {clause}: literal {literal} repeated")]
    RepeatedLiteral { clause: usize, literal: Literal },
    #[error("assumption (i) violated: clause {clause} contains both x{var} and ~x{var}")]
    ComplementaryPair { clause: usize, var: usize },
    #[error("assumption (ii) violated: literal {} occurs in no clause", show(*.0))]
    MissingLiteral(Literal),
    #[error("assumption (iii) violated: every clause contains x{0} or ~x{0}")]
    CoveringVariable(usize),
    #[error("instance has no clauses")]
    NoClauses,
    #[error("{0} variables exceed the brute-force limit of {BRUTEFORCE_MAX_VARS}")]
    TooManyVariables(usize),
    #[error("no instance with n={n}, m={m} met the assumptions after {attempts} attempts")]
    RetryBudget { n: usize, m: usize, attempts: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

fn show(l: Literal) -> String {
    if l < 0 {
        format!("~x{}", -l)
    } else {
        format!("x{l}")
    }
}

/// Which of the optional assumptions to require. Assumption (i), no clause
/// holding a complementary pair, is always enforced.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumptions {
    /// (ii): every literal occurs in some clause.
    pub every_literal_occurs: bool,
    /// (iii): for every variable some clause avoids both its literals.
    pub no_covering_variable: bool,
}

impl Assumptions {
    pub const BASIC: Assumptions = Assumptions {
        every_literal_occurs: false,
        no_covering_variable: false,
    };
    pub const ALL: Assumptions = Assumptions {
        every_literal_occurs: true,
        no_covering_variable: true,
    };
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatInstance {
    num_vars: usize,
    clauses: Vec<[Literal; 3]>,
}

impl SatInstance {
    /// Validates literal ranges, distinctness and assumption (i).
    pub fn new(num_vars: usize, clauses: Vec<[Literal; 3]>) -> Result<SatInstance, SatError> {
        for (j, c) in clauses.iter().enumerate() {
            for (a, &l) in c.iter().enumerate() {
                if l == 0 || l.unsigned_abs() as usize > num_vars {
                    return Err(SatError::LiteralOutOfRange {
                        clause: j,
                        literal: l,
                        num_vars,
                    });
                }
                for &k in &c[..a] {
                    if k == l {
                        return Err(SatError::RepeatedLiteral {
                            clause: j,
                            literal: l,
                        });
                    }
                    if k == -l {
                        return Err(SatError::ComplementaryPair {
                            clause: j,
                            var: l.unsigned_abs() as usize,
                        });
                    }
                }
            }
        }
        Ok(SatInstance { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[[Literal; 3]] {
        &self.clauses
    }

    /// Current status of assumptions (ii) and (iii).
    pub fn flags(&self) -> Assumptions {
        Assumptions {
            every_literal_occurs: self.missing_literal().is_none(),
            no_covering_variable: self.covering_variable().is_none(),
        }
    }

    fn missing_literal(&self) -> Option<Literal> {
        (1..=self.num_vars as Literal)
            .flat_map(|v| [v, -v])
            .find(|l| !self.clauses.iter().any(|c| c.contains(l)))
    }

    fn covering_variable(&self) -> Option<usize> {
        (1..=self.num_vars).find(|&v| {
            let v = v as Literal;
            self.clauses
                .iter()
                .all(|c| c.contains(&v) || c.contains(&-v))
        })
    }

    pub fn check(&self, required: Assumptions) -> Result<(), SatError> {
        if required.every_literal_occurs {
            if let Some(l) = self.missing_literal() {
                return Err(SatError::MissingLiteral(l));
            }
        }
        if required.no_covering_variable {
            if let Some(v) = self.covering_variable() {
                return Err(SatError::CoveringVariable(v));
            }
        }
        Ok(())
    }

    /// `assignment[i]` is the value of `x_{i+1}`.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for [a, b, c] in &self.clauses {
            out.push_str(&format!("{a} {b} {c} 0\n"));
        }
        out
    }
}

impl fmt::Display for SatInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                format!(
                    "({})",
                    c.iter().map(|&l| show(l)).collect::<Vec<_>>().join(" | ")
                )
            })
            .collect();
        write!(f, "{}", parts.join(" & "))
    }
}

/// Reads DIMACS CNF where every clause has exactly three literals.
pub fn parse_dimacs_cnf(text: &str) -> Result<SatInstance, SatError> {
    let err = |line: usize, msg: String| SatError::Parse { line, msg };
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut pending: Vec<Literal> = Vec::new();
    let mut pending_line = 0;
    let mut last_line = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('c') {
            continue;
        }
        if s.starts_with('%') {
            break;
        }
        last_line = line;
        if s.starts_with('p') {
            if header.is_some() {
                return Err(err(line, "duplicate header".into()));
            }
            let f: Vec<&str> = s.split_whitespace().collect();
            let parsed = match f[..] {
                ["p", "cnf", n, m] => n.parse().ok().zip(m.parse().ok()),
                _ => None,
            };
            header = Some(parsed.ok_or_else(|| err(line, format!("malformed header `{s}`")))?);
            continue;
        }
        let Some((n, _)) = header else {
            return Err(err(line, "clause before `p cnf` header".into()));
        };
        for tok in s.split_whitespace() {
            let l: Literal = tok
                .parse()
                .map_err(|_| err(line, format!("invalid literal `{tok}`")))?;
            if l == 0 {
                if pending.len() != 3 {
                    return Err(err(
                        line,
                        format!("clause of width {}, expected 3", pending.len()),
                    ));
                }
                clauses.push([pending[0], pending[1], pending[2]]);
                pending.clear();
                continue;
            }
            if l.unsigned_abs() as usize > n {
                return Err(err(line, format!("literal {l} outside 1..={n}")));
            }
            if pending.is_empty() {
                pending_line = line;
            }
            pending.push(l);
            if pending.len() > 3 {
                return Err(err(line, "clause wider than 3".into()));
            }
        }
    }
    if !pending.is_empty() {
        return Err(err(pending_line, "clause missing terminating 0".into()));
    }
    let Some((n, m)) = header else {
        return Err(err(last_line.max(1), "missing `p cnf` header".into()));
    };
    if clauses.len() != m {
        return Err(err(
            last_line,
            format!("header declares {m} clauses, found {}", clauses.len()),
        ));
    }
    SatInstance::new(n, clauses)
}

/// Uniform random clauses over three distinct variables, retried until the
/// required assumptions hold. Deterministic per `(n, m, seed, required)`.
pub fn random_3sat(
    n: usize,
    m: usize,
    seed: u64,
    required: Assumptions,
) -> Result<SatInstance, SatError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let feasible = n >= 3
        && (!required.every_literal_occurs || 3 * m >= 2 * n)
        && (!required.no_covering_variable || n >= 4 && m >= 2);
    let attempts = if feasible { RETRY_BUDGET } else { 0 };
    for _ in 0..attempts {
        let clauses: Vec<[Literal; 3]> = (0..m)
            .map(|_| {
                let vars = sample(&mut rng, n, 3);
                let mut c = [0; 3];
                for (slot, v) in c.iter_mut().zip(vars.iter()) {
                    let l = v as Literal + 1;
                    *slot = if rng.gen() { l } else { -l };
                }
                c
            })
            .collect();
        let inst = SatInstance::new(n, clauses).expect("distinct variables per clause");
        if inst.check(required).is_ok() {
            return Ok(inst);
        }
    }
    Err(SatError::RetryBudget { n, m, attempts })
}

/// Exhaustive satisfiability check, returning a satisfying assignment
/// (`assignment[i]` for `x_{i+1}`) when one exists.
pub fn sat_bruteforce(phi: &SatInstance) -> Result<Option<Vec<bool>>, SatError> {
    let n = phi.num_vars;
    if n > BRUTEFORCE_MAX_VARS {
        return Err(SatError::TooManyVariables(n));
    }
    // each clause as (positive mask, negative mask)
    let masks: Vec<(u32, u32)> = phi
        .clauses
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(p, q), &l| {
                let bit = 1u32 << (l.unsigned_abs() - 1);
                if l > 0 {
                    (p | bit, q)
                } else {
                    (p, q | bit)
                }
            })
        })
        .collect();
    let found = (0u32..1 << n).find(|&a| masks.iter().all(|&(p, q)| a & p != 0 || !a & q != 0));
    Ok(found.map(|a| (0..n).map(|i| a >> i & 1 == 1).collect()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum GadgetVariant {
    G,
    GPrime,
}

#[derive(Clone, Debug)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub clause_clique: VertexSet,
    /// `(x_i, ~x_i)` for `i = 1..=n`.
    pub literal_pairs: Vec<(usize, usize)>,
    pub variant: GadgetVariant,
}

impl GadgetGraph {
    pub fn literal_vertex(&self, l: Literal) -> usize {
        let (x, nx) = self.literal_pairs[l.unsigned_abs() as usize - 1];
        if l > 0 {
            x
        } else {
            nx
        }
    }

    /// `{C} ∪ {{x_i, ~x_i}}`, which covers the plain gadget exactly.
    pub fn canonical_partition(&self) -> Vec<VertexSet> {
        let mut parts = vec![self.clause_clique.clone()];
        parts.extend(
            self.literal_pairs
                .iter()
                .map(|&(a, b)| VertexSet::from([a, b])),
        );
        parts
    }

    pub fn role(&self, v: usize) -> &'static str {
        let m = self.clause_clique.len();
        let n = self.literal_pairs.len();
        if v < m {
            "clause"
        } else if v < m + 2 * n {
            "literal"
        } else {
            "auxiliary"
        }
    }
}

fn build(phi: &SatInstance, variant: GadgetVariant) -> GadgetGraph {
    let m = phi.clauses.len();
    let n = phi.num_vars;
    let lit = |l: Literal| m + 2 * (l.unsigned_abs() as usize - 1) + usize::from(l < 0);
    let mut edges = Vec::new();
    let mut names: Vec<String> = (1..=m).map(|j| format!("c{j}")).collect();
    for a in 0..m {
        for b in a + 1..m {
            edges.push((a, b));
        }
    }
    for i in 1..=n {
        names.push(format!("x{i}"));
        names.push(format!("~x{i}"));
        edges.push((lit(i as Literal), lit(-(i as Literal))));
    }
    for (j, c) in phi.clauses.iter().enumerate() {
        edges.extend(c.iter().map(|&l| (j, lit(l))));
    }
    if variant == GadgetVariant::GPrime {
        for i in 0..n {
            let x = lit(i as Literal + 1);
            let nx = x + 1;
            let [u, v, nu, nv] = std::array::from_fn(|k| m + 2 * n + 4 * i + k);
            for k in ["u", "v", "~u", "~v"] {
                names.push(format!("{k}{}", i + 1));
            }
            edges.extend([
                (x, u),
                (x, v),
                (u, v),
                (u, nu),
                (u, nv),
                (v, nu),
                (nu, nv),
                (nx, nu),
                (nx, nv),
            ]);
        }
    }
    let total = names.len();
    let graph = Graph::new(total, &edges)
        .and_then(|g| g.with_labels(names))
        .expect("gadget layout is consistent");
    GadgetGraph {
        graph,
        clause_clique: (0..m).collect(),
        literal_pairs: (1..=n as Literal).map(|i| (lit(i), lit(-i))).collect(),
        variant,
    }
}

/// The graph whose clause clique is strong iff `phi` is unsatisfiable.
pub fn sat_gadget(phi: &SatInstance) -> Result<GadgetGraph, SatError> {
    if phi.clauses.is_empty() {
        return Err(SatError::NoClauses);
    }
    Ok(build(phi, GadgetVariant::G))
}

/// The extended graph that has a strong clique iff `phi` is unsatisfiable.
/// Requires assumptions (ii) and (iii).
pub fn sat_gadget_prime(phi: &SatInstance) -> Result<GadgetGraph, SatError> {
    if phi.clauses.is_empty() {
        return Err(SatError::NoClauses);
    }
    phi.check(Assumptions::ALL)?;
    Ok(build(phi, GadgetVariant::GPrime))
}
