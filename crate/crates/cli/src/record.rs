//! Output records: one line per instance and query, as TSV or JSON lines.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Tsv,
    Jsonl,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "jsonl" | "json-lines" => Ok(Format::Jsonl),
            _ => Err(format!("unknown format `{s}` (tsv or jsonl)")),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Tsv => "tsv",
            Format::Jsonl => "jsonl",
        })
    }
}

/// `status` is `ok`, `mismatch`, `bad-certificate: ...`, `skipped: ...` or
/// `error: ...`. `expected` is only set when an oracle answer is known.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub instance: String,
    pub problem: String,
    pub query: Option<String>,
    pub answer: Option<bool>,
    pub method: String,
    pub certificate: Value,
    pub expected: Option<bool>,
    pub status: String,
    pub micros: u64,
}

pub const TSV_HEADER: &str =
    "instance\tproblem\tquery\tanswer\tmethod\tstatus\texpected\tmicros\tcertificate";

impl Record {
    pub fn new(
        instance: impl Into<String>,
        problem: impl Into<String>,
        method: impl Into<String>,
    ) -> Record {
        Record {
            instance: instance.into(),
            problem: problem.into(),
            query: None,
            answer: None,
            method: method.into(),
            certificate: Value::Null,
            expected: None,
            status: "ok".into(),
            micros: 0,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.status == "ok"
    }

    pub fn is_skipped(&self) -> bool {
        self.status.starts_with("skipped")
    }

    pub fn to_line(&self, format: Format) -> String {
        match format {
            Format::Jsonl => serde_json::to_string(self).expect("records serialize"),
            Format::Tsv => {
                let opt = |b: Option<bool>| b.map_or("-".to_string(), |b| b.to_string());
                [
                    self.instance.clone(),
                    self.problem.clone(),
                    self.query.clone().unwrap_or_else(|| "-".into()),
                    opt(self.answer),
                    self.method.clone(),
                    self.status.clone(),
                    opt(self.expected),
                    self.micros.to_string(),
                    self.certificate.to_string(),
                ]
                .join("\t")
            }
        }
    }

    pub fn parse_line(line: &str, format: Format) -> Result<Record, String> {
        match format {
            Format::Jsonl => serde_json::from_str(line).map_err(|e| e.to_string()),
            Format::Tsv => {
                let f: Vec<&str> = line.split('\t').collect();
                let [instance, problem, query, answer, method, status, expected, micros, certificate] =
                    f[..]
                else {
                    return Err(format!(
                        "expected 9 tab-separated fields, found {}",
                        f.len()
                    ));
                };
                let opt = |s: &str| -> Result<Option<bool>, String> {
                    match s {
                        "-" => Ok(None),
                        s => s
                            .parse()
                            .map(Some)
                            .map_err(|_| format!("invalid boolean `{s}`")),
                    }
                };
                Ok(Record {
                    instance: instance.into(),
                    problem: problem.into(),
                    query: (query != "-").then(|| query.to_string()),
                    answer: opt(answer)?,
                    method: method.into(),
                    status: status.into(),
                    expected: opt(expected)?,
                    micros: micros
                        .parse()
                        .map_err(|_| format!("invalid time `{micros}`"))?,
                    certificate: serde_json::from_str(certificate).map_err(|e| e.to_string())?,
                })
            }
        }
    }
}

/// Parses a whole output stream, skipping the TSV header.
pub fn parse_records(text: &str, format: Format) -> Result<Vec<Record>, String> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && *l != TSV_HEADER)
        .map(|(i, l)| Record::parse_line(l, format).map_err(|e| format!("line {}: {e}", i + 1)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let mut r = Record::new("p4", "partition-existence", "subcubic");
        r.answer = Some(true);
        r.query = Some("{0,1}".into());
        r.certificate = serde_json::json!({"kind": "partition", "value": [[0, 1], [2, 3]]});
        r.micros = 17;
        for format in [Format::Tsv, Format::Jsonl] {
            assert_eq!(Record::parse_line(&r.to_line(format), format).unwrap(), r);
        }
        let blank = Record::new("x", "existence", "oracle");
        assert_eq!(
            Record::parse_line(&blank.to_line(Format::Tsv), Format::Tsv).unwrap(),
            blank
        );
    }

    #[test]
    fn rejects_short_rows() {
        assert!(Record::parse_line("a\tb", Format::Tsv).is_err());
    }
}
