//! Reading and writing ballot profiles.
//!
//! Two text formats are supported:
//!
//! * matrix CSV: one row per candidate, first column the candidate label,
//!   one column per voter holding the rank that voter gives the candidate.
//!   A header row is recognized (and skipped) when any cell after the
//!   first fails to parse as an integer.
//! * orders: one line per ballot group, `count: A > B > C`, where the
//!   count prefix is optional and defaults to 1. Blank lines and `#`
//!   comments are ignored. The first line fixes the candidate universe and
//!   the label-to-index mapping; every later line must rank exactly the
//!   same candidates.
//!
//! [`detect_and_parse`] routes on a simple signal: ballot text containing
//! `>` is in the orders format, anything else is matrix CSV.

use crate::ranking::{Profile, Ranking, RankingError};
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("input contains no ballots")]
    Empty,
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: candidate {label:?} is not in the universe set by the first order")]
    UnknownLabel { line: usize, label: String },
    #[error("duplicate candidate label {0:?}")]
    DuplicateLabel(String),
    #[error("line {line}: order must rank all {expected} candidates exactly once")]
    IncompleteOrder { line: usize, expected: usize },
    #[error(transparent)]
    Ranking(#[from] RankingError),
}

/// Which format a document was read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SourceFormat {
    MatrixCsv,
    Orders,
}

/// A profile together with its candidate labels.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileDocument {
    pub labels: Vec<String>,
    pub profile: Profile,
    pub source: SourceFormat,
}

impl ProfileDocument {
    pub fn new(labels: Vec<String>, profile: Profile, source: SourceFormat) -> ProfileDocument {
        debug_assert_eq!(labels.len(), profile.m());
        ProfileDocument {
            labels,
            profile,
            source,
        }
    }

    /// Candidate labels for a set of indices, in index order.
    pub fn label_set(&self, candidates: &BTreeSet<usize>) -> Vec<String> {
        candidates.iter().map(|&c| self.labels[c].clone()).collect()
    }
}

/// `A`, `B`, ... `Z`, then `C27`, `C28`, ...
pub fn default_labels(m: usize) -> Vec<String> {
    (0..m)
        .map(|c| {
            if c < 26 {
                char::from(b'A' + c as u8).to_string()
            } else {
                format!("C{}", c + 1)
            }
        })
        .collect()
}

/// Parses candidate-rows CSV, tolerating an optional header row.
pub fn parse_matrix_csv(text: &str) -> Result<ProfileDocument, ParseError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut labels: Vec<String> = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (idx, record) in reader.records().enumerate() {
        let line = idx + 1;
        let record = record.map_err(|e| ParseError::Malformed {
            line,
            msg: e.to_string(),
        })?;
        if record.len() < 2 {
            return Err(ParseError::Malformed {
                line,
                msg: "expected a label cell and at least one rank cell".into(),
            });
        }
        let cells: Vec<&str> = record.iter().collect();
        let ranks: Result<Vec<usize>, _> = cells[1..].iter().map(|s| s.parse::<usize>()).collect();
        let Ok(ranks) = ranks else {
            if rows.is_empty() && labels.is_empty() {
                continue; // header row
            }
            return Err(ParseError::Malformed {
                line,
                msg: "rank cells must be positive integers".into(),
            });
        };
        let label = cells[0].to_string();
        if label.is_empty() {
            return Err(ParseError::Malformed {
                line,
                msg: "candidate label is empty".into(),
            });
        }
        if labels.contains(&label) {
            return Err(ParseError::DuplicateLabel(label));
        }
        labels.push(label);
        rows.push(ranks);
    }
    if rows.is_empty() {
        return Err(ParseError::Empty);
    }
    let profile = Profile::from_rows(&rows)?;
    Ok(ProfileDocument::new(labels, profile, SourceFormat::MatrixCsv))
}

/// Parses the orders format; see the module docs for the grammar.
pub fn parse_orders(text: &str) -> Result<ProfileDocument, ParseError> {
    let mut labels: Vec<String> = Vec::new();
    let mut columns: Vec<Ranking> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (count, order_text) = match content.split_once(':') {
            Some((head, tail)) => {
                let count = head.trim().parse::<usize>().map_err(|_| ParseError::Malformed {
                    line,
                    msg: format!("ballot count {:?} is not an integer", head.trim()),
                })?;
                (count, tail)
            }
            None => (1, content),
        };
        if count == 0 {
            return Err(ParseError::Malformed {
                line,
                msg: "ballot count must be at least 1".into(),
            });
        }
        let names: Vec<String> = order_text
            .split('>')
            .map(|s| s.trim().to_string())
            .collect();
        if names.iter().any(String::is_empty) {
            return Err(ParseError::Malformed {
                line,
                msg: "order has an empty candidate name".into(),
            });
        }
        if labels.is_empty() {
            for name in &names {
                if labels.contains(name) {
                    return Err(ParseError::DuplicateLabel(name.clone()));
                }
                labels.push(name.clone());
            }
        }
        if names.len() != labels.len() {
            return Err(ParseError::IncompleteOrder {
                line,
                expected: labels.len(),
            });
        }
        let mut ranks = vec![0usize; labels.len()];
        for (pos, name) in names.iter().enumerate() {
            let c = labels
                .iter()
                .position(|l| l == name)
                .ok_or_else(|| ParseError::UnknownLabel {
                    line,
                    label: name.clone(),
                })?;
            if ranks[c] != 0 {
                return Err(ParseError::IncompleteOrder {
                    line,
                    expected: labels.len(),
                });
            }
            ranks[c] = pos + 1;
        }
        let ranking = Ranking::from_ranks(ranks)?;
        columns.extend(std::iter::repeat_n(ranking, count));
    }
    if columns.is_empty() {
        return Err(ParseError::Empty);
    }
    let profile = Profile::new(columns)?;
    Ok(ProfileDocument::new(labels, profile, SourceFormat::Orders))
}

/// Routes ballot text to the right parser: `>` means the orders format.
pub fn detect_and_parse(text: &str) -> Result<ProfileDocument, ParseError> {
    let meaningful = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .any(|l| l.contains('>'));
    if meaningful {
        parse_orders(text)
    } else {
        parse_matrix_csv(text)
    }
}

/// Candidate-rows CSV with a `candidate,v1,...,vn` header.
pub fn to_matrix_csv(labels: &[String], profile: &Profile) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["candidate".to_string()];
    header.extend((1..=profile.n()).map(|v| format!("v{v}")));
    writer.write_record(&header).expect("write to vec");
    for (c, row) in profile.rows().into_iter().enumerate() {
        let mut record = vec![labels[c].clone()];
        record.extend(row.into_iter().map(|r| r.to_string()));
        writer.write_record(&record).expect("write to vec");
    }
    String::from_utf8(writer.into_inner().expect("flush to vec")).expect("utf8 csv")
}

/// Orders text, grouping consecutive identical ballots into counted lines.
pub fn to_orders(labels: &[String], profile: &Profile) -> String {
    let mut out = String::new();
    let columns = profile.columns();
    let mut i = 0;
    while i < columns.len() {
        let mut j = i;
        while j < columns.len() && columns[j] == columns[i] {
            j += 1;
        }
        let order: Vec<&str> = columns[i]
            .inverse()
            .ranks()
            .iter()
            .map(|&c| labels[c - 1].as_str())
            .collect();
        writeln!(out, "{}: {}", j - i, order.join(" > ")).expect("write to string");
        i = j;
    }
    out
}
