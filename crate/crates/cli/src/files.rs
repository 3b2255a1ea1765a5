//! Shift definition files and block-code files.
//!
//! ```text
//! # golden mean shift
//! alphabet: 0 1
//! forbidden: 11
//! ```
//!
//! A vertex shift uses `matrix:` followed by one row of `0`/`1` per symbol,
//! a sofic shift uses `graph:` followed by edge lines `A -0-> B`.
//! Block codes are `window: m` followed by lines `01 -> b`.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use subshift_core::{Alphabet, BlockCode, Edge, Presentation, Subshift, Word};

use crate::error::{CliError, Result};

/// Non-blank lines with comments removed, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_shift(path: &Path) -> Result<Subshift> {
    parse_shift(&read(path)?, &path.display().to_string())
}

pub fn parse_shift(text: &str, path: &str) -> Result<Subshift> {
    let err = |line: usize, message: String| CliError::Parse {
        path: path.into(),
        line,
        message,
    };
    let mut it = lines(text).peekable();
    let (line, header) = it
        .next()
        .ok_or_else(|| err(1, "empty file, expected `alphabet:`".into()))?;
    let tokens = header
        .strip_prefix("alphabet:")
        .ok_or_else(|| err(line, format!("expected `alphabet:`, found {header:?}")))?;
    let tokens: Vec<&str> = tokens.split_whitespace().collect();
    let alphabet = Alphabet::new(&tokens).map_err(|e| err(line, e.to_string()))?;
    let word = |line: usize, s: &str| -> Result<Word> {
        alphabet.parse_word(s).map_err(|e| err(line, e.to_string()))
    };

    let (pline, kind) = it
        .next()
        .ok_or_else(|| err(line, "missing presentation after the alphabet".into()))?;
    let presentation = if let Some(rest) = kind.strip_prefix("forbidden:") {
        let mut seen = BTreeSet::new();
        let mut words = Vec::new();
        let mut add = |line: usize, s: &str| -> Result<()> {
            let w = word(line, s)?;
            if w.is_empty() {
                return Err(err(line, "forbidden words must be nonempty".into()));
            }
            if !seen.insert(w.clone()) {
                return Err(err(line, format!("duplicate forbidden word {s}")));
            }
            words.push(w);
            Ok(())
        };
        for s in rest.split_whitespace() {
            add(pline, s)?;
        }
        for (line, l) in it.by_ref() {
            for s in l.split_whitespace() {
                add(line, s)?;
            }
        }
        Presentation::ForbiddenWords(words)
    } else if kind == "matrix:" {
        let n = alphabet.len();
        let mut rows = Vec::new();
        for (line, l) in it.by_ref() {
            let row: Vec<bool> = l
                .split_whitespace()
                .map(|v| match v {
                    "0" => Ok(false),
                    "1" => Ok(true),
                    _ => Err(err(line, format!("matrix entries are 0 or 1, found {v:?}"))),
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(err(
                    line,
                    format!("row has {} entries, expected {n}", row.len()),
                ));
            }
            rows.push((line, row));
        }
        if rows.len() != n {
            let line = rows.last().map_or(pline, |r| r.0);
            return Err(err(
                line,
                format!("matrix has {} rows, expected {n}", rows.len()),
            ));
        }
        Presentation::VertexShift(rows.into_iter().map(|r| r.1).collect())
    } else if kind == "graph:" {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        let mut vertex = |name: &str| -> usize {
            match vertices.iter().position(|v| v == name) {
                Some(i) => i,
                None => {
                    vertices.push(name.to_string());
                    vertices.len() - 1
                }
            }
        };
        for (line, l) in it.by_ref() {
            let parts: Vec<&str> = l.split_whitespace().collect();
            let label = match parts.as_slice() {
                [_, arrow, _] => arrow.strip_prefix('-').and_then(|a| a.strip_suffix("->")),
                _ => None,
            };
            let label = label
                .ok_or_else(|| err(line, format!("expected `from -symbol-> to`, found {l:?}")))?;
            let symbol = alphabet
                .symbol(label)
                .ok_or_else(|| err(line, format!("unknown symbol {label:?}")))?;
            let (from, to) = (vertex(parts[0]), vertex(parts[2]));
            if !seen.insert((from, symbol, to)) {
                return Err(err(line, format!("duplicate edge {l}")));
            }
            edges.push(Edge {
                from,
                label: symbol,
                to,
            });
        }
        Presentation::LabeledGraph { vertices, edges }
    } else {
        return Err(err(
            pline,
            format!("expected `forbidden:`, `matrix:` or `graph:`, found {kind:?}"),
        ));
    };
    if let Some((line, l)) = it.next() {
        return Err(err(line, format!("unexpected line {l:?}")));
    }
    Subshift::new(alphabet, presentation).map_err(|e| err(pline, e.to_string()))
}

pub fn load_code(path: &Path, source: &Subshift, target: &Subshift) -> Result<BlockCode> {
    parse_code(&read(path)?, &path.display().to_string(), source, target)
}

pub fn parse_code(
    text: &str,
    path: &str,
    source: &Subshift,
    target: &Subshift,
) -> Result<BlockCode> {
    let err = |line: usize, message: String| CliError::Parse {
        path: path.into(),
        line,
        message,
    };
    let mut it = lines(text);
    let (line, header) = it
        .next()
        .ok_or_else(|| err(1, "empty file, expected `window:`".into()))?;
    let window: usize = header
        .strip_prefix("window:")
        .and_then(|w| w.trim().parse().ok())
        .filter(|w| *w >= 1)
        .ok_or_else(|| {
            err(
                line,
                format!("expected `window: m` with m >= 1, found {header:?}"),
            )
        })?;
    let mut table = BTreeMap::new();
    for (line, l) in it {
        let (lhs, rhs) = l
            .split_once("->")
            .ok_or_else(|| err(line, format!("expected `word -> symbol`, found {l:?}")))?;
        let (lhs, rhs) = (lhs.trim(), rhs.trim());
        let w = source
            .alphabet()
            .parse_word(lhs)
            .map_err(|e| err(line, e.to_string()))?;
        if w.len() != window {
            return Err(err(
                line,
                format!("{lhs} has length {}, expected {window}", w.len()),
            ));
        }
        let s = target
            .alphabet()
            .symbol(rhs)
            .ok_or_else(|| err(line, format!("unknown target symbol {rhs:?}")))?;
        if table.insert(w, s).is_some() {
            return Err(err(line, format!("duplicate entry for {lhs}")));
        }
    }
    BlockCode::new(source, target, window, table).map_err(|e| CliError::Invalid {
        path: path.into(),
        message: e.to_string(),
    })
}
