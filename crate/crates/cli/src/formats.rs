//! Text inputs: matrix sources, rule tables, properties, backends and ranges.
//!
//! A matrix source has one entry per line; omitted entries are zero and the
//! dimension is the largest index that appears.
//!
//! ```text
//! # shift on C_3
//! entry(1,1) = 1*g
//! entry(1,2) = (1+t)*e + 2*g2
//! ```
//!
//! A rule table lists the alphabet, the memory set, and one line per pattern,
//! giving the values on the memory elements in the order they were listed.
//!
//! ```text
//! alphabet: 0 1
//! memory: e, g
//! 0 0 -> 0
//! 0 1 -> 0
//! 1 0 -> 0
//! 1 1 -> 1
//! ```
//!
//! `#` starts a comment in both formats.

use std::ops::RangeInclusive;

use kaplansky_core::lca::GeneralCA;
use kaplansky_core::{Field, Group, GroupRingMatrix, Subset};

/// A problem at a 1-based line of an input file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SourceError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, SourceError> {
    Err(SourceError {
        line,
        message: message.into(),
    })
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

/// Splits at `sep` outside parentheses.
fn split_top_level(text: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&text[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

pub fn parse_matrix_source(
    text: &str,
    group: &Group,
    field: &Field,
) -> Result<GroupRingMatrix, SourceError> {
    let mut quads = Vec::new();
    let mut d = 0;
    for (line, content) in content_lines(text) {
        let Some((lhs, rhs)) = content.split_once('=') else {
            return err(line, "expected `entry(i,j) = ...`");
        };
        let (i, j) = parse_position(lhs.trim()).ok_or_else(|| SourceError {
            line,
            message: format!(
                "expected `entry(i,j)` with 1-based indices, found {:?}",
                lhs.trim()
            ),
        })?;
        d = d.max(i).max(j);
        for term in split_top_level(rhs, '+') {
            let term = term.trim();
            if term.is_empty() {
                return err(line, "empty term");
            }
            let (coeff, label) = match term.split_once('*') {
                Some((c, l)) => {
                    let c = c.trim();
                    let c = c
                        .strip_prefix('(')
                        .and_then(|c| c.strip_suffix(')'))
                        .unwrap_or(c);
                    (c.to_string(), l.trim())
                }
                None if term == "0" => continue,
                None => ("1".to_string(), term),
            };
            if let Err(e) = field.parse_elem(&coeff) {
                return err(line, e.to_string());
            }
            if group.index_of(label).is_none() {
                return err(line, format!("unknown element label {label:?}"));
            }
            quads.push((i, j, label.to_string(), coeff));
        }
    }
    if d == 0 {
        return err(1, "no entries");
    }
    GroupRingMatrix::from_quadruples(group, field, d, &quads).map_err(|e| SourceError {
        line: 1,
        message: e.to_string(),
    })
}

fn parse_position(lhs: &str) -> Option<(usize, usize)> {
    let inner = lhs
        .strip_prefix("entry")?
        .trim()
        .strip_prefix('(')?
        .strip_suffix(')')?;
    let (i, j) = inner.split_once(',')?;
    let (i, j) = (i.trim().parse().ok()?, j.trim().parse().ok()?);
    (i >= 1 && j >= 1).then_some((i, j))
}

pub fn parse_rule_table(text: &str, group: &Group) -> Result<GeneralCA, SourceError> {
    let mut alphabet: Option<Vec<String>> = None;
    let mut memory: Option<Vec<usize>> = None;
    let mut rows: Vec<(usize, Vec<usize>, usize)> = Vec::new();
    for (line, content) in content_lines(text) {
        if let Some(rest) = content.strip_prefix("alphabet:") {
            let labels: Vec<String> = rest
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(String::from)
                .collect();
            if labels.is_empty() {
                return err(line, "empty alphabet");
            }
            alphabet = Some(labels);
        } else if let Some(rest) = content.strip_prefix("memory:") {
            let mut elems = Vec::new();
            for label in rest.split(',').map(str::trim) {
                match group.index_of(label) {
                    Some(g) if !elems.contains(&g) => elems.push(g),
                    Some(_) => return err(line, format!("memory element {label:?} listed twice")),
                    None => return err(line, format!("unknown element label {label:?}")),
                }
            }
            memory = Some(elems);
        } else {
            let (Some(alphabet), Some(memory)) = (&alphabet, &memory) else {
                return err(
                    line,
                    "`alphabet:` and `memory:` must come before the patterns",
                );
            };
            let Some((pattern, image)) = content.split_once("->") else {
                return err(line, "expected `pattern -> label`");
            };
            let lookup = |label: &str| alphabet.iter().position(|a| a == label);
            let values: Option<Vec<usize>> = pattern.split_whitespace().map(lookup).collect();
            let Some(values) = values else {
                return err(line, "pattern uses a label outside the alphabet");
            };
            if values.len() != memory.len() {
                return err(
                    line,
                    format!(
                        "pattern has {} values, memory has {}",
                        values.len(),
                        memory.len()
                    ),
                );
            }
            let Some(image) = lookup(image.trim()) else {
                return err(
                    line,
                    format!("image {:?} is not in the alphabet", image.trim()),
                );
            };
            rows.push((line, values, image));
        }
    }
    let Some(alphabet) = alphabet else {
        return err(1, "missing `alphabet:` line");
    };
    let Some(memory) = memory else {
        return err(1, "missing `memory:` line");
    };
    let subset = Subset::new(group, memory.iter().copied()).map_err(|e| SourceError {
        line: 1,
        message: e.to_string(),
    })?;
    // Patterns were listed in the file's memory order; the table is indexed
    // in the subset's sorted order.
    let a = alphabet.len();
    let patterns = a.checked_pow(memory.len() as u32).filter(|&n| n <= 1 << 20);
    let Some(patterns) = patterns else {
        return err(1, "rule table too large");
    };
    let mut table: Vec<Option<usize>> = vec![None; patterns];
    for (line, values, image) in rows {
        let index = subset.elements().iter().fold(0, |acc, s| {
            let k = memory.iter().position(|m| m == s).expect("same elements");
            acc * a + values[k]
        });
        if table[index].replace(image).is_some() {
            return err(line, "pattern listed twice");
        }
    }
    let missing = table.iter().filter(|t| t.is_none()).count();
    if missing > 0 {
        return err(1, format!("{missing} of {patterns} patterns have no image"));
    }
    GeneralCA::new(alphabet, subset, table.into_iter().flatten().collect()).map_err(|e| {
        SourceError {
            line: 1,
            message: e.to_string(),
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Property {
    Stable(usize),
    Unit,
    ZeroDivisor,
    Idempotent,
}

impl Property {
    pub fn name(&self) -> String {
        match self {
            Property::Stable(d) => format!("stable:{d}"),
            Property::Unit => "unit".into(),
            Property::ZeroDivisor => "zero-divisor".into(),
            Property::Idempotent => "idempotent".into(),
        }
    }
}

pub fn parse_property(text: &str) -> Result<Property, String> {
    match text.trim() {
        "unit" => Ok(Property::Unit),
        "zero-divisor" => Ok(Property::ZeroDivisor),
        "idempotent" => Ok(Property::Idempotent),
        other => match other
            .strip_prefix("stable:")
            .map(|d| d.trim().parse::<usize>())
        {
            Some(Ok(d)) if d >= 1 => Ok(Property::Stable(d)),
            _ => Err(format!(
                "unknown property {other:?}; expected stable:<d>, unit, zero-divisor or idempotent"
            )),
        },
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    Text,
    Stats,
    /// The field after `smtlib:`, as a prime or a field spec.
    SmtLib(String),
}

pub fn parse_backend(text: &str) -> Result<Backend, String> {
    match text.trim() {
        "text" => Ok(Backend::Text),
        "stats" => Ok(Backend::Stats),
        other => match other.strip_prefix("smtlib:") {
            Some(p) if !p.trim().is_empty() => Ok(Backend::SmtLib(p.trim().to_string())),
            _ => Err(format!(
                "unknown backend {other:?}; expected text, stats or smtlib:<p>"
            )),
        },
    }
}

/// `a-b` (inclusive; empty when `a > b`) or a single number.
pub fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let bad = || format!("expected a range like 2-7, found {text:?}");
    let (a, b) = match text.split_once('-') {
        Some((a, b)) => (a, b),
        None => (text, text),
    };
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    Ok(a..=b)
}
