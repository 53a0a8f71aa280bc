//! Aldebaran `.aut` reader and writer.
//!
//! ```text
//! des (initial, transition_count, state_count)
//! (src, "label", dst)
//! ```
//!
//! Labels may be written without quotes when they contain no comma or quote.

use std::collections::BTreeSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::lts::Lts;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Aut {
        line,
        message: message.into(),
    }
}

fn parse_index(field: &str, line: usize, what: &str) -> Result<usize> {
    field
        .trim()
        .parse()
        .map_err(|_| err(line, format!("expected {what}, found `{}`", field.trim())))
}

fn strip_parens(text: &str, line: usize) -> Result<&str> {
    text.strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| err(line, "expected a parenthesised tuple"))
}

fn parse_header(text: &str, line: usize) -> Result<(usize, usize, usize)> {
    let rest = text
        .strip_prefix("des")
        .ok_or_else(|| err(line, "malformed header: expected `des (I, T, N)`"))?;
    let inner = strip_parens(rest.trim(), line)
        .map_err(|_| err(line, "malformed header: expected `des (I, T, N)`"))?;
    let fields: Vec<&str> = inner.split(',').collect();
    if fields.len() != 3 {
        return Err(err(line, "malformed header: expected three fields"));
    }
    Ok((
        parse_index(fields[0], line, "initial state")?,
        parse_index(fields[1], line, "transition count")?,
        parse_index(fields[2], line, "state count")?,
    ))
}

fn parse_transition(text: &str, line: usize) -> Result<(usize, String, usize)> {
    let inner = strip_parens(text, line)?;
    let (src, rest) = inner
        .split_once(',')
        .ok_or_else(|| err(line, "expected `(src, label, dst)`"))?;
    let (label, dst) = rest
        .rsplit_once(',')
        .ok_or_else(|| err(line, "expected `(src, label, dst)`"))?;
    let label = label.trim();
    let label = if let Some(quoted) = label.strip_prefix('"') {
        quoted
            .strip_suffix('"')
            .ok_or_else(|| err(line, "unterminated label"))?
            .to_string()
    } else if label.is_empty() || label.contains('"') {
        return Err(err(line, format!("malformed label `{label}`")));
    } else {
        label.to_string()
    };
    Ok((
        parse_index(src, line, "source state")?,
        label,
        parse_index(dst, line, "target state")?,
    ))
}

pub fn parse_aut(text: &str) -> Result<Lts> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "empty document"))?;
    let (initial, declared, states) = parse_header(header, header_line)?;
    if initial >= states {
        return Err(err(
            header_line,
            format!("state index out of range: initial state {initial} with {states} states"),
        ));
    }

    let mut edges = Vec::new();
    let mut last_line = header_line;
    for (n, l) in lines {
        let (src, label, dst) = parse_transition(l, n)?;
        for s in [src, dst] {
            if s >= states {
                return Err(err(
                    n,
                    format!("state index out of range: {s} with {states} states"),
                ));
            }
        }
        edges.push((src, label, dst));
        last_line = n;
    }
    if edges.len() != declared {
        return Err(err(
            last_line,
            format!(
                "transition count mismatch: header declares {declared}, found {}",
                edges.len()
            ),
        ));
    }

    let alphabet: Vec<String> = edges
        .iter()
        .map(|(_, l, _)| l.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut lts = Lts::new(states, alphabet)?.with_initial(initial)?;
    for (src, label, dst) in &edges {
        lts.add_labelled(*src, label, *dst)?;
    }
    Ok(lts)
}

/// Writes `lts` in Aldebaran syntax. A missing initial state is written as 0.
pub fn write_aut(lts: &Lts) -> String {
    let mut out = format!(
        "des ({}, {}, {})\n",
        lts.initial().unwrap_or(0),
        lts.transition_count(),
        lts.state_count()
    );
    for (s, a, t) in lts.transitions() {
        let _ = writeln!(out, "({s}, \"{}\", {t})", lts.alphabet()[a]);
    }
    out
}
