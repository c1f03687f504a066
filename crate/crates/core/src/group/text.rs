//! Plain-text group files.
//!
//! Cayley table: the first line holds `n`, then `n` lines of `n`
//! space-separated indices. Permutation generators: the first line holds the
//! degree, then one generator per line in disjoint-cycle notation. In both,
//! `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::{parse_cycles, Group, Limits, Permutation};
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

pub fn parse_cayley_table(text: &str) -> Result<Group> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Format("missing order line".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Format(format!("bad order line {header:?}")))?;
    let rows = lines
        .map(|l| {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Format(format!("bad entry {t:?}")))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    if rows.len() != n {
        return Err(Error::Format(format!("expected {n} rows, found {}", rows.len())));
    }
    Group::from_cayley_table(&rows)
}

pub fn parse_permutation_file(text: &str, limits: &Limits) -> Result<Group> {
    let mut lines = content_lines(text);
    let header = lines
        .next()
        .ok_or_else(|| Error::Format("missing degree line".into()))?;
    let degree: usize = header
        .parse()
        .map_err(|_| Error::Format(format!("bad degree line {header:?}")))?;
    let gens = lines.map(|l| parse_cycles(l, degree)).collect::<Result<Vec<_>>>()?;
    Permutation::generate_group(degree, &gens, limits.max_group_order)
}

/// Reads either format; a body line containing `(` selects the permutation one.
pub fn read_group_file(path: &Path, limits: &Limits) -> Result<Group> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    if content_lines(&text).skip(1).any(|l| l.contains('(')) {
        parse_permutation_file(&text, limits)
    } else {
        parse_cayley_table(&text)
    }
}

pub fn write_cayley_table(g: &Group) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        let _ = writeln!(out, "# {name}");
    }
    let _ = writeln!(out, "{}", g.order());
    for a in 0..g.order() {
        let row: Vec<String> = (0..g.order()).map(|b| g.mul(a, b).to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}
