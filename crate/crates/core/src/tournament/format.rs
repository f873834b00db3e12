//! The line-oriented text format `<n>:<bitstring>`.

use super::{pair_count, Tournament};
use crate::error::{Error, Result};

/// Parses one `<n>:<bitstring>` line. Errors are reported as line 1.
pub fn parse_line(line: &str) -> Result<Tournament> {
    parse_numbered(line.trim(), 1)
}

fn parse_numbered(line: &str, lineno: usize) -> Result<Tournament> {
    let err = |message: String| Error::Parse { line: lineno, message };
    let (count, bits) = line
        .split_once(':')
        .ok_or_else(|| err(format!("expected `<n>:<bits>`, got `{line}`")))?;
    let n: usize = count
        .trim()
        .parse()
        .map_err(|_| err(format!("bad vertex count `{count}`")))?;
    let bits = bits.trim();
    if bits.len() != pair_count(n) {
        return Err(err(format!(
            "{n} vertices need {} bits, got {}",
            pair_count(n),
            bits.len()
        )));
    }
    let arcs = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            other => Err(err(format!("unexpected character `{other}`"))),
        })
        .collect::<Result<Vec<_>>>()?;
    Tournament::build(n, &arcs).map_err(|e| match e {
        Error::Input(message) => err(message),
        other => other,
    })
}

/// Parses a catalog: one tournament per line, blank lines and `#` comments skipped.
pub fn parse_catalog(text: &str) -> Result<Vec<Tournament>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| parse_numbered(l, i))
        .collect()
}
