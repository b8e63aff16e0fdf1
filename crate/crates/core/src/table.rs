//! Reference list of known zero-characteristic circulants, bundled from
//! `data/zero_chi_reference.txt`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::ConnectionSet;

const REFERENCE: &str = include_str!("../data/zero_chi_reference.txt");

/// Parses `"<n>: <set>"` lines; `#` starts a comment.
pub fn parse_table(text: &str) -> Result<BTreeMap<usize, Vec<ConnectionSet>>> {
    let mut table: BTreeMap<usize, Vec<ConnectionSet>> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (n, set) = line.split_once(':').ok_or_else(|| {
            Error::Parameter(format!("table line {}: expected \"n: set\"", lineno + 1))
        })?;
        let n: usize = n
            .trim()
            .parse()
            .map_err(|_| Error::Parameter(format!("table line {}: bad n {n:?}", lineno + 1)))?;
        table.entry(n).or_default().push(set.parse()?);
    }
    Ok(table)
}

/// Bundled entries for `n` (empty when `n` is not listed).
pub fn reference_entries(n: usize) -> Vec<ConnectionSet> {
    parse_table(REFERENCE)
        .expect("bundled table parses")
        .remove(&n)
        .unwrap_or_default()
}
