use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::config::{BoundaryTriple, TfplConfig};
use crate::error::{Error, Result};
use crate::gyration::is_stable;

use super::enumerate::enumerate_tfpl;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct TableEntry {
    /// `t_{u,v}^w`
    pub count: u64,
    /// How many of those are fixed by left gyration.
    pub stable: u64,
}

/// `t_{u,v}^w` for every boundary realized at one size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountTable {
    n: usize,
    entries: BTreeMap<BoundaryTriple, TableEntry>,
}

impl CountTable {
    pub fn from_configs(n: usize, configs: &[TfplConfig]) -> Self {
        let mut entries: BTreeMap<BoundaryTriple, TableEntry> = BTreeMap::new();
        for f in configs {
            let e = entries.entry(f.boundary()).or_default();
            e.count += 1;
            e.stable += is_stable(f) as u64;
        }
        CountTable { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `t_{u,v}^w`, zero for boundaries that do not occur.
    pub fn count(&self, b: &BoundaryTriple) -> u64 {
        self.entries.get(b).map_or(0, |e| e.count)
    }

    pub fn entry(&self, b: &BoundaryTriple) -> Option<TableEntry> {
        self.entries.get(b).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BoundaryTriple, &TableEntry)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.entries.values().map(|e| e.count).sum()
    }

    /// Overwrites one count, e.g. to build a deliberately wrong table.
    pub fn set_count(&mut self, b: &BoundaryTriple, count: u64) {
        self.entries.entry(b.clone()).or_default().count = count;
    }

    /// Sorted text, one boundary per line:
    /// `u|v|w<TAB>count<TAB>excess<TAB>stable`.
    pub fn to_text(&self) -> String {
        let mut out = format!("# n={}\n", self.n);
        for (b, e) in &self.entries {
            writeln!(out, "{}\t{}\t{}\t{}", b.key(), e.count, b.excess(), e.stable).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Malformed("empty count table".into()))?;
        let n = header
            .trim()
            .strip_prefix("# n=")
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::Malformed(format!("bad header {header:?}")))?;
        let mut entries = BTreeMap::new();
        for line in lines {
            let bad = || Error::Malformed(format!("bad record {line:?}"));
            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() != 4 {
                return Err(bad());
            }
            let b: BoundaryTriple = fields[0].parse()?;
            if b.size() != n {
                return Err(Error::LengthMismatch { expected: n, got: b.size() });
            }
            let count = fields[1].parse().map_err(|_| bad())?;
            let excess: i64 = fields[2].parse().map_err(|_| bad())?;
            let stable = fields[3].parse().map_err(|_| bad())?;
            if excess != b.excess() {
                return Err(bad());
            }
            entries.insert(b, TableEntry { count, stable });
        }
        Ok(CountTable { n, entries })
    }
}

/// Enumerates size `n` and groups by boundary.
pub fn count_by_boundary(n: usize, cap: usize) -> Result<CountTable> {
    Ok(CountTable::from_configs(n, &enumerate_tfpl(n, cap)?))
}
