//! Fully packed loops on the `n × n` square grid.
//!
//! Vertices are `(r, c)` with `1 ≤ r, c ≤ n`. External edges stick out of
//! the grid: `S` from row 0 or row `n`, `E` from column 0 or column `n`.
//! They are numbered clockwise from the leftmost top edge, and a valid
//! configuration occupies every other one, either all even-numbered or all
//! odd-numbered slots. Gyration with one parity active swaps the two.

use std::collections::BTreeMap;
use std::fmt;

use crate::config::{Document, EdgeBits, SQUARE};
use crate::error::{Error, Result};
use crate::gyration::{gyrate_cell, CellState, Sides};
use crate::lattice::{Edge, Parity, Side, SqGrid, Vertex};

/// Which alternate set of external edges is occupied.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Phase {
    /// Slots 2, 4, …, 4n; the phase produced by [`enumerate_fpl`].
    Even,
    /// Slots 1, 3, …, 4n-1.
    Odd,
}

impl Phase {
    fn occupies(self, slot: usize) -> bool {
        match self {
            Phase::Even => slot % 2 == 0,
            Phase::Odd => slot % 2 == 1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FplViolation {
    /// External edges do not alternate.
    ExternalEdges,
    Degree { vertex: Vertex, degree: usize },
}

impl FplViolation {
    /// Which defining condition fails: `"1"` for degrees, `"2"` for the
    /// external edges.
    pub fn item(&self) -> &'static str {
        match self {
            FplViolation::Degree { .. } => "1",
            FplViolation::ExternalEdges => "2",
        }
    }
}

impl fmt::Display for FplViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FplViolation::ExternalEdges => {
                write!(f, "(2) occupied external edges are not every other one")
            }
            FplViolation::Degree { vertex: (r, c), degree } => {
                write!(f, "(1) vertex ({r},{c}) has degree {degree}, expected 2")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FplConfig {
    grid: SqGrid,
    bits: EdgeBits,
}

impl FplConfig {
    pub fn empty(n: usize) -> Result<Self> {
        let grid = SqGrid::new(n)?;
        Ok(Self { grid, bits: EdgeBits::new(grid.slot_count()) })
    }

    pub fn from_edges<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        let mut cfg = Self::empty(n)?;
        for e in edges {
            if !cfg.grid.edge_exists(&e) {
                return Err(Error::EdgeOutsideGrid { n, row: e.row, col: e.col, dir: e.dir.letter() });
            }
            if cfg.has(&e) {
                return Err(Error::DuplicateEdge { row: e.row, col: e.col, dir: e.dir.letter() });
            }
            cfg.set(e, true);
        }
        Ok(cfg)
    }

    pub fn grid(&self) -> SqGrid {
        self.grid
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    pub fn has(&self, e: &Edge) -> bool {
        self.grid.edge_exists(e) && self.bits.get(self.grid.slot(e))
    }

    fn set(&mut self, e: Edge, on: bool) {
        let s = self.grid.slot(&e);
        self.bits.set(s, on);
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut v: Vec<Edge> = self.bits.iter_ones().map(|s| self.grid.edge_at_slot(s)).collect();
        v.sort();
        v
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.grid.incident_edges(v).iter().filter(|e| self.has(e)).count()
    }

    /// The phase of the occupied external edges, if they alternate.
    pub fn phase(&self) -> Option<Phase> {
        let slots = self.grid.external_slots();
        [Phase::Even, Phase::Odd]
            .into_iter()
            .find(|p| slots.iter().all(|s| self.has(&s.edge) == p.occupies(s.index)))
    }

    pub fn validate(&self) -> std::result::Result<(), FplViolation> {
        if self.phase().is_none() {
            return Err(FplViolation::ExternalEdges);
        }
        for v in self.grid.vertices() {
            let degree = self.degree(v);
            if degree != 2 {
                return Err(FplViolation::Degree { vertex: v, degree });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Applies the local move to every cell of the active parity. Each edge
    /// lies in exactly one active cell, so the cells do not interfere.
    pub fn gyrate(&self, active: Parity) -> FplConfig {
        let mut out = self.clone();
        for cell in self.grid.cells(active) {
            let mut state = CellState { present: Sides::NONE, occupied: Sides::NONE };
            for s in Side::ALL {
                if let Some(e) = cell.side(s) {
                    state.present = state.present.with(s);
                    if self.has(&e) {
                        state.occupied = state.occupied.with(s);
                    }
                }
            }
            let after = gyrate_cell(state);
            for s in Side::ALL {
                if let Some(e) = cell.side(s) {
                    out.set(e, after.occupied.contains(s));
                }
            }
        }
        out
    }

    /// Matches the occupied external edges joined by a path. Requires every
    /// grid vertex to have degree 2.
    pub fn link_pattern(&self) -> LinkPattern {
        let occupied: Vec<Edge> = self
            .grid
            .external_slots()
            .into_iter()
            .filter(|s| self.has(&s.edge))
            .map(|s| s.edge)
            .collect();
        let position: BTreeMap<Edge, usize> =
            occupied.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        let mut partner = vec![usize::MAX; occupied.len()];
        for (i, start) in occupied.iter().enumerate() {
            if partner[i] != usize::MAX {
                continue;
            }
            let end = self.follow(*start);
            let j = position[&end];
            partner[i] = j;
            partner[j] = i;
        }
        LinkPattern { partner }
    }

    /// Walks in from an external edge until the path leaves the grid again.
    fn follow(&self, start: Edge) -> Edge {
        let inside = |e: &Edge| {
            let (a, b) = e.endpoints();
            if self.grid.contains(a) { a } else { b }
        };
        let mut at = inside(&start);
        let mut came = start;
        loop {
            let next = self
                .grid
                .incident_edges(at)
                .into_iter()
                .find(|e| *e != came && self.has(e))
                .expect("degree 2 at every vertex");
            if self.grid.is_external(&next) {
                return next;
            }
            let (a, b) = next.endpoints();
            at = if a == at { b } else { a };
            came = next;
        }
    }

    pub fn to_json(&self) -> String {
        Document::write(Some(SQUARE), self.n(), self.edges().into_iter())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let (n, edges) = Document::read(Some(SQUARE), text)?;
        Self::from_edges(n, edges)
    }
}

impl fmt::Debug for FplConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

/// `fpl_wieland(F, p)`: gyration of every cell of parity `p`.
pub fn fpl_wieland(f: &FplConfig, active: Parity) -> FplConfig {
    f.gyrate(active)
}

/// A perfect matching of `0..2n`, the positions being the occupied external
/// edges in clockwise order from the first occupied slot.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinkPattern {
    partner: Vec<usize>,
}

impl LinkPattern {
    /// From 1-based pairs. Fails unless they form a perfect matching.
    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        let m = 2 * pairs.len();
        let mut partner = vec![usize::MAX; m];
        for &(a, b) in pairs {
            let bad = || Error::Malformed(format!("not a perfect matching: {pairs:?}"));
            if a == b || !(1..=m).contains(&a) || !(1..=m).contains(&b) {
                return Err(bad());
            }
            if partner[a - 1] != usize::MAX || partner[b - 1] != usize::MAX {
                return Err(bad());
            }
            partner[a - 1] = b - 1;
            partner[b - 1] = a - 1;
        }
        Ok(LinkPattern { partner })
    }

    /// Number of arches.
    pub fn arches(&self) -> usize {
        self.partner.len() / 2
    }

    /// 1-based pairs `(i, j)` with `i < j`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.partner.len())
            .filter(|&i| i < self.partner[i])
            .map(|i| (i + 1, self.partner[i] + 1))
            .collect()
    }

    pub fn is_noncrossing(&self) -> bool {
        let pairs = self.pairs();
        pairs.iter().all(|&(a, b)| {
            pairs.iter().all(|&(c, d)| !(a < c && c < b && b < d))
        })
    }

    /// Moves every endpoint `k` places clockwise (negative: anticlockwise).
    pub fn rotate(&self, k: isize) -> LinkPattern {
        let m = self.partner.len() as isize;
        let mut partner = vec![0; self.partner.len()];
        for (i, &j) in self.partner.iter().enumerate() {
            let to = |x: usize| (x as isize + k).rem_euclid(m) as usize;
            partner[to(i)] = to(j);
        }
        LinkPattern { partner }
    }
}

impl fmt::Display for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b) in self.pairs() {
            write!(f, "({a},{b})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinkPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All FPLs of size `n` occupying the even external slots, sorted.
pub fn enumerate_fpl(n: usize, cap: usize) -> Result<Vec<FplConfig>> {
    if n > cap {
        return Err(Error::CapExceeded { size: n, cap });
    }
    let mut cfg = FplConfig::empty(n)?;
    for s in cfg.grid.external_slots() {
        cfg.set(s.edge, Phase::Even.occupies(s.index));
    }
    let mut out = Vec::new();
    place(&mut cfg, 0, &mut out);
    out.sort();
    Ok(out)
}

// Visits vertices row-major; west and north edges are already decided, the
// east and south edges are chosen here unless they are external.
fn place(cfg: &mut FplConfig, k: usize, out: &mut Vec<FplConfig>) {
    let n = cfg.n();
    if k == n * n {
        out.push(cfg.clone());
        return;
    }
    let (r, c) = (k / n + 1, k % n + 1);
    let have = cfg.has(&Edge::east(r, c - 1)) as usize + cfg.has(&Edge::south(r - 1, c)) as usize;
    let east = Edge::east(r, c);
    let south = Edge::south(r, c);
    let east_choices: &[bool] = if c == n { if cfg.has(&east) { &[true] } else { &[false] } } else { &[false, true] };
    let south_choices: &[bool] = if r == n { if cfg.has(&south) { &[true] } else { &[false] } } else { &[false, true] };
    for &e in east_choices {
        for &s in south_choices {
            if have + e as usize + s as usize != 2 {
                continue;
            }
            if c < n {
                cfg.set(east, e);
            }
            if r < n {
                cfg.set(south, s);
            }
            place(cfg, k + 1, out);
            if c < n {
                cfg.set(east, false);
            }
            if r < n {
                cfg.set(south, false);
            }
        }
    }
}

/// Counts per link pattern together with the rotation checks.
#[derive(Clone, Debug)]
pub struct RotationReport {
    pub n: usize,
    /// `A_π` for every link pattern that occurs.
    pub counts: BTreeMap<LinkPattern, u64>,
    /// Patterns `π` with `A_π ≠ A_{rot(π)}` for a rotation by one step in
    /// either direction.
    pub failures: Vec<LinkPattern>,
    /// Shift `k` with `link_pattern(gyrate(F)) = rotate(link_pattern(F), k)`
    /// for every `F`, odd cells active, if one exists.
    pub gyration_shift: Option<isize>,
}

impl RotationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.gyration_shift.is_some()
    }
}

/// Computes `A_π` for all `π` of size `n` and checks invariance under
/// rotation, both as counts and configuration by configuration under
/// gyration.
pub fn verify_rotation_invariance(n: usize, cap: usize) -> Result<RotationReport> {
    let all = enumerate_fpl(n, cap)?;
    let mut counts: BTreeMap<LinkPattern, u64> = BTreeMap::new();
    for f in &all {
        *counts.entry(f.link_pattern()).or_default() += 1;
    }
    let count = |p: &LinkPattern| counts.get(p).copied().unwrap_or(0);
    let failures = counts
        .iter()
        .filter(|(p, &a)| count(&p.rotate(1)) != a || count(&p.rotate(-1)) != a)
        .map(|(p, _)| p.clone())
        .collect();
    let m = 2 * n as isize;
    let gyration_shift = (0..m).map(|k| if k > n as isize { k - m } else { k }).find(|&k| {
        all.iter()
            .all(|f| f.gyrate(Parity::Odd).link_pattern() == f.link_pattern().rotate(k))
    });
    Ok(RotationReport { n, counts, failures, gyration_shift })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unique_one() -> FplConfig {
        FplConfig::from_edges(1, [Edge::east(1, 0), Edge::east(1, 1)]).unwrap()
    }

    #[test]
    fn size_one() {
        let f = unique_one();
        assert_eq!(f.validate(), Ok(()));
        assert_eq!(f.phase(), Some(Phase::Even));
        assert_eq!(f.link_pattern().pairs(), vec![(1, 2)]);
        assert_eq!(enumerate_fpl(1, 5).unwrap(), vec![f.clone()]);
        for p in [Parity::Odd, Parity::Even] {
            let g = fpl_wieland(&f, p);
            assert_eq!(g.validate(), Ok(()));
            assert_eq!(fpl_wieland(&g, p), f);
        }
    }

    #[test]
    fn three_external_edges_break_alternation() {
        let f = FplConfig::from_edges(1, [Edge::east(1, 0), Edge::east(1, 1), Edge::south(0, 1)])
            .unwrap();
        assert_eq!(f.validate().unwrap_err().item(), "2");
        let g = FplConfig::from_edges(1, [Edge::east(1, 0)]).unwrap();
        assert_eq!(g.validate().unwrap_err().item(), "2");
    }

    #[test]
    fn out_of_grid_edges_are_rejected() {
        assert!(matches!(
            FplConfig::from_edges(2, [Edge::east(3, 0)]),
            Err(Error::EdgeOutsideGrid { .. })
        ));
        assert!(matches!(
            FplConfig::from_edges(2, [Edge::south(0, 0)]),
            Err(Error::EdgeOutsideGrid { .. })
        ));
    }

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4).map(|n| enumerate_fpl(n, 5).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 42]);
        assert!(matches!(enumerate_fpl(6, 5), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn size_two_patterns_each_occur_once() {
        let report = verify_rotation_invariance(2, 5).unwrap();
        assert_eq!(report.counts.values().copied().collect::<Vec<_>>(), vec![1, 1]);
        assert!(report.passed());
    }

    #[test]
    fn link_pattern_rotation() {
        let p = LinkPattern::from_pairs(&[(1, 2), (3, 4)]).unwrap();
        assert_eq!(p.rotate(1).pairs(), vec![(1, 4), (2, 3)]);
        assert_eq!(p.rotate(1).rotate(-1), p);
        assert!(p.is_noncrossing());
        assert!(!LinkPattern::from_pairs(&[(1, 3), (2, 4)]).unwrap().is_noncrossing());
        assert!(LinkPattern::from_pairs(&[(1, 1)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let f = &enumerate_fpl(3, 5).unwrap()[3];
        let text = f.to_json();
        assert!(text.starts_with(r#"{"grid":"square","n":3,"#));
        assert_eq!(&FplConfig::from_json(&text).unwrap(), f);
        assert!(FplConfig::from_json(r#"{"n":1,"edges":[]}"#).is_err());
        assert!(crate::TfplConfig::from_json(&text).is_err());
    }
}
