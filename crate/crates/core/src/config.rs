//! Triangular fully packed loop configurations.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{Dir, Edge, Parity, TriGrid, Vertex};
use crate::words::BinaryWord;

/// Fixed-size bitset over dense edge slots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub(crate) struct EdgeBits(Vec<u64>);

impl EdgeBits {
    pub(crate) fn new(slots: usize) -> Self {
        EdgeBits(vec![0; slots.div_ceil(64)])
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub(crate) fn set(&mut self, i: usize, on: bool) {
        if on {
            self.0[i / 64] |= 1 << (i % 64);
        } else {
            self.0[i / 64] &= !(1 << (i % 64));
        }
    }

    pub(crate) fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &word)| {
            (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| 64 * k + b)
        })
    }
}

/// A subgraph of `G^N`. It may be invalid; see [`TfplConfig::validate`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TfplConfig {
    grid: TriGrid,
    bits: EdgeBits,
}

/// The first violated condition of the TFPL definition, with a witness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// (i) external slot occupancy differs from the even-slot pattern.
    ExternalEdges { slot: usize, occupied: bool },
    /// (ii) a side vertex of degree 2 or more.
    SideDegree { vertex: Vertex, degree: usize },
    /// (iii) an inner vertex whose degree is not 2.
    InteriorDegree { vertex: Vertex, degree: usize },
    /// (iv) a path joining two left or two right side vertices.
    SameSidePath { from: Vertex, to: Vertex },
}

impl Violation {
    pub fn item(&self) -> &'static str {
        match self {
            Violation::ExternalEdges { .. } => "i",
            Violation::SideDegree { .. } => "ii",
            Violation::InteriorDegree { .. } => "iii",
            Violation::SameSidePath { .. } => "iv",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ExternalEdges { slot, occupied } => write!(
                f,
                "({}) external slot {slot} is {}",
                self.item(),
                if *occupied { "occupied" } else { "empty" }
            ),
            Violation::SideDegree { vertex, degree } => {
                write!(f, "({}) side vertex {vertex:?} has degree {degree}", self.item())
            }
            Violation::InteriorDegree { vertex, degree } => {
                write!(f, "({}) vertex {vertex:?} has degree {degree}", self.item())
            }
            Violation::SameSidePath { from, to } => {
                write!(f, "({}) a path joins {from:?} and {to:?}", self.item())
            }
        }
    }
}

/// Far end of a path.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PathEnd {
    Vertex(Vertex),
    /// External slot, by 1-based column.
    External(usize),
}

/// The boundary `(u, v; w)` of a TFPL.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BoundaryTriple {
    pub u: BinaryWord,
    pub v: BinaryWord,
    pub w: BinaryWord,
}

impl BoundaryTriple {
    pub fn new(u: BinaryWord, v: BinaryWord, w: BinaryWord) -> Result<Self> {
        for x in [&v, &w] {
            if x.len() != u.len() {
                return Err(Error::LengthMismatch { expected: u.len(), got: x.len() });
            }
        }
        Ok(Self { u, v, w })
    }

    pub fn size(&self) -> usize {
        self.u.len()
    }

    /// `|u|₀ = |v|₀ = |w|₀`.
    pub fn same_zero_count(&self) -> bool {
        self.u.zeros() == self.v.zeros() && self.v.zeros() == self.w.zeros()
    }

    /// `λ(u) ⊆ λ(w)` and `λ(v) ⊆ λ(w)`.
    pub fn contained_in_w(&self) -> bool {
        let w = self.w.to_partition();
        w.contains(&self.u.to_partition()) && w.contains(&self.v.to_partition())
    }

    /// `|λ(w)| - |λ(u)| - |λ(v)|`.
    pub fn excess(&self) -> i64 {
        self.w.inversions() as i64 - self.u.inversions() as i64 - self.v.inversions() as i64
    }

    /// `u|v|w`, the count table key.
    pub fn key(&self) -> String {
        format!("{}|{}|{}", self.u, self.v, self.w)
    }
}

impl fmt::Display for BoundaryTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{};{})", self.u, self.v, self.w)
    }
}

/// Accepts `u,v,w` and `u|v|w`.
impl FromStr for BoundaryTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split([',', '|', ';']).map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Malformed(format!("boundary {s:?} needs three words")));
        }
        BoundaryTriple::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?)
    }
}

/// `excess` as a free function over a boundary.
pub fn excess(b: &BoundaryTriple) -> i64 {
    b.excess()
}

/// A vertical internal edge whose top endpoint is odd.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Drifter {
    pub top: Vertex,
}

impl Drifter {
    pub fn edge(&self) -> Edge {
        Edge::south(self.top.0, self.top.1)
    }

    pub fn column(&self) -> usize {
        self.top.1
    }
}

/// On-disk form shared by triangular and square configurations:
/// `{"n":2,"edges":[[1,2,"E"],[1,3,"S"]]}`. Square-grid documents carry
/// `"grid":"square"` as well.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    grid: Option<String>,
    n: usize,
    edges: Vec<(usize, usize, String)>,
}

pub(crate) const SQUARE: &str = "square";

/// Whether a document describes a square-grid configuration.
pub fn is_square_document(text: &str) -> bool {
    serde_json::from_str::<Document>(text).is_ok_and(|d| d.grid.as_deref() == Some(SQUARE))
}

impl Document {
    pub(crate) fn write(grid: Option<&str>, n: usize, edges: impl Iterator<Item = Edge>) -> String {
        let doc = Document {
            grid: grid.map(str::to_string),
            n,
            edges: edges.map(|e| (e.row, e.col, e.dir.letter().to_string())).collect(),
        };
        serde_json::to_string(&doc).expect("plain data")
    }

    pub(crate) fn read(grid: Option<&str>, text: &str) -> Result<(usize, Vec<Edge>)> {
        let doc: Document =
            serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
        if doc.grid.as_deref() != grid {
            return Err(Error::Malformed(format!(
                "expected grid {:?}, found {:?}",
                grid.unwrap_or("triangular"),
                doc.grid.as_deref().unwrap_or("triangular")
            )));
        }
        let edges = doc
            .edges
            .iter()
            .map(|(r, c, d)| {
                Dir::from_letter(d)
                    .map(|dir| Edge { row: *r, col: *c, dir })
                    .ok_or_else(|| Error::Malformed(format!("unknown direction {d:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((doc.n, edges))
    }
}

impl TfplConfig {
    /// The configuration with no edges at all (not a valid TFPL).
    pub fn empty(n: usize) -> Result<Self> {
        let grid = TriGrid::new(n)?;
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
            cfg.insert(e);
        }
        Ok(cfg)
    }

    pub fn grid(&self) -> TriGrid {
        self.grid
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    pub fn has(&self, e: &Edge) -> bool {
        self.grid.edge_exists(e) && self.bits.get(self.grid.slot(e))
    }

    pub(crate) fn insert(&mut self, e: Edge) {
        debug_assert!(self.grid.edge_exists(&e), "{e}");
        let s = self.grid.slot(&e);
        self.bits.set(s, true);
    }

    pub(crate) fn set_edge(&mut self, e: Edge, on: bool) {
        let s = self.grid.slot(&e);
        self.bits.set(s, on);
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.bits.iter_ones().map(|s| self.grid.edge_at_slot(s))
    }

    pub fn edge_count(&self) -> usize {
        self.bits.count()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.grid.incident_edges(v).filter(|e| self.has(e)).count()
    }

    /// Occupied edges at `v`.
    pub fn edges_at(&self, v: Vertex) -> impl Iterator<Item = Edge> + '_ {
        self.grid.incident_edges(v).filter(move |e| self.has(e))
    }

    /// Follows the path leaving `start` (not through `via`) to its far end.
    /// Requires every vertex on the way to have degree at most 2.
    pub fn trace(&self, start: Vertex, via: Option<Edge>) -> PathEnd {
        let mut cur = start;
        let mut came = via;
        for _ in 0..=self.grid.slot_count() {
            let next = self.edges_at(cur).find(|e| Some(*e) != came);
            let Some(e) = next else {
                return PathEnd::Vertex(cur);
            };
            if self.grid.is_external(&e) {
                return PathEnd::External(e.col);
            }
            let (a, b) = e.endpoints();
            cur = if a == cur { b } else { a };
            came = Some(e);
        }
        unreachable!("path from {start:?} revisits a vertex")
    }

    pub fn validate(&self) -> std::result::Result<(), Violation> {
        let g = self.grid;
        for slot in g.external_slots() {
            if self.has(&slot.edge) != slot.occupied {
                return Err(Violation::ExternalEdges { slot: slot.index, occupied: !slot.occupied });
            }
        }
        for v in g.vertices() {
            let degree = self.degree(v);
            if g.is_side_vertex(v) {
                if degree > 1 {
                    return Err(Violation::SideDegree { vertex: v, degree });
                }
            } else if degree != 2 {
                return Err(Violation::InteriorDegree { vertex: v, degree });
            }
        }
        for i in 1..=g.n() {
            for from in [g.left_vertex(i), g.right_vertex(i)] {
                if self.degree(from) != 1 {
                    continue;
                }
                if let PathEnd::Vertex(to) = self.trace(from, None) {
                    let both_left = g.left_index(to).is_some() && g.left_index(from).is_some();
                    let both_right = g.right_index(to).is_some() && g.right_index(from).is_some();
                    if both_left || both_right {
                        return Err(Violation::SameSidePath { from, to });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// Left boundary word: `u_i = 1` iff `L_i` has degree 1.
    pub fn left_word(&self) -> BinaryWord {
        let g = self.grid;
        let bits = (1..=g.n()).map(|i| self.degree(g.left_vertex(i)) == 1).collect();
        BinaryWord::new(bits).expect("n >= 1")
    }

    /// Right boundary word: `v_i = 1` iff `R_i` has degree 0.
    pub fn right_word(&self) -> BinaryWord {
        let g = self.grid;
        let bits = (1..=g.n()).map(|i| self.degree(g.right_vertex(i)) == 0).collect();
        BinaryWord::new(bits).expect("n >= 1")
    }

    /// Bottom word: `w_j = 1` iff the path through the `j`-th occupied
    /// external edge ends at a left vertex or at an external edge further
    /// left.
    pub fn bottom_word(&self) -> BinaryWord {
        let g = self.grid;
        let n = g.n();
        let bits = (1..=n)
            .map(|j| {
                let col = 2 * j;
                match self.trace((n, col), Some(Edge::south(n, col))) {
                    PathEnd::External(other) => other < col,
                    PathEnd::Vertex(v) => g.left_index(v).is_some(),
                }
            })
            .collect();
        BinaryWord::new(bits).expect("n >= 1")
    }

    /// `(u, v; w)`. Meaningful on valid configurations.
    pub fn boundary(&self) -> BoundaryTriple {
        BoundaryTriple {
            u: self.left_word(),
            v: self.right_word(),
            w: self.bottom_word(),
        }
    }

    pub fn drifters(&self) -> Vec<Drifter> {
        let g = self.grid;
        self.edges()
            .filter(|e| e.is_vertical() && !g.is_external(e))
            .filter(|e| g.vertex_parity((e.row, e.col)) == Ok(Parity::Odd))
            .map(|e| Drifter { top: (e.row, e.col) })
            .collect()
    }

    /// Reflection in the vertical axis. Maps a TFPL with boundary
    /// `(u, v; w)` to one with boundary `(v*, u*; w*)`, `*` being
    /// [`BinaryWord::reverse_complement`], and swaps odd and even cells.
    pub fn mirror(&self) -> TfplConfig {
        let mut out = TfplConfig::empty(self.n()).expect("n >= 1");
        for e in self.edges() {
            out.insert(self.grid.mirror_edge(&e));
        }
        out
    }

    /// Canonical one-line document, edges sorted.
    pub fn to_json(&self) -> String {
        Document::write(None, self.n(), self.edges())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let (n, edges) = Document::read(None, text)?;
        Self::from_edges(n, edges)
    }
}

impl fmt::Debug for TfplConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_json())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn left_hooked() -> TfplConfig {
        TfplConfig::from_edges(1, [Edge::east(1, 1), Edge::south(1, 2)]).unwrap()
    }

    fn right_hooked() -> TfplConfig {
        TfplConfig::from_edges(1, [Edge::east(1, 2), Edge::south(1, 2)]).unwrap()
    }

    fn triple(u: &str, v: &str, w: &str) -> BoundaryTriple {
        BoundaryTriple::new(u.parse().unwrap(), v.parse().unwrap(), w.parse().unwrap()).unwrap()
    }

    #[test]
    fn size_one_configurations() {
        assert_eq!(right_hooked().validate(), Ok(()));
        assert_eq!(left_hooked().validate(), Ok(()));
        assert_eq!(left_hooked().boundary(), triple("1", "1", "1"));
        assert_eq!(right_hooked().boundary(), triple("0", "0", "0"));
        assert!(left_hooked().drifters().is_empty());
        assert!(right_hooked().drifters().is_empty());
    }

    #[test]
    fn missing_edge_reports_interior_degree() {
        let cfg = TfplConfig::from_edges(1, [Edge::south(1, 2)]).unwrap();
        assert_eq!(
            cfg.validate(),
            Err(Violation::InteriorDegree { vertex: (1, 2), degree: 1 })
        );
        assert_eq!(cfg.validate().unwrap_err().item(), "iii");
    }

    #[test]
    fn external_pattern_is_checked_first() {
        let cfg = TfplConfig::from_edges(1, [Edge::east(1, 1), Edge::south(1, 1)]).unwrap();
        assert_eq!(cfg.validate().unwrap_err().item(), "i");
    }

    #[test]
    fn side_degree_two_is_rejected() {
        // L_2 = (1,2) in the size-2 grid with both of its edges
        let cfg = TfplConfig::from_edges(
            2,
            [
                Edge::east(1, 2),
                Edge::south(1, 2),
                Edge::south(2, 2),
                Edge::south(2, 4),
            ],
        )
        .unwrap();
        assert_eq!(cfg.validate().unwrap_err().item(), "ii");
    }

    #[test]
    fn same_side_path_is_rejected() {
        // degrees are all admissible, but L_2 = (2,2) and L_3 = (1,3) are
        // joined through (2,3)
        let cfg = TfplConfig::from_edges(
            3,
            [
                Edge::south(1, 3),
                Edge::east(2, 2),
                Edge::east(1, 4),
                Edge::south(1, 4),
                Edge::east(2, 4),
                Edge::south(2, 5),
                Edge::east(3, 5),
                Edge::east(3, 3),
                Edge::east(3, 2),
                Edge::south(3, 2),
                Edge::south(3, 4),
                Edge::south(3, 6),
            ],
        )
        .unwrap();
        assert_eq!(
            cfg.validate(),
            Err(Violation::SameSidePath { from: (2, 2), to: (1, 3) })
        );
    }

    #[test]
    fn json_round_trip_and_errors() {
        assert_eq!(left_hooked().to_json(), r#"{"n":1,"edges":[[1,1,"E"],[1,2,"S"]]}"#);
        assert_eq!(TfplConfig::from_json(&left_hooked().to_json()).unwrap(), left_hooked());
        assert!(matches!(
            TfplConfig::from_json(r#"{"n":1,"edges":[[1,3,"E"]]}"#),
            Err(Error::EdgeOutsideGrid { .. })
        ));
        assert!(matches!(
            TfplConfig::from_json(r#"{"n":1,"edges":[[1,1,"E"],[1,1,"E"]]}"#),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(matches!(TfplConfig::from_json("{\"n\":1}"), Err(Error::Malformed(_))));
        assert!(matches!(
            TfplConfig::from_json(r#"{"n":1,"edges":[[1,1,"W"]]}"#),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(TfplConfig::from_json(r#"{"n":0,"edges":[]}"#), Err(Error::ZeroSize)));
    }

    #[test]
    fn excess_values() {
        assert_eq!(triple("0101111", "0011111", "1101101").excess(), 5);
        assert_eq!(excess(&triple("1", "1", "1")), 0);
        assert_eq!(excess(&triple("0", "0", "0")), 0);
    }

    #[test]
    fn boundary_parsing() {
        let b: BoundaryTriple = "0101111,0011111,1101101".parse().unwrap();
        assert_eq!(b.key(), "0101111|0011111|1101101");
        assert_eq!(b.key().parse::<BoundaryTriple>().unwrap(), b);
        assert_eq!(b.to_string(), "(0101111,0011111;1101101)");
        assert!("01,01".parse::<BoundaryTriple>().is_err());
        assert!("01,01,0".parse::<BoundaryTriple>().is_err());
    }

    #[test]
    fn mirror_swaps_sides() {
        let m = left_hooked().mirror();
        assert_eq!(m, right_hooked());
        assert_eq!(m.mirror(), left_hooked());
    }
}
