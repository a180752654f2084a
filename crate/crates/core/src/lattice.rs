//! Grid geometry for the triangular grid `G^N` and the square grid `G_n`.
//!
//! Triangular grid coordinates: rows `1..=N` top-down, columns `1..=2N+1`,
//! row `r` spans columns `N+1-r ..= N+1+r`. The left boundary vertices are
//! numbered left to right, so `L_i = (N+1-i, i)` and `R_i = (i, N+1+i)`.
//!
//! Square grid coordinates are extended by one on every side: vertices are
//! `(r, c)` with `1 ≤ r, c ≤ n`, and external edges reach the virtual
//! coordinates `0` and `n+1`.

use std::fmt;

use crate::error::{Error, Result};

/// Direction of an edge from its top-left endpoint.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Dir {
    /// `(r, c) — (r, c+1)`
    East,
    /// `(r, c) — (r+1, c)`
    South,
}

impl Dir {
    pub fn letter(self) -> char {
        match self {
            Dir::East => 'E',
            Dir::South => 'S',
        }
    }

    pub fn from_letter(s: &str) -> Option<Dir> {
        match s {
            "E" => Some(Dir::East),
            "S" => Some(Dir::South),
            _ => None,
        }
    }
}

/// A unit edge named by its top-left endpoint and direction. Ordering is
/// lexicographic on `(row, col, dir)` with `East < South`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Edge {
    pub row: usize,
    pub col: usize,
    pub dir: Dir,
}

impl Edge {
    pub const fn east(row: usize, col: usize) -> Self {
        Edge { row, col, dir: Dir::East }
    }

    pub const fn south(row: usize, col: usize) -> Self {
        Edge { row, col, dir: Dir::South }
    }

    pub fn is_vertical(&self) -> bool {
        self.dir == Dir::South
    }

    pub fn is_horizontal(&self) -> bool {
        self.dir == Dir::East
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        let a = (self.row, self.col);
        let b = match self.dir {
            Dir::East => (self.row, self.col + 1),
            Dir::South => (self.row + 1, self.col),
        };
        (a, b)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.row, self.col, self.dir.letter())
    }
}

/// `(row, col)`.
pub type Vertex = (usize, usize);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Parity {
    Odd,
    Even,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

/// Sides of a cell, clockwise from the top.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Side {
    Top = 0,
    Right = 1,
    Bottom = 2,
    Left = 3,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::Top, Side::Right, Side::Bottom, Side::Left];
}

/// A unit square of a grid, identified by its top-left corner, with the
/// edges that surround it (missing sides are `None`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Cell {
    pub top_left: Vertex,
    pub parity: Parity,
    pub sides: [Option<Edge>; 4],
}

impl Cell {
    pub fn side(&self, s: Side) -> Option<Edge> {
        self.sides[s as usize]
    }

    pub fn side_count(&self) -> usize {
        self.sides.iter().flatten().count()
    }
}

/// An external edge position with its 1-based index and whether valid
/// configurations occupy it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ExternalSlot {
    pub index: usize,
    pub edge: Edge,
    pub occupied: bool,
}

/// The triangular grid `G^N`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TriGrid {
    n: usize,
}

impl TriGrid {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Inclusive column range of row `r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.n + 1 - r, self.n + 1 + r)
    }

    pub fn columns(&self) -> usize {
        2 * self.n + 1
    }

    pub fn contains(&self, (r, c): Vertex) -> bool {
        if r == 0 || r > self.n {
            return false;
        }
        let (lo, hi) = self.row_span(r);
        lo <= c && c <= hi
    }

    pub fn vertex_count(&self) -> usize {
        self.n * (self.n + 2)
    }

    /// Row-major index of a grid vertex.
    pub fn vertex_index(&self, (r, c): Vertex) -> usize {
        debug_assert!(self.contains((r, c)));
        r * r - 1 + c - (self.n + 1 - r)
    }

    pub fn vertex_at(&self, idx: usize) -> Vertex {
        let mut r = 1;
        while (r + 1) * (r + 1) - 1 <= idx {
            r += 1;
        }
        (r, idx + self.n + 2 - r - r * r)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.n).flat_map(move |r| {
            let (lo, hi) = self.row_span(r);
            (lo..=hi).map(move |c| (r, c))
        })
    }

    /// `L_i`, `1 ≤ i ≤ N`, numbered left to right.
    pub fn left_vertex(&self, i: usize) -> Vertex {
        (self.n + 1 - i, i)
    }

    /// `R_i`, `1 ≤ i ≤ N`, numbered left to right.
    pub fn right_vertex(&self, i: usize) -> Vertex {
        (i, self.n + 1 + i)
    }

    /// `Some(i)` if `v = L_i`.
    pub fn left_index(&self, (r, c): Vertex) -> Option<usize> {
        (r >= 1 && r <= self.n && c == self.n + 1 - r).then_some(c)
    }

    /// `Some(i)` if `v = R_i`.
    pub fn right_index(&self, (r, c): Vertex) -> Option<usize> {
        (r >= 1 && r <= self.n && c == self.n + 1 + r).then_some(r)
    }

    pub fn is_side_vertex(&self, v: Vertex) -> bool {
        self.left_index(v).is_some() || self.right_index(v).is_some()
    }

    /// Chessboard parity with every `L_i` odd.
    pub fn vertex_parity(&self, v: Vertex) -> Result<Parity> {
        if !self.contains(v) {
            return Err(Error::InvalidConfig(format!(
                "vertex {v:?} outside the grid of size {}",
                self.n
            )));
        }
        Ok(self.parity_of(v.0 + v.1))
    }

    fn parity_of(&self, sum: usize) -> Parity {
        if (sum + self.n + 1) % 2 == 0 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }

    pub fn is_external(&self, e: &Edge) -> bool {
        e.dir == Dir::South && e.row == self.n
    }

    pub fn edge_exists(&self, e: &Edge) -> bool {
        if !self.contains((e.row, e.col)) {
            return false;
        }
        match e.dir {
            Dir::East => self.contains((e.row, e.col + 1)),
            Dir::South => true,
        }
    }

    /// Number of dense edge slots; see [`TriGrid::slot`].
    pub fn slot_count(&self) -> usize {
        2 * self.vertex_count()
    }

    /// Dense index of an edge, `2 * vertex_index + dir`.
    pub fn slot(&self, e: &Edge) -> usize {
        2 * self.vertex_index((e.row, e.col)) + (e.dir == Dir::South) as usize
    }

    pub fn edge_at_slot(&self, slot: usize) -> Edge {
        let (row, col) = self.vertex_at(slot / 2);
        let dir = if slot % 2 == 0 { Dir::East } else { Dir::South };
        Edge { row, col, dir }
    }

    /// All edges of the grid, internal and external, in sorted order.
    pub fn edges(&self) -> Vec<Edge> {
        (0..self.slot_count())
            .map(|s| self.edge_at_slot(s))
            .filter(|e| self.edge_exists(e))
            .collect()
    }

    /// Internal edges only.
    pub fn internal_edges(&self) -> Vec<Edge> {
        self.edges()
            .into_iter()
            .filter(|e| !self.is_external(e))
            .collect()
    }

    /// The `2N+1` bottom slots left to right; the even ones are occupied.
    pub fn external_slots(&self) -> Vec<ExternalSlot> {
        (1..=self.columns())
            .map(|c| ExternalSlot {
                index: c,
                edge: Edge::south(self.n, c),
                occupied: c % 2 == 0,
            })
            .collect()
    }

    /// Edges incident to `v` (external edge included for bottom vertices).
    pub fn incident_edges(&self, (r, c): Vertex) -> impl Iterator<Item = Edge> + '_ {
        let candidates = [
            Some(Edge::east(r, c)),
            Some(Edge::south(r, c)),
            c.checked_sub(1).map(|c0| Edge::east(r, c0)),
            r.checked_sub(1).map(|r0| Edge::south(r0, c)),
        ];
        candidates
            .into_iter()
            .flatten()
            .filter(move |e| self.edge_exists(e))
    }

    /// The cell with top-left corner `(r, c)` if it is a cell of the grid.
    pub fn cell_at(&self, (r, c): Vertex) -> Option<Cell> {
        if r == 0 || r > self.n {
            return None;
        }
        let (lo, hi) = if r < self.n {
            (self.n + 1 - r, self.n + r)
        } else {
            (1, 2 * self.n)
        };
        if c < lo || c > hi {
            return None;
        }
        let bottom = (r < self.n).then(|| Edge::east(r + 1, c));
        Some(Cell {
            top_left: (r, c),
            parity: self.parity_of(r + c),
            sides: [
                Some(Edge::east(r, c)),
                Some(Edge::south(r, c + 1)),
                bottom,
                Some(Edge::south(r, c)),
            ],
        })
    }

    /// All `N(N+1)` cells, row-major. The bottom row consists of the
    /// three-sided cells between consecutive external edges.
    pub fn all_cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.n * (self.n + 1));
        for r in 1..=self.n {
            for c in 1..=self.columns() {
                if let Some(cell) = self.cell_at((r, c)) {
                    out.push(cell);
                }
            }
        }
        out
    }

    pub fn cells(&self, parity: Parity) -> Vec<Cell> {
        self.all_cells()
            .into_iter()
            .filter(|c| c.parity == parity)
            .collect()
    }

    /// Reflection across the vertical axis, `c ↦ 2N+2-c`.
    pub fn mirror_edge(&self, e: &Edge) -> Edge {
        let m = 2 * self.n + 2;
        match e.dir {
            Dir::East => Edge::east(e.row, m - e.col - 1),
            Dir::South => Edge::south(e.row, m - e.col),
        }
    }
}

/// The square grid `G_n` with its `4n` external edges.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SqGrid {
    n: usize,
}

impl SqGrid {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, (r, c): Vertex) -> bool {
        (1..=self.n).contains(&r) && (1..=self.n).contains(&c)
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (1..=self.n).flat_map(move |r| (1..=self.n).map(move |c| (r, c)))
    }

    pub fn edge_exists(&self, e: &Edge) -> bool {
        let n = self.n;
        match e.dir {
            Dir::East => (1..=n).contains(&e.row) && e.col <= n,
            Dir::South => (1..=n).contains(&e.col) && e.row <= n,
        }
    }

    pub fn is_external(&self, e: &Edge) -> bool {
        match e.dir {
            Dir::East => e.col == 0 || e.col == self.n,
            Dir::South => e.row == 0 || e.row == self.n,
        }
    }

    pub fn slot_count(&self) -> usize {
        2 * self.n * (self.n + 1)
    }

    pub fn slot(&self, e: &Edge) -> usize {
        let n = self.n;
        match e.dir {
            Dir::East => (e.row - 1) * (n + 1) + e.col,
            Dir::South => n * (n + 1) + e.row * n + (e.col - 1),
        }
    }

    pub fn edge_at_slot(&self, slot: usize) -> Edge {
        let n = self.n;
        if slot < n * (n + 1) {
            Edge::east(slot / (n + 1) + 1, slot % (n + 1))
        } else {
            let s = slot - n * (n + 1);
            Edge::south(s / n, s % n + 1)
        }
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut v: Vec<Edge> = (0..self.slot_count()).map(|s| self.edge_at_slot(s)).collect();
        v.sort();
        v
    }

    /// Incident edges of a grid vertex; always four.
    pub fn incident_edges(&self, (r, c): Vertex) -> [Edge; 4] {
        [
            Edge::east(r, c),
            Edge::south(r, c),
            Edge::east(r, c - 1),
            Edge::south(r - 1, c),
        ]
    }

    /// The `4n` external slots clockwise from the leftmost top edge; the
    /// even-indexed ones are the occupied phase used by enumeration.
    pub fn external_slots(&self) -> Vec<ExternalSlot> {
        let n = self.n;
        let mut edges = Vec::with_capacity(4 * n);
        edges.extend((1..=n).map(|c| Edge::south(0, c)));
        edges.extend((1..=n).map(|r| Edge::east(r, n)));
        edges.extend((1..=n).rev().map(|c| Edge::south(n, c)));
        edges.extend((1..=n).rev().map(|r| Edge::east(r, 0)));
        edges
            .into_iter()
            .enumerate()
            .map(|(i, edge)| ExternalSlot {
                index: i + 1,
                edge,
                occupied: (i + 1) % 2 == 0,
            })
            .collect()
    }

    /// Cell with top-left corner `(r, c)`, `0 ≤ r, c ≤ n`; cells on the
    /// main diagonal are odd.
    pub fn cell_at(&self, (r, c): Vertex) -> Option<Cell> {
        let n = self.n;
        if r > n || c > n {
            return None;
        }
        let parity = if (r + c) % 2 == 0 { Parity::Odd } else { Parity::Even };
        Some(Cell {
            top_left: (r, c),
            parity,
            sides: [
                (r >= 1).then(|| Edge::east(r, c)),
                (c < n).then(|| Edge::south(r, c + 1)),
                (r < n).then(|| Edge::east(r + 1, c)),
                (c >= 1).then(|| Edge::south(r, c)),
            ],
        })
    }

    /// All `(n+1)²` cells, row-major.
    pub fn all_cells(&self) -> Vec<Cell> {
        (0..=self.n)
            .flat_map(|r| (0..=self.n).map(move |c| (r, c)))
            .filter_map(|v| self.cell_at(v))
            .collect()
    }

    pub fn cells(&self, parity: Parity) -> Vec<Cell> {
        self.all_cells()
            .into_iter()
            .filter(|c| c.parity == parity)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashMap;

    #[test]
    fn triangular_cell_counts() {
        for (n, total) in [(1, 2), (7, 56)] {
            let g = TriGrid::new(n).unwrap();
            let odd = g.cells(Parity::Odd).len();
            let even = g.cells(Parity::Even).len();
            assert_eq!(odd + even, total);
        }
        let g = TriGrid::new(1).unwrap();
        assert_eq!(g.cells(Parity::Odd).len(), 1);
        assert_eq!(g.cells(Parity::Even).len(), 1);
    }

    #[test]
    fn top_left_cell_is_odd() {
        for n in 1..8 {
            let g = TriGrid::new(n).unwrap();
            assert_eq!(g.all_cells()[0].parity, Parity::Odd);
        }
    }

    #[test]
    fn square_cell_counts() {
        let g = SqGrid::new(8).unwrap();
        assert_eq!(g.all_cells().len(), 81);
        assert!(g.all_cells().iter().all(|c| c.top_left.0 != c.top_left.1 || c.parity == Parity::Odd));
        let sides: Vec<usize> = g.all_cells().iter().map(Cell::side_count).collect();
        assert_eq!(sides.iter().filter(|&&s| s == 2).count(), 4);
        assert_eq!(sides.iter().filter(|&&s| s == 3).count(), 28);
        assert_eq!(sides.iter().filter(|&&s| s == 4).count(), 49);
    }

    #[test]
    fn rows_and_sides() {
        let g = TriGrid::new(7).unwrap();
        for r in 1..=7 {
            assert_eq!(g.vertices().filter(|v| v.0 == r).count(), 2 * r + 1);
        }
        assert_eq!(g.vertex_count(), g.vertices().count());
        for i in 1..=7 {
            assert_eq!(g.left_index(g.left_vertex(i)), Some(i));
            assert_eq!(g.right_index(g.right_vertex(i)), Some(i));
            assert_eq!(g.vertex_parity(g.left_vertex(i)).unwrap(), Parity::Odd);
            assert_eq!(g.vertex_parity(g.right_vertex(i)).unwrap(), Parity::Odd);
        }
        assert_eq!(g.left_vertex(1), (7, 1));
        assert_eq!(g.left_vertex(7), (1, 7));
    }

    #[test]
    fn vertex_parity_examples() {
        let g = TriGrid::new(7).unwrap();
        assert_eq!(g.vertex_parity((3, 5)).unwrap(), Parity::Odd);
        assert_eq!(g.vertex_parity((3, 6)).unwrap(), Parity::Even);
        assert_eq!(g.vertex_parity((3, 11)).unwrap(), Parity::Odd);
        assert!(g.vertex_parity((3, 4)).is_err());
        assert!(g.vertex_parity((8, 1)).is_err());
    }

    #[test]
    fn vertex_index_round_trip() {
        for n in 1..7 {
            let g = TriGrid::new(n).unwrap();
            for (i, v) in g.vertices().enumerate() {
                assert_eq!(g.vertex_index(v), i);
                assert_eq!(g.vertex_at(i), v);
            }
            for s in 0..g.slot_count() {
                assert_eq!(g.slot(&g.edge_at_slot(s)), s);
            }
        }
        let sq = SqGrid::new(4).unwrap();
        for s in 0..sq.slot_count() {
            let e = sq.edge_at_slot(s);
            assert!(sq.edge_exists(&e));
            assert_eq!(sq.slot(&e), s);
        }
    }

    #[test]
    fn external_slot_patterns() {
        let g1 = TriGrid::new(1).unwrap();
        let occ: Vec<usize> = g1.external_slots().iter().filter(|s| s.occupied).map(|s| s.index).collect();
        assert_eq!(g1.external_slots().len(), 3);
        assert_eq!(occ, vec![2]);
        let g7 = TriGrid::new(7).unwrap();
        let occ: Vec<usize> = g7.external_slots().iter().filter(|s| s.occupied).map(|s| s.index).collect();
        assert_eq!(g7.external_slots().len(), 15);
        assert_eq!(occ, vec![2, 4, 6, 8, 10, 12, 14]);
        let s1 = SqGrid::new(1).unwrap();
        assert_eq!(s1.external_slots().len(), 4);
        assert_eq!(s1.external_slots().iter().filter(|s| s.occupied).count(), 2);
    }

    // Staircase edges along the two slanted sides, the top edges of row 1 and
    // the two outermost external edges border a single cell; every other edge
    // borders one odd and one even cell.
    #[test]
    fn triangular_edges_split_between_parities() {
        for n in 1..7 {
            let g = TriGrid::new(n).unwrap();
            let mut owners: HashMap<Edge, Vec<Parity>> = HashMap::new();
            for cell in g.all_cells() {
                assert_eq!(cell.side_count(), if cell.top_left.0 == n { 3 } else { 4 });
                for e in cell.sides.iter().flatten() {
                    assert!(g.edge_exists(e), "{e} is not an edge");
                    owners.entry(*e).or_default().push(cell.parity);
                }
            }
            for e in g.edges() {
                let o = &owners[&e];
                assert!(o.len() == 1 || (o.len() == 2 && o[0] != o[1]), "{e}: {o:?}");
                if g.is_external(&e) {
                    let outer = e.col == 1 || e.col == g.columns();
                    assert_eq!(o.len(), if outer { 1 } else { 2 });
                }
            }
        }
    }

    #[test]
    fn square_edges_split_between_parities() {
        let g = SqGrid::new(4).unwrap();
        let mut owners: HashMap<Edge, Vec<Parity>> = HashMap::new();
        for cell in g.all_cells() {
            for e in cell.sides.iter().flatten() {
                owners.entry(*e).or_default().push(cell.parity);
            }
        }
        for e in g.edges() {
            let o = &owners[&e];
            assert_eq!(o.len(), 2, "{e}");
            assert_ne!(o[0], o[1]);
        }
    }

    #[test]
    fn grid_is_bipartite() {
        let g = TriGrid::new(5).unwrap();
        for e in g.internal_edges() {
            let (a, b) = e.endpoints();
            assert_ne!(g.vertex_parity(a).unwrap(), g.vertex_parity(b).unwrap());
        }
    }

    #[test]
    fn mirror_is_an_involution_on_edges() {
        let g = TriGrid::new(4).unwrap();
        for e in g.edges() {
            let m = g.mirror_edge(&e);
            assert!(g.edge_exists(&m));
            assert_eq!(g.mirror_edge(&m), e);
        }
    }
}
