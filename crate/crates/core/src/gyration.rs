//! Wieland gyration on triangular configurations.
//!
//! Left gyration `WL_{u⁻}` gyrates every odd cell, attaches stubs to the
//! left side according to `u⁻`, drops the right side vertices and shifts
//! everything one column right. Right gyration `WR_{v⁻}` is the mirror
//! image: even cells, stubs on the right according to `v⁻`, shift left.

use crate::config::{BoundaryTriple, TfplConfig};
use crate::error::{Error, Result};
use crate::lattice::{Cell, Edge, Parity, Side};
use crate::words::{is_horizontal_strip, is_vertical_strip, BinaryWord};

/// Sides of a cell as a 4-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct Sides(u8);

impl Sides {
    pub const NONE: Sides = Sides(0);
    pub const TOP: Sides = Sides(1 << Side::Top as u8);
    pub const RIGHT: Sides = Sides(1 << Side::Right as u8);
    pub const BOTTOM: Sides = Sides(1 << Side::Bottom as u8);
    pub const LEFT: Sides = Sides(1 << Side::Left as u8);
    pub const ALL: Sides = Sides(0b1111);

    pub fn contains(self, s: Side) -> bool {
        self.0 >> s as u8 & 1 == 1
    }

    pub fn with(self, s: Side) -> Sides {
        Sides(self.0 | 1 << s as u8)
    }

    pub fn count(self) -> u32 {
        self.0.count_ones()
    }

    pub fn bits(self) -> u8 {
        self.0
    }
}

impl std::ops::BitOr for Sides {
    type Output = Sides;
    fn bitor(self, rhs: Sides) -> Sides {
        Sides(self.0 | rhs.0)
    }
}

/// The edges of a configuration around one cell.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CellState {
    /// Sides that exist in the grid (three for external cells).
    pub present: Sides,
    pub occupied: Sides,
}

impl CellState {
    pub fn interior(occupied: Sides) -> Self {
        CellState { present: Sides::ALL, occupied }
    }

    pub fn of(cfg: &TfplConfig, cell: &Cell) -> Self {
        let mut present = Sides::NONE;
        let mut occupied = Sides::NONE;
        for s in Side::ALL {
            if let Some(e) = cell.side(s) {
                present = present.with(s);
                if cfg.has(&e) {
                    occupied = occupied.with(s);
                }
            }
        }
        CellState { present, occupied }
    }
}

/// The local move `W`: a cell holding exactly two opposite edges is left
/// alone, any other cell has its edges and non-edges exchanged.
pub fn gyrate_cell(c: CellState) -> CellState {
    let o = c.occupied;
    if o == Sides::TOP | Sides::BOTTOM || o == Sides::LEFT | Sides::RIGHT {
        c
    } else {
        CellState { present: c.present, occupied: Sides(o.0 ^ c.present.0) }
    }
}

/// Copies the gyrated cells of one parity into `out`, shifted by
/// `shift` columns (`+1` or `-1`).
fn gyrate_cells(f: &TfplConfig, parity: Parity, shift: isize, out: &mut TfplConfig) {
    let grid = f.grid();
    for cell in grid.cells(parity) {
        let after = gyrate_cell(CellState::of(f, &cell));
        for s in Side::ALL {
            if let Some(e) = cell.side(s) {
                if after.occupied.contains(s) {
                    let moved = Edge { col: (e.col as isize + shift) as usize, ..e };
                    out.insert(moved);
                }
            }
        }
    }
}

/// `WL_{u⁻}(f)`. Requires `u⁻ →ʰ u` for the left boundary `u` of `f`.
pub fn wieland_left(f: &TfplConfig, u_minus: &BinaryWord) -> Result<TfplConfig> {
    let u = f.left_word();
    if !is_horizontal_strip(u_minus, &u) {
        return Err(Error::NotHorizontalPredecessor {
            lower: u_minus.to_string(),
            upper: u.to_string(),
        });
    }
    let grid = f.grid();
    let mut out = TfplConfig::empty(grid.n())?;
    // The j-th one of u⁻ at position i gets a stub at the new L_i: a
    // horizontal one if the j-th one of u is also at i, a vertical one down
    // to the old L_{i-1} if it is at i-1.
    for (&i, &p) in u_minus.one_positions().iter().zip(&u.one_positions()) {
        let (r, c) = grid.left_vertex(i + 1);
        if p == i {
            out.insert(Edge::east(r, c));
        } else if p + 1 == i {
            out.insert(Edge::south(r, c));
        } else {
            unreachable!("horizontal strip pairs each one with its position or the one before");
        }
    }
    gyrate_cells(f, Parity::Odd, 1, &mut out);
    Ok(out)
}

/// `WR_{v⁻}(f)`. Requires `v⁻ →ᵛ v` for the right boundary `v` of `f`.
pub fn wieland_right(f: &TfplConfig, v_minus: &BinaryWord) -> Result<TfplConfig> {
    let v = f.right_word();
    if !is_vertical_strip(v_minus, &v) {
        return Err(Error::NotVerticalPredecessor {
            lower: v_minus.to_string(),
            upper: v.to_string(),
        });
    }
    let grid = f.grid();
    let mut out = TfplConfig::empty(grid.n())?;
    // The j-th zero of v⁻ at position i gets a stub at the new R_i: a
    // horizontal one if the j-th zero of v is also at i, a vertical one down
    // to the old R_{i+1} if it is at i+1.
    for (&i, &q) in v_minus.zero_positions().iter().zip(&v.zero_positions()) {
        let (r, c) = grid.right_vertex(i + 1);
        if q == i {
            out.insert(Edge::east(r, c - 1));
        } else if q == i + 1 {
            out.insert(Edge::south(r, c));
        } else {
            unreachable!("vertical strip pairs each zero with its position or the one after");
        }
    }
    gyrate_cells(f, Parity::Even, -1, &mut out);
    Ok(out)
}

/// `WL(f) = WL_u(f)`.
pub fn wl(f: &TfplConfig) -> TfplConfig {
    wieland_left(f, &f.left_word()).expect("u →ʰ u")
}

/// `WR(f) = WR_v(f)`.
pub fn wr(f: &TfplConfig) -> TfplConfig {
    wieland_right(f, &f.right_word()).expect("v →ᵛ v")
}

/// Right boundary of `WL_{u⁻}(f)`, read off `f` alone: `R_i` on a horizontal
/// edge forces `v⁺_i = 0`, on a vertical edge `v⁺_{i+1} = 0`, everything
/// else is 1.
pub fn predict_right_boundary(f: &TfplConfig) -> BinaryWord {
    let grid = f.grid();
    let n = grid.n();
    let mut bits = vec![true; n];
    for i in 1..=n {
        let (r, c) = grid.right_vertex(i);
        if f.has(&Edge::east(r, c - 1)) {
            bits[i - 1] = false;
        }
        if f.has(&Edge::south(r, c)) && i < n {
            bits[i] = false;
        }
    }
    BinaryWord::new(bits).expect("n >= 1")
}

/// Left boundary of `WR_{v⁻}(f)`: `L_i` on a horizontal edge forces
/// `u⁺_i = 1`, on a vertical edge `u⁺_{i-1} = 1`, everything else is 0.
pub fn predict_left_boundary(f: &TfplConfig) -> BinaryWord {
    let grid = f.grid();
    let n = grid.n();
    let mut bits = vec![false; n];
    for i in 1..=n {
        let (r, c) = grid.left_vertex(i);
        if f.has(&Edge::east(r, c)) {
            bits[i - 1] = true;
        }
        if f.has(&Edge::south(r, c)) && i > 1 {
            bits[i - 2] = true;
        }
    }
    BinaryWord::new(bits).expect("n >= 1")
}

/// Whether left gyration changes the right boundary, i.e. some `R_i` lies on
/// a vertical edge.
pub fn boundary_changed(f: &TfplConfig) -> bool {
    let grid = f.grid();
    (1..=grid.n()).any(|i| {
        let (r, c) = grid.right_vertex(i);
        f.has(&Edge::south(r, c))
    })
}

/// Fixed by left gyration.
pub fn is_stable(f: &TfplConfig) -> bool {
    wl(f) == *f
}

/// Result of iterating `WL` until a fixed point.
#[derive(Clone, Debug)]
pub struct StableOrbit {
    pub stable: TfplConfig,
    /// Number of applications of `WL` that changed the configuration.
    pub steps: usize,
    /// Boundaries along the orbit, starting configuration first.
    pub boundaries: Vec<BoundaryTriple>,
}

/// Applies `WL` until the configuration no longer changes. More than `2N-1`
/// effective steps is reported as an error.
pub fn iterate_to_stable(f: &TfplConfig) -> Result<StableOrbit> {
    let bound = 2 * f.n() - 1;
    let mut cur = f.clone();
    let mut boundaries = vec![cur.boundary()];
    for steps in 0..=bound + 1 {
        let next = wl(&cur);
        if next == cur {
            return Ok(StableOrbit { stable: cur, steps, boundaries });
        }
        cur = next;
        boundaries.push(cur.boundary());
    }
    Err(Error::InvalidConfig(format!(
        "no fixed point within {} applications of left gyration for {}",
        bound + 2,
        f.to_json()
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BinaryWord {
        s.parse().unwrap()
    }

    #[test]
    fn local_move_examples() {
        let lr = CellState::interior(Sides::LEFT | Sides::RIGHT);
        assert_eq!(gyrate_cell(lr), lr);
        let tl = CellState::interior(Sides::TOP | Sides::LEFT);
        assert_eq!(gyrate_cell(tl).occupied, Sides::BOTTOM | Sides::RIGHT);
        assert_eq!(gyrate_cell(CellState::interior(Sides::NONE)).occupied, Sides::ALL);
    }

    #[test]
    fn local_move_is_an_involution() {
        for bits in 0..16u8 {
            let c = CellState::interior(Sides(bits));
            assert_eq!(gyrate_cell(gyrate_cell(c)), c);
        }
        // bottom cells hold at most one of their two external edges
        let present = Sides::TOP | Sides::LEFT | Sides::RIGHT;
        for occupied in [Sides::LEFT, Sides::RIGHT, Sides::TOP | Sides::LEFT, Sides::TOP | Sides::RIGHT] {
            let c = CellState { present, occupied };
            assert_eq!(gyrate_cell(gyrate_cell(c)), c);
        }
    }

    #[test]
    fn size_one_configurations_are_fixed() {
        for edges in [
            [Edge::east(1, 1), Edge::south(1, 2)],
            [Edge::east(1, 2), Edge::south(1, 2)],
        ] {
            let f = TfplConfig::from_edges(1, edges).unwrap();
            let u = f.left_word();
            assert_eq!(wieland_left(&f, &u).unwrap(), f);
            assert_eq!(wr(&f), f);
            assert!(is_stable(&f));
            let orbit = iterate_to_stable(&f).unwrap();
            assert_eq!(orbit.steps, 0);
        }
    }

    #[test]
    fn rejects_non_strip_predecessors() {
        let f = TfplConfig::from_edges(1, [Edge::east(1, 2), Edge::south(1, 2)]).unwrap();
        assert!(matches!(
            wieland_left(&f, &w("1")),
            Err(Error::NotHorizontalPredecessor { .. })
        ));
        assert!(matches!(
            wieland_right(&f, &w("1")),
            Err(Error::NotVerticalPredecessor { .. })
        ));
    }

    #[test]
    fn all_ones_prediction_without_right_edges() {
        let f = TfplConfig::from_edges(1, [Edge::east(1, 1), Edge::south(1, 2)]).unwrap();
        assert_eq!(predict_right_boundary(&f), w("1"));
        let g = TfplConfig::from_edges(1, [Edge::east(1, 2), Edge::south(1, 2)]).unwrap();
        assert_eq!(predict_left_boundary(&g), w("0"));
    }
}
