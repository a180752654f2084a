//! Exhaustive TFPL generation by backtracking over vertices in row-major
//! order. At each vertex the edges to the west and north are already fixed;
//! the search chooses the east and south edges. Components are tracked in a
//! union-find with rollback whose roots count the left and right side
//! vertices they contain, so a path joining two vertices of the same side is
//! cut off as soon as its last edge is placed.

use crate::config::{BoundaryTriple, TfplConfig};
use crate::error::{Error, Result};
use crate::lattice::{Edge, TriGrid};
use crate::words::BinaryWord;

struct RollbackUnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    left: Vec<u8>,
    right: Vec<u8>,
    // (attached root, new parent root)
    history: Vec<(u32, u32)>,
}

impl RollbackUnionFind {
    fn new(grid: &TriGrid) -> Self {
        let n = grid.vertex_count();
        let mut left = vec![0; n];
        let mut right = vec![0; n];
        for i in 1..=grid.n() {
            left[grid.vertex_index(grid.left_vertex(i))] = 1;
            right[grid.vertex_index(grid.right_vertex(i))] = 1;
        }
        RollbackUnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            left,
            right,
            history: Vec::new(),
        }
    }

    fn find(&self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            x = self.parent[x as usize];
        }
        x
    }

    /// Joins the components of `a` and `b`; returns false if the result
    /// holds two vertices of one side. A history entry is pushed either way
    /// so that every call is undone by one [`RollbackUnionFind::undo`].
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a as u32), self.find(b as u32));
        if ra == rb {
            self.history.push((u32::MAX, u32::MAX));
            return true;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        let (ra_, rb_) = (ra as usize, rb as usize);
        self.parent[rb_] = ra;
        self.size[ra_] += self.size[rb_];
        self.left[ra_] += self.left[rb_];
        self.right[ra_] += self.right[rb_];
        self.history.push((rb, ra));
        self.left[ra_] <= 1 && self.right[ra_] <= 1
    }

    fn undo(&mut self) {
        let (child, root) = self.history.pop().expect("balanced undo");
        if child == u32::MAX {
            return;
        }
        let (c, r) = (child as usize, root as usize);
        self.parent[c] = child;
        self.size[r] -= self.size[c];
        self.left[r] -= self.left[c];
        self.right[r] -= self.right[c];
    }
}

/// Optional side constraints: fixed degrees for `L_i` and `R_i`.
#[derive(Clone, Default, Debug)]
pub struct SideConstraint {
    pub u: Option<BinaryWord>,
    pub v: Option<BinaryWord>,
}

struct Search<'a> {
    grid: TriGrid,
    order: Vec<(usize, usize)>,
    // allowed degree range per vertex index
    degree_lo: Vec<u8>,
    degree_hi: Vec<u8>,
    uf: RollbackUnionFind,
    cur: TfplConfig,
    visit: &'a mut dyn FnMut(&TfplConfig),
}

impl Search<'_> {
    fn run(&mut self, pos: usize) {
        if pos == self.order.len() {
            (self.visit)(&self.cur);
            return;
        }
        let (r, c) = self.order[pos];
        let g = self.grid;
        let idx = g.vertex_index((r, c));
        let (_, hi_col) = g.row_span(r);
        let mut fixed = 0u8;
        if c > g.row_span(r).0 && self.cur.has(&Edge::east(r, c - 1)) {
            fixed += 1;
        }
        if r > 1 && g.contains((r - 1, c)) && self.cur.has(&Edge::south(r - 1, c)) {
            fixed += 1;
        }
        let east_options: &[bool] = if c < hi_col { &[false, true] } else { &[false] };
        let south_options: &[bool] = if r < g.n() {
            &[false, true]
        } else if c % 2 == 0 {
            &[true]
        } else {
            &[false]
        };
        let (lo, hi) = (self.degree_lo[idx], self.degree_hi[idx]);
        for &east in east_options {
            for &south in south_options {
                let deg = fixed + east as u8 + south as u8;
                if deg < lo || deg > hi {
                    continue;
                }
                self.try_edges(pos, r, c, east, south);
            }
        }
    }

    fn try_edges(&mut self, pos: usize, r: usize, c: usize, east: bool, south: bool) {
        let g = self.grid;
        let idx = g.vertex_index((r, c));
        let mut unions = 0;
        let mut ok = true;
        if east {
            self.cur.set_edge(Edge::east(r, c), true);
            ok &= self.uf.union(idx, g.vertex_index((r, c + 1)));
            unions += 1;
        }
        if south {
            self.cur.set_edge(Edge::south(r, c), true);
            if ok && r < g.n() {
                ok &= self.uf.union(idx, g.vertex_index((r + 1, c)));
                unions += 1;
            }
        }
        if ok {
            self.run(pos + 1);
        }
        for _ in 0..unions {
            self.uf.undo();
        }
        if east {
            self.cur.set_edge(Edge::east(r, c), false);
        }
        if south {
            self.cur.set_edge(Edge::south(r, c), false);
        }
    }
}

/// Calls `visit` on every TFPL of size `n` satisfying `side`, in a
/// deterministic order.
pub fn for_each_tfpl(n: usize, side: &SideConstraint, visit: &mut dyn FnMut(&TfplConfig)) -> Result<()> {
    let grid = TriGrid::new(n)?;
    for word in [&side.u, &side.v].into_iter().flatten() {
        if word.len() != n {
            return Err(Error::LengthMismatch { expected: n, got: word.len() });
        }
    }
    let count = grid.vertex_count();
    let mut degree_lo = vec![2u8; count];
    let mut degree_hi = vec![2u8; count];
    for i in 1..=n {
        let li = grid.vertex_index(grid.left_vertex(i));
        let ri = grid.vertex_index(grid.right_vertex(i));
        let (llo, lhi) = match &side.u {
            Some(u) => (u.get(i - 1) as u8, u.get(i - 1) as u8),
            None => (0, 1),
        };
        let (rlo, rhi) = match &side.v {
            Some(v) => ((!v.get(i - 1)) as u8, (!v.get(i - 1)) as u8),
            None => (0, 1),
        };
        degree_lo[li] = llo;
        degree_hi[li] = lhi;
        degree_lo[ri] = rlo;
        degree_hi[ri] = rhi;
    }
    let mut search = Search {
        grid,
        order: grid.vertices().collect(),
        degree_lo,
        degree_hi,
        uf: RollbackUnionFind::new(&grid),
        cur: TfplConfig::empty(n)?,
        visit,
    };
    search.run(0);
    Ok(())
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded { size: n, cap })
    } else {
        Ok(())
    }
}

/// All TFPLs of size `n`, refusing sizes above `cap`.
pub fn enumerate_tfpl(n: usize, cap: usize) -> Result<Vec<TfplConfig>> {
    check_cap(n, cap)?;
    let mut out = Vec::new();
    for_each_tfpl(n, &SideConstraint::default(), &mut |f| out.push(f.clone()))?;
    Ok(out)
}

/// All TFPLs with boundary `b`. Left and right words prune the search;
/// the bottom word is filtered at the leaves.
pub fn enumerate_with_boundary(b: &BoundaryTriple, cap: usize) -> Result<Vec<TfplConfig>> {
    let n = b.size();
    check_cap(n, cap)?;
    let side = SideConstraint { u: Some(b.u.clone()), v: Some(b.v.clone()) };
    let mut out = Vec::new();
    for_each_tfpl(n, &side, &mut |f| {
        if f.bottom_word() == b.w {
            out.push(f.clone());
        }
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_one() {
        let all = enumerate_tfpl(1, 5).unwrap();
        assert_eq!(all.len(), 2);
        let mut bs: Vec<String> = all.iter().map(|f| f.boundary().key()).collect();
        bs.sort();
        assert_eq!(bs, vec!["0|0|0", "1|1|1"]);
    }

    #[test]
    fn every_result_is_valid_and_distinct() {
        for n in 1..=4 {
            let all = enumerate_tfpl(n, 5).unwrap();
            let mut sorted = all.clone();
            sorted.sort();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
            for f in &all {
                assert_eq!(f.validate(), Ok(()), "{f:?}");
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(enumerate_tfpl(6, 5), Err(Error::CapExceeded { size: 6, cap: 5 })));
    }

    #[test]
    fn boundary_filter_matches_full_enumeration() {
        let all = enumerate_tfpl(4, 5).unwrap();
        let b = all[all.len() / 2].boundary();
        let expect: Vec<_> = all.iter().filter(|f| f.boundary() == b).cloned().collect();
        let mut got = enumerate_with_boundary(&b, 5).unwrap();
        got.sort();
        let mut expect = expect;
        expect.sort();
        assert_eq!(got, expect);
    }
}
