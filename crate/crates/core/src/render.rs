//! Text and SVG drawings of triangular and square configurations.
//!
//! In ASCII output horizontal edges are `---`, vertical edges `|`, and
//! drifters `!`. With the parity option, odd vertices are drawn as `o`, even
//! ones as `□`, and every cell is labelled with the same glyph in its
//! center.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::config::TfplConfig;
use crate::fpl::FplConfig;
use crate::lattice::{Cell, Edge, Parity, Vertex};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RenderOptions {
    /// Distinguish odd and even vertices and cells.
    pub parity: bool,
}

/// Everything a renderer needs, independent of the grid shape.
struct Scene {
    vertices: Vec<(Vertex, Parity)>,
    edges: Vec<Edge>,
    drifters: BTreeSet<Edge>,
    cells: Vec<Cell>,
}

impl Scene {
    fn of_tfpl(f: &TfplConfig) -> Scene {
        let g = f.grid();
        Scene {
            vertices: g.vertices().map(|v| (v, g.vertex_parity(v).expect("grid vertex"))).collect(),
            edges: f.edges().collect(),
            drifters: f.drifters().iter().map(|d| d.edge()).collect(),
            cells: g.all_cells(),
        }
    }

    fn of_fpl(f: &FplConfig) -> Scene {
        let g = f.grid();
        let parity = |(r, c): Vertex| if (r + c) % 2 == 0 { Parity::Odd } else { Parity::Even };
        Scene {
            vertices: g.vertices().map(|v| (v, parity(v))).collect(),
            edges: f.edges(),
            drifters: BTreeSet::new(),
            cells: g.all_cells(),
        }
    }

    // Rows and columns touched by any vertex or edge end, so that
    // external edges fit.
    fn extent(&self) -> (usize, usize) {
        let rows = self.edges.iter().map(|e| e.endpoints().1 .0).chain(self.vertices.iter().map(|v| v.0 .0));
        let cols = self.edges.iter().map(|e| e.endpoints().1 .1).chain(self.vertices.iter().map(|v| v.0 .1));
        (rows.max().unwrap_or(0) + 1, cols.max().unwrap_or(0) + 1)
    }
}

fn glyph(p: Parity) -> char {
    match p {
        Parity::Odd => 'o',
        Parity::Even => '□',
    }
}

fn ascii(scene: &Scene, opts: RenderOptions) -> String {
    let (rows, cols) = scene.extent();
    let mut canvas = vec![vec![' '; 4 * cols + 1]; 2 * rows + 1];
    if opts.parity {
        for cell in &scene.cells {
            let (r, c) = cell.top_left;
            canvas[2 * r + 1][4 * c + 2] = glyph(cell.parity);
        }
    }
    for e in &scene.edges {
        let (r, c) = (e.row, e.col);
        if e.is_horizontal() {
            for k in 1..=3 {
                canvas[2 * r][4 * c + k] = '-';
            }
        } else {
            canvas[2 * r + 1][4 * c] = if scene.drifters.contains(e) { '!' } else { '|' };
        }
    }
    for &((r, c), p) in &scene.vertices {
        canvas[2 * r][4 * c] = if opts.parity { glyph(p) } else { '+' };
    }
    let lines: Vec<String> = canvas
        .into_iter()
        .map(|l| l.into_iter().collect::<String>().trim_end().to_string())
        .collect();
    let indent = lines
        .iter()
        .filter(|l| !l.is_empty())
        .map(|l| l.chars().take_while(|&ch| ch == ' ').count())
        .min()
        .unwrap_or(0);
    let first = lines.iter().position(|l| !l.is_empty()).unwrap_or(0);
    let last = lines.iter().rposition(|l| !l.is_empty()).unwrap_or(0);
    let mut out = String::new();
    for l in &lines[first..=last] {
        out.extend(l.chars().skip(indent));
        out.push('\n');
    }
    out
}

const UNIT: usize = 40;

fn svg(scene: &Scene, opts: RenderOptions) -> String {
    let (rows, cols) = scene.extent();
    let (width, height) = (UNIT * (cols + 1), UNIT * (rows + 1));
    let at = |(r, c): Vertex| (UNIT * c + UNIT / 2, UNIT * r + UNIT / 2);
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();
    if opts.parity {
        writeln!(out, r#"<g class="cells" stroke="none">"#).unwrap();
        for cell in &scene.cells {
            let (x, y) = at(cell.top_left);
            let fill = match cell.parity {
                Parity::Odd => "#dde8f7",
                Parity::Even => "#f7eadd",
            };
            writeln!(
                out,
                r#"<rect class="cell {}" x="{x}" y="{y}" width="{UNIT}" height="{UNIT}" fill="{fill}"/>"#,
                cell.parity
            )
            .unwrap();
        }
        writeln!(out, "</g>").unwrap();
    }
    writeln!(out, r#"<g class="edges" stroke-width="4" stroke-linecap="round">"#).unwrap();
    for e in &scene.edges {
        let (a, b) = e.endpoints();
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        let (class, color) =
            if scene.drifters.contains(e) { ("drifter", "#c62828") } else { ("edge", "black") };
        writeln!(
            out,
            r#"<line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="{color}"/>"#
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, r#"<g class="vertices" stroke="black" stroke-width="1.5">"#).unwrap();
    for &(v, p) in &scene.vertices {
        let (x, y) = at(v);
        if opts.parity && p == Parity::Even {
            let (x0, y0) = (x - 5, y - 5);
            writeln!(out, r#"<rect class="even" x="{x0}" y="{y0}" width="10" height="10" fill="white"/>"#).unwrap();
        } else {
            let class = if opts.parity { "odd" } else { "vertex" };
            writeln!(out, r#"<circle class="{class}" cx="{x}" cy="{y}" r="5" fill="white"/>"#).unwrap();
        }
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

pub fn tfpl_ascii(f: &TfplConfig, opts: RenderOptions) -> String {
    ascii(&Scene::of_tfpl(f), opts)
}

pub fn tfpl_svg(f: &TfplConfig, opts: RenderOptions) -> String {
    svg(&Scene::of_tfpl(f), opts)
}

pub fn fpl_ascii(f: &FplConfig, opts: RenderOptions) -> String {
    ascii(&Scene::of_fpl(f), opts)
}

pub fn fpl_svg(f: &FplConfig, opts: RenderOptions) -> String {
    svg(&Scene::of_fpl(f), opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn size_one_picture() {
        let f = TfplConfig::from_edges(1, [Edge::east(1, 1), Edge::south(1, 2)]).unwrap();
        assert_eq!(tfpl_ascii(&f, RenderOptions::default()), "+---+   +\n    |\n");
        let with_parity = tfpl_ascii(&f, RenderOptions { parity: true });
        assert_eq!(with_parity.lines().next().unwrap(), "o---□   o");
    }

    #[test]
    fn square_picture() {
        let f = FplConfig::from_edges(1, [Edge::east(1, 0), Edge::east(1, 1)]).unwrap();
        assert_eq!(fpl_ascii(&f, RenderOptions::default()), "---+---\n");
    }

    #[test]
    fn svg_has_one_line_per_edge() {
        let f = TfplConfig::from_edges(1, [Edge::east(1, 1), Edge::south(1, 2)]).unwrap();
        let s = tfpl_svg(&f, RenderOptions { parity: true });
        assert_eq!(s.matches("<line ").count(), 2);
        assert!(s.trim_end().ends_with("</svg>"));
    }
}
