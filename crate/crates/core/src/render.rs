//! Deterministic SVG drawings of square tilings and of the tripartite dessin.

use std::collections::VecDeque;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::origami::{dessin, to_xye, Dir, Origami};

const UNIT: usize = 60;
const GAP: usize = 24;
const MARGIN: usize = 24;

/// Squares of each horizontal cylinder form one row, rows in BFS order from square 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    pub rows: Vec<Vec<usize>>,
}

impl Layout {
    pub fn position(&self, square: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&s| s == square) {
                return (r, c);
            }
        }
        unreachable!("every square is placed")
    }
}

/// A glued pair of drawn edges; `from` is a right (or top) edge, `to` the matching left (or
/// bottom) edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePair {
    pub label: String,
    pub dir: Dir,
    pub from: usize,
    pub to: usize,
    pub flipped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Drawing {
    pub layout: Layout,
    pub pairs: Vec<EdgePair>,
}

fn glyph(mut i: usize) -> String {
    let mut s = Vec::new();
    loop {
        s.push(b'a' + (i % 26) as u8);
        if i < 26 {
            break;
        }
        i = i / 26 - 1;
    }
    s.reverse();
    String::from_utf8(s).expect("ascii")
}

pub fn drawing(o: &Origami) -> Result<Drawing> {
    if !o.is_connected() {
        return Err(Error::Disconnected);
    }
    let t = to_xye(o)?;
    let d = o.degree();
    let mut row_of = vec![usize::MAX; d];
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut queue = VecDeque::from([0usize]);
    while let Some(start) = queue.pop_front() {
        if row_of[start] != usize::MAX {
            continue;
        }
        let mut row = vec![start];
        let mut s = t.x.apply(start);
        while s != start {
            row.push(s);
            s = t.x.apply(s);
        }
        for &s in &row {
            row_of[s] = rows.len();
        }
        for &s in &row {
            for n in [t.y.apply(s), t.y.inverse().apply(s)] {
                if row_of[n] == usize::MAX {
                    queue.push_back(n);
                }
            }
        }
        rows.push(row);
    }
    let layout = Layout { rows };
    let mut pairs = Vec::with_capacity(2 * d);
    for row in &layout.rows {
        for &s in row {
            pairs.push(EdgePair { label: String::new(), dir: Dir::Horizontal, from: s, to: t.x.apply(s), flipped: false });
            let up = t.y.apply(s);
            pairs.push(EdgePair { label: String::new(), dir: Dir::Vertical, from: s, to: up, flipped: t.eps[s] != t.eps[up] });
        }
    }
    for (i, p) in pairs.iter_mut().enumerate() {
        p.label = glyph(i);
    }
    Ok(Drawing { layout, pairs })
}

fn corner(r: usize, c: usize) -> (usize, usize) {
    (MARGIN + c * (UNIT + GAP), MARGIN + r * (UNIT + GAP))
}

/// Draws an arrow along an edge from `(x1,y1)` to `(x2,y2)` with its label beside the middle.
fn edge(out: &mut String, (x1, y1): (usize, usize), (x2, y2): (usize, usize), label: &str, dx: i64, dy: i64) {
    let _ = writeln!(
        out,
        r#"  <line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black" stroke-width="2" marker-end="url(#arrow)"/>"#
    );
    let mx = (x1 + x2) as i64 / 2 + dx;
    let my = (y1 + y2) as i64 / 2 + dy;
    let _ = writeln!(
        out,
        r#"  <text x="{mx}" y="{my}" font-size="12" text-anchor="middle" dominant-baseline="middle">{label}</text>"#
    );
}

pub fn render_svg(o: &Origami) -> Result<String> {
    let dr = drawing(o)?;
    let cols = dr.layout.rows.iter().map(Vec::len).max().unwrap_or(1);
    let width = 2 * MARGIN + cols * UNIT + (cols - 1) * GAP;
    let height = 2 * MARGIN + dr.layout.rows.len() * UNIT + (dr.layout.rows.len() - 1) * GAP;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"  <defs><marker id="arrow" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" orient="auto"><path d="M0,0 L10,5 L0,10 z"/></marker></defs>"#
    );
    let _ = writeln!(out, r#"  <rect width="{width}" height="{height}" fill="white"/>"#);
    for (r, row) in dr.layout.rows.iter().enumerate() {
        for (c, &s) in row.iter().enumerate() {
            let (x, y) = corner(r, c);
            let _ = writeln!(out, r##"  <rect x="{x}" y="{y}" width="{UNIT}" height="{UNIT}" fill="#eef3fb" stroke="none"/>"##);
            let (cx, cy) = (x + UNIT / 2, y + UNIT / 2);
            let _ = writeln!(
                out,
                r#"  <text x="{cx}" y="{cy}" font-size="16" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
                s + 1
            );
        }
    }
    let inset = 6;
    for p in &dr.pairs {
        let (ra, ca) = dr.layout.position(p.from);
        let (rb, cb) = dr.layout.position(p.to);
        let (xa, ya) = corner(ra, ca);
        let (xb, yb) = corner(rb, cb);
        match p.dir {
            Dir::Horizontal => {
                // right edge of `from`, left edge of `to`, arrows pointing up
                edge(&mut out, (xa + UNIT, ya + UNIT - inset), (xa + UNIT, ya + inset), &p.label, 8, 0);
                edge(&mut out, (xb, yb + UNIT - inset), (xb, yb + inset), &p.label, -8, 0);
            }
            Dir::Vertical => {
                // top edge of `from`, bottom edge of `to`, arrows pointing right unless flipped
                edge(&mut out, (xa + inset, ya), (xa + UNIT - inset, ya), &p.label, 0, -8);
                if p.flipped {
                    edge(&mut out, (xb + UNIT - inset, yb + UNIT), (xb + inset, yb + UNIT), &p.label, 0, 9);
                } else {
                    edge(&mut out, (xb + inset, yb + UNIT), (xb + UNIT - inset, yb + UNIT), &p.label, 0, 9);
                }
            }
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Squares in the middle column, horizontal pairs on the left, vertical pairs on the right.
pub fn render_dessin_svg(o: &Origami) -> Result<String> {
    if !o.is_connected() {
        return Err(Error::Disconnected);
    }
    let ds = dessin(o);
    let step = 40;
    let n = ds.squares.max(ds.h_vertices.len()).max(ds.v_vertices.len());
    let height = 2 * MARGIN + n * step;
    let width = 2 * MARGIN + 360;
    let xs = [MARGIN + 60, MARGIN + 180, MARGIN + 300];
    let y = |i: usize| MARGIN + step / 2 + i * step;
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(out, r#"  <rect width="{width}" height="{height}" fill="white"/>"#);
    for e in &ds.edges {
        let (x2, y2) = match e.dir {
            Dir::Horizontal => (xs[0], y(e.vertex)),
            Dir::Vertical => (xs[2], y(e.vertex)),
        };
        let _ = writeln!(
            out,
            r#"  <line x1="{}" y1="{}" x2="{x2}" y2="{y2}" stroke="gray" stroke-width="1.5"/>"#,
            xs[1],
            y(e.square)
        );
    }
    let fmt_pair = |(a, b): (i64, i64)| format!("{a:+}{b:+}");
    for (i, &p) in ds.h_vertices.iter().enumerate() {
        let _ = writeln!(out, r#"  <circle cx="{}" cy="{}" r="6" fill="white" stroke="black"/>"#, xs[0], y(i));
        let _ = writeln!(out, r#"  <text x="{}" y="{}" font-size="11" text-anchor="end" dominant-baseline="middle">{}</text>"#, xs[0] - 10, y(i), fmt_pair(p));
    }
    for (i, &p) in ds.v_vertices.iter().enumerate() {
        let _ = writeln!(out, r#"  <rect x="{}" y="{}" width="12" height="12" fill="white" stroke="black"/>"#, xs[2] - 6, y(i) - 6);
        let _ = writeln!(out, r#"  <text x="{}" y="{}" font-size="11" dominant-baseline="middle">{}</text>"#, xs[2] + 10, y(i), fmt_pair(p));
    }
    for s in 0..ds.squares {
        let _ = writeln!(out, r#"  <circle cx="{}" cy="{}" r="9" fill="black"/>"#, xs[1], y(s));
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="11" fill="white" text-anchor="middle" dominant-baseline="middle">{}</text>"#,
            xs[1],
            y(s),
            s + 1
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
