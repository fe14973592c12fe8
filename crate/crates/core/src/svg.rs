//! SVG rendering of drawings and decompositions.
//!
//! Drawings put layer A on the rail `y = 0` and layer B on `y = 100`, with
//! the vertex of rank `r` at `x = 40r`. Output is deterministic.

use std::fmt::Write;

use crate::graph::{BipartiteGraph, Side, TwoLayerDrawing};
use crate::pathdecomp::PathDecomposition;

pub const UNIT: i64 = 40;
pub const RAIL_A: i64 = 0;
pub const RAIL_B: i64 = 100;
const MARGIN: i64 = 30;
const RADIUS: i64 = 5;

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            _ => out.push(c),
        }
    }
    out
}

/// Position of a vertex in [`render_drawing`] output.
pub fn vertex_position(d: &TwoLayerDrawing, v: usize) -> (i64, i64) {
    let y = match d.graph().side(v) {
        Side::A => RAIL_A,
        Side::B => RAIL_B,
    };
    (d.rank(v) as i64 * UNIT, y)
}

pub fn render_drawing(d: &TwoLayerDrawing) -> String {
    let g = d.graph();
    let width = d.order_a().len().max(d.order_b().len()) as i64 * UNIT + UNIT;
    let mut s = String::new();
    header(&mut s, -MARGIN, -MARGIN, width + 2 * MARGIN, RAIL_B + 2 * MARGIN);
    let _ = writeln!(s, r##"<g stroke="#999" stroke-width="1">"##);
    for y in [RAIL_A, RAIL_B] {
        let _ = writeln!(s, r#"<line class="rail" x1="0" y1="{y}" x2="{width}" y2="{y}"/>"#);
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g stroke="black" stroke-width="1.5">"#);
    for &(a, b) in g.edges() {
        let (x1, y1) = vertex_position(d, a);
        let (x2, y2) = vertex_position(d, b);
        let _ = writeln!(
            s,
            r#"<line class="edge" data-a="{}" data-b="{}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#,
            escape(g.name(a)),
            escape(g.name(b))
        );
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r#"<g fill="white" stroke="black" font-family="sans-serif" font-size="10" text-anchor="middle">"#);
    for side in [Side::A, Side::B] {
        for &v in d.order(side) {
            let (x, y) = vertex_position(d, v);
            let ty = if side == Side::A { y - 10 } else { y + 18 };
            let _ = writeln!(s, r#"<circle cx="{x}" cy="{y}" r="{RADIUS}"/>"#);
            let _ = writeln!(s, r#"<text x="{x}" y="{ty}" fill="black" stroke="none">{}</text>"#, escape(g.name(v)));
        }
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

pub fn render_decomposition(g: &BipartiteGraph, pd: &PathDecomposition) -> String {
    const BOX_W: i64 = 80;
    const GAP: i64 = 20;
    const LINE: i64 = 14;
    let tallest = pd.bags().iter().map(Vec::len).max().unwrap_or(0) as i64;
    let box_h = LINE * tallest.max(1) + 10;
    let width = pd.len() as i64 * (BOX_W + GAP) - GAP;
    let mut s = String::new();
    header(&mut s, -MARGIN, -MARGIN, width.max(0) + 2 * MARGIN, box_h + 2 * MARGIN);
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="10">"#);
    for (i, bag) in pd.bags().iter().enumerate() {
        let x = i as i64 * (BOX_W + GAP);
        let _ = writeln!(
            s,
            r#"<rect class="bag" x="{x}" y="0" width="{BOX_W}" height="{box_h}" fill="none" stroke="black"/>"#
        );
        if i > 0 {
            let _ = writeln!(s, r#"<line x1="{}" y1="{}" x2="{x}" y2="{}" stroke="black"/>"#, x - GAP, box_h / 2, box_h / 2);
        }
        let mut names: Vec<&str> = bag.iter().map(|&v| g.name(v)).collect();
        names.sort_unstable();
        for (r, name) in names.iter().enumerate() {
            let _ = writeln!(
                s,
                r#"<text x="{}" y="{}">{}</text>"#,
                x + 6,
                LINE * (r as i64 + 1),
                escape(name)
            );
        }
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}

fn header(s: &mut String, x: i64, y: i64, w: i64, h: i64) {
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{x} {y} {w} {h}" width="{w}" height="{h}">"#
    );
}
