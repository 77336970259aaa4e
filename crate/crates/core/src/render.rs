//! SVG chord diagrams and DOT output for embeddings.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::embed::{BookEmbedding, PALETTE};

pub const SVG_SIZE: f64 = 640.0;
pub const SVG_RADIUS: f64 = 280.0;

/// Coordinates of layout index `i` out of `n`: angle `2π·i/n` measured from
/// the positive x axis, on a circle centered in the canvas.
pub fn vertex_point(i: usize, n: usize) -> (f64, f64) {
    let theta = 2.0 * PI * i as f64 / n as f64;
    let c = SVG_SIZE / 2.0;
    (c + SVG_RADIUS * theta.cos(), c + SVG_RADIUS * theta.sin())
}

fn page_color(page: usize) -> &'static str {
    PALETTE.get(page).copied().unwrap_or("black")
}

/// Vertices on a circle in layout order, chords colored by page.
pub fn svg(emb: &BookEmbedding, title: &str) -> String {
    let n = emb.layout.len();
    let mut out = String::new();
    writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = SVG_SIZE
    )
    .unwrap();
    writeln!(out, "<title>{title}</title>").unwrap();
    writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(out, r#"<g fill="none" stroke-width="1.5">"#).unwrap();
    for &(e, page) in &emb.assignment {
        let (Some(pu), Some(pv)) = (emb.layout.position(e.u), emb.layout.position(e.v)) else {
            continue;
        };
        let (x1, y1) = vertex_point(pu, n);
        let (x2, y2) = vertex_point(pv, n);
        writeln!(
            out,
            r#"<line data-u="{}" data-v="{}" data-page="{page}" x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{}"/>"#,
            e.u,
            e.v,
            page_color(page)
        )
        .unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(
        out,
        r#"<g font-family="sans-serif" font-size="10" text-anchor="middle">"#
    )
    .unwrap();
    for (i, &v) in emb.layout.order().iter().enumerate() {
        let (x, y) = vertex_point(i, n);
        writeln!(
            out,
            r#"<circle data-v="{v}" cx="{x:.3}" cy="{y:.3}" r="3" fill="black"/>"#
        )
        .unwrap();
        let theta = 2.0 * PI * i as f64 / n as f64;
        let (lx, ly) = (x + 14.0 * theta.cos(), y + 14.0 * theta.sin() + 3.5);
        writeln!(out, r#"<text x="{lx:.3}" y="{ly:.3}">{v}</text>"#).unwrap();
    }
    writeln!(out, "</g>").unwrap();
    writeln!(out, "</svg>").unwrap();
    out
}

/// Undirected DOT graph with fixed circular positions and page colors.
pub fn dot(emb: &BookEmbedding, name: &str) -> String {
    let n = emb.layout.len();
    let mut out = String::new();
    writeln!(out, "graph \"{name}\" {{").unwrap();
    writeln!(out, "  layout=neato;").unwrap();
    writeln!(out, "  node [shape=circle, width=0.3, fixedsize=true];").unwrap();
    for (i, &v) in emb.layout.order().iter().enumerate() {
        let (x, y) = vertex_point(i, n);
        writeln!(out, "  {v} [pos=\"{:.3},{:.3}!\"];", x / 72.0, -y / 72.0).unwrap();
    }
    for &(e, page) in &emb.assignment {
        writeln!(
            out,
            "  {} -- {} [color={}, page={page}];",
            e.u,
            e.v,
            page_color(page)
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
