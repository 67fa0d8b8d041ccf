//! Static SVG figures: curve arrangements and partition heatmaps.

use std::fmt::Write as _;

use crate::geom::{curve_crossings, Color, CrossingKind, CurveFamily, PolylineCurve, RPoint};
use crate::graph::{Certificate, RegPartition};
use crate::topo::TopoDrawing;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 16.0;

/// Class colors, cycled.
pub const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2"];
const NEUTRAL: &str = "#555555";

pub fn certificate_color(c: Certificate) -> &'static str {
    match c {
        Certificate::Complete => "#2b8cbe",
        Certificate::Empty => "#f0f0f0",
        Certificate::Exceptional => "#e34a33",
    }
}

/// Maps rational coordinates into the square viewport with `y` pointing up.
struct View {
    x0: f64,
    y0: f64,
    scale: f64,
}

impl View {
    fn fit<'a>(points: impl Iterator<Item = &'a RPoint>) -> View {
        let (mut lo, mut hi) = ((f64::INFINITY, f64::INFINITY), (f64::NEG_INFINITY, f64::NEG_INFINITY));
        for p in points {
            let (x, y) = p.to_f64();
            lo = (lo.0.min(x), lo.1.min(y));
            hi = (hi.0.max(x), hi.1.max(y));
        }
        if !lo.0.is_finite() {
            return View { x0: 0.0, y0: 0.0, scale: 1.0 };
        }
        let span = (hi.0 - lo.0).max(hi.1 - lo.1).max(1e-9);
        View { x0: lo.0, y0: lo.1, scale: (SIZE - 2.0 * MARGIN) / span }
    }

    fn map(&self, p: &RPoint) -> (f64, f64) {
        let (x, y) = p.to_f64();
        (MARGIN + (x - self.x0) * self.scale, SIZE - MARGIN - (y - self.y0) * self.scale)
    }
}

fn open(out: &mut String, title: &str) {
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" width="{SIZE}" height="{SIZE}">"#
    );
    let _ = writeln!(out, "<title>{}</title>", escape(title));
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn polyline(out: &mut String, v: &View, c: &PolylineCurve, stroke: &str, extra: &str) {
    let pts: Vec<String> = c
        .vertices()
        .iter()
        .map(|p| {
            let (x, y) = v.map(p);
            format!("{x:.2},{y:.2}")
        })
        .collect();
    let _ = writeln!(
        out,
        r#"<polyline points="{}" fill="none" stroke="{stroke}" stroke-width="1.5" {extra}><title>curve {}</title></polyline>"#,
        pts.join(" "),
        c.id
    );
}

fn mark(out: &mut String, v: &View, p: &RPoint, fill: &str) {
    let (x, y) = v.map(p);
    let _ = writeln!(out, r#"<circle cx="{x:.2}" cy="{y:.2}" r="2.5" fill="{fill}"/>"#);
}

fn stroke_for(f: &CurveFamily, classes: Option<&[usize]>, i: usize) -> &'static str {
    match (classes.and_then(|c| c.get(i)), f.color_of(i)) {
        (Some(&k), _) => PALETTE[k % PALETTE.len()],
        (None, Some(Color::Red)) => PALETTE[1],
        (None, Some(Color::Blue)) => PALETTE[0],
        (None, None) => NEUTRAL,
    }
}

/// Curves colored by `classes` (indexed like `f.curves`), falling back to
/// the family's red/blue coloring. Proper crossings are marked in black;
/// grounds are dashed.
pub fn arrangement_svg(f: &CurveFamily, classes: Option<&[usize]>, title: &str) -> String {
    let grounds: Vec<&PolylineCurve> = f.grounds.iter().flat_map(|(a, b)| [a, b]).collect();
    let view = View::fit(f.curves.iter().chain(grounds.iter().copied()).flat_map(|c| c.vertices().iter()));
    let mut out = String::new();
    open(&mut out, title);
    for g in &grounds {
        polyline(&mut out, &view, g, "#999999", r#"stroke-dasharray="4 3""#);
    }
    for (i, c) in f.curves.iter().enumerate() {
        polyline(&mut out, &view, c, stroke_for(f, classes, i), "");
    }
    for i in 0..f.curves.len() {
        for j in i + 1..f.curves.len() {
            for r in curve_crossings(&f.curves[i], &f.curves[j]) {
                if r.kind == CrossingKind::ProperCrossing {
                    mark(&mut out, &view, &r.point, "black");
                }
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Vertices as dots, edges in `highlight` drawn in the first palette color
/// and the rest in gray.
pub fn drawing_svg(d: &TopoDrawing, highlight: &[usize], title: &str) -> String {
    let view = View::fit(d.points.iter().chain(d.edges.iter().flat_map(|e| e.curve.vertices().iter())));
    let mut out = String::new();
    open(&mut out, title);
    for (i, e) in d.edges.iter().enumerate() {
        let stroke = if highlight.contains(&i) { PALETTE[1] } else { "#aaaaaa" };
        polyline(&mut out, &view, &e.curve, stroke, "");
    }
    for p in &d.points {
        mark(&mut out, &view, p, "black");
    }
    out.push_str("</svg>\n");
    out
}

/// `K x K` grid of pair certificates; the diagonal is left dark gray.
pub fn partition_heatmap_svg(p: &RegPartition, title: &str) -> String {
    let k = p.k().max(1);
    let cell = (SIZE - 2.0 * MARGIN) / k as f64;
    let mut out = String::new();
    open(&mut out, title);
    for i in 0..p.k() {
        for j in 0..p.k() {
            let fill = if i == j { "#636363" } else { certificate_color(p.certificate(i, j)) };
            let (x, y) = (MARGIN + j as f64 * cell, MARGIN + i as f64 * cell);
            let _ = writeln!(
                out,
                r#"<rect x="{x:.2}" y="{y:.2}" width="{cell:.2}" height="{cell:.2}" fill="{fill}" stroke="white" stroke-width="0.5"/>"#
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
