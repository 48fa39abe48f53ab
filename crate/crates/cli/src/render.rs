//! Deterministic SVG rendering of a point set with its Voronoi diagram.
//!
//! Exact coordinates are converted to floating point only here, at render
//! time. Generators draw as dark disks, Voronoi vertices as lighter disks,
//! edges as strokes clipped to a viewport around the set and its vertices.

use std::fmt::Write as _;

use voriter_core::dynamics::max_coordinate_bits;
use voriter_core::hull::classify;
use voriter_core::rational::to_f64_approx;
use voriter_core::voronoi::{diagram_edges, vertex_set, DiagramEdges};
use voriter_core::{Point, PointSet};

#[derive(Clone, Debug)]
pub struct RenderOptions {
    pub show_voronoi: bool,
    pub show_hull: bool,
    pub show_vertices: bool,
    pub overlay_next: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            show_voronoi: true,
            show_hull: false,
            show_vertices: false,
            overlay_next: false,
        }
    }
}

const CANVAS: f64 = 800.0;

struct Viewport {
    min_x: f64,
    min_y: f64,
    scale: f64,
    width: f64,
    height: f64,
}

impl Viewport {
    fn to_screen(&self, x: f64, y: f64) -> (f64, f64) {
        (
            (x - self.min_x) * self.scale,
            // SVG y grows downward.
            self.height - (y - self.min_y) * self.scale,
        )
    }
}

fn fp(p: &Point) -> (f64, f64) {
    (to_f64_approx(&p.x), to_f64_approx(&p.y))
}

fn viewport(set: &PointSet, vertices: &PointSet) -> Viewport {
    let mut pts: Vec<(f64, f64)> = set.iter().map(fp).collect();
    pts.extend(vertices.iter().map(fp));
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if let Some(&(x0, y0)) = pts.first() {
        min_x = x0;
        max_x = x0;
        min_y = y0;
        max_y = y0;
        for &(x, y) in &pts {
            min_x = min_x.min(x);
            max_x = max_x.max(x);
            min_y = min_y.min(y);
            max_y = max_y.max(y);
        }
    }
    let mut span_x = max_x - min_x;
    let mut span_y = max_y - min_y;
    // Pad 10% per side; keep degenerate extents visible.
    if span_x <= 0.0 {
        min_x -= 0.5;
        span_x = 1.0;
    }
    if span_y <= 0.0 {
        min_y -= 0.5;
        span_y = 1.0;
    }
    let pad_x = span_x * 0.1;
    let pad_y = span_y * 0.1;
    min_x -= pad_x;
    min_y -= pad_y;
    span_x += 2.0 * pad_x;
    span_y += 2.0 * pad_y;
    let scale = CANVAS / span_x.max(span_y);
    Viewport {
        min_x,
        min_y,
        scale,
        width: span_x * scale,
        height: span_y * scale,
    }
}

/// Liang-Barsky style clip of the parametric segment `o + t*d`, `t` in
/// `[t0, t1]`, against the world-coordinate viewport box.
fn clip_parametric(
    vp: &Viewport,
    o: (f64, f64),
    d: (f64, f64),
    mut t0: f64,
    mut t1: f64,
) -> Option<((f64, f64), (f64, f64))> {
    let max_x = vp.min_x + vp.width / vp.scale;
    let max_y = vp.min_y + vp.height / vp.scale;
    let checks = [
        (-d.0, o.0 - vp.min_x),
        (d.0, max_x - o.0),
        (-d.1, o.1 - vp.min_y),
        (d.1, max_y - o.1),
    ];
    for (p, q) in checks {
        if p == 0.0 {
            if q < 0.0 {
                return None;
            }
        } else {
            let r = q / p;
            if p < 0.0 {
                if r > t1 {
                    return None;
                }
                t0 = t0.max(r);
            } else {
                if r < t0 {
                    return None;
                }
                t1 = t1.min(r);
            }
        }
    }
    if t0 > t1 {
        return None;
    }
    Some((
        (o.0 + t0 * d.0, o.1 + t0 * d.1),
        (o.0 + t1 * d.0, o.1 + t1 * d.1),
    ))
}

fn stroke_edges(svg: &mut String, vp: &Viewport, edges: &DiagramEdges, color: &str, width: f64) {
    let big = 4.0 * (vp.width.max(vp.height)) / vp.scale + 1.0;
    let mut emit = |a: (f64, f64), b: (f64, f64)| {
        let (x1, y1) = vp.to_screen(a.0, a.1);
        let (x2, y2) = vp.to_screen(b.0, b.1);
        let _ = writeln!(
            svg,
            r#"  <line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="{color}" stroke-width="{width}"/>"#
        );
    };
    for (a, b) in &edges.segments {
        emit(fp(a), fp(b));
    }
    for (origin, dir) in &edges.rays {
        let o = fp(origin);
        let d = (to_f64_approx(&dir.0), to_f64_approx(&dir.1));
        let norm = (d.0 * d.0 + d.1 * d.1).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            continue;
        }
        let d = (d.0 / norm, d.1 / norm);
        if let Some((a, b)) = clip_parametric(vp, o, d, 0.0, big) {
            emit(a, b);
        }
    }
    for (through, dir) in &edges.lines {
        let o = fp(through);
        let d = (to_f64_approx(&dir.0), to_f64_approx(&dir.1));
        let norm = (d.0 * d.0 + d.1 * d.1).sqrt();
        if norm == 0.0 || !norm.is_finite() {
            continue;
        }
        let d = (d.0 / norm, d.1 / norm);
        if let Some((a, b)) = clip_parametric(vp, o, d, -big, big) {
            emit(a, b);
        }
    }
}

pub fn render_svg(set: &PointSet, opts: &RenderOptions) -> String {
    let vertices = vertex_set(set);
    let vp = viewport(set, &vertices);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.0}" height="{:.0}" viewBox="0 0 {:.3} {:.3}">"#,
        vp.width, vp.height, vp.width, vp.height
    );
    let _ = writeln!(svg, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    if set.is_empty() {
        let _ = writeln!(
            svg,
            r##"  <text x="{:.1}" y="{:.1}" font-family="monospace" font-size="20" fill="#555" text-anchor="middle">empty point set</text>"##,
            vp.width / 2.0,
            vp.height / 2.0
        );
        svg.push_str("</svg>\n");
        return svg;
    }

    if opts.show_voronoi {
        stroke_edges(&mut svg, &vp, &diagram_edges(set), "#2c3e50", 1.5);
    }
    if opts.overlay_next && !vertices.is_empty() {
        stroke_edges(&mut svg, &vp, &diagram_edges(&vertices), "#74b9ff", 1.0);
    }
    if opts.show_hull {
        let hull = classify(set).boundary;
        if hull.len() >= 2 {
            let mut d = String::new();
            for (i, p) in hull.iter().enumerate() {
                let (x, y) = fp(p);
                let (sx, sy) = vp.to_screen(x, y);
                let _ = write!(d, "{}{sx:.3},{sy:.3} ", if i == 0 { "M" } else { "L" });
            }
            let _ = writeln!(
                svg,
                r##"  <path d="{}Z" fill="none" stroke="#27ae60" stroke-width="1" stroke-dasharray="6 4"/>"##,
                d
            );
        }
    }
    for p in set.iter() {
        let (x, y) = fp(p);
        let (sx, sy) = vp.to_screen(x, y);
        let _ = writeln!(
            svg,
            r##"  <circle cx="{sx:.3}" cy="{sy:.3}" r="4" fill="#2d3436" class="generator"/>"##
        );
    }
    if opts.show_vertices {
        for p in vertices.iter() {
            let (x, y) = fp(p);
            let (sx, sy) = vp.to_screen(x, y);
            let _ = writeln!(
                svg,
                r##"  <circle cx="{sx:.3}" cy="{sy:.3}" r="3" fill="#b2bec3" class="vertex"/>"##
            );
        }
    }
    let _ = writeln!(
        svg,
        r#"  <!-- |P| = {}, |vit(P)| = {}, max coordinate bits = {} -->"#,
        set.len(),
        vertices.len(),
        max_coordinate_bits(set)
    );
    svg.push_str("</svg>\n");
    svg
}
