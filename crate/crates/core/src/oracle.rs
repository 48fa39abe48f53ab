//! Brute-force reference implementation, algorithm-disjoint from the fast
//! path: circles come from exhaustive triple enumeration instead of a
//! triangulation, and angular order uses rational arithmetic instead of the
//! homogeneous comparator. Agreement between the two paths is evidence, not
//! tautology.
//!
//! Also reconstructs each Voronoi cell explicitly as an intersection of
//! half-planes, clipped to a box provably beyond every candidate vertex;
//! tests use the reconstruction for the cell-angle property and to
//! cross-validate edge counts.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use crate::geom::{circumcenter, squared_distance, Point, PointSet};
use crate::hull::hull_outline;
use crate::rational::{rat_int, Rational};
use crate::voronoi::{EmptyCircle, VertexInfo, VoronoiSummary};

/// Every empty circle of `P`, by checking the circumcircle of every
/// non-collinear triple against every point. O(n^4).
pub fn brute_force_empty_circles(set: &PointSet) -> Vec<EmptyCircle> {
    let pts = set.points();
    let n = pts.len();
    let mut centers: BTreeMap<Point, Rational> = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let Ok(center) = circumcenter(&pts[i], &pts[j], &pts[k]) else {
                    continue;
                };
                if centers.contains_key(&center) {
                    continue;
                }
                let r2 = squared_distance(&center, &pts[i]);
                if pts.iter().all(|p| squared_distance(&center, p) >= r2) {
                    centers.insert(center, r2);
                }
            }
        }
    }
    centers
        .into_iter()
        .map(|(center, squared_radius)| {
            let support: Vec<Point> = pts
                .iter()
                .filter(|p| squared_distance(&center, p) == squared_radius)
                .cloned()
                .collect();
            EmptyCircle {
                center,
                squared_radius,
                support,
            }
        })
        .collect()
}

/// Angular order around `center` using plain rational arithmetic.
fn angular_order_rational(center: &Point, support: &[Point]) -> Vec<Point> {
    fn half(dx: &Rational, dy: &Rational) -> u8 {
        if dy > &Rational::zero() || (dy.is_zero() && dx > &Rational::zero()) {
            0
        } else {
            1
        }
    }
    let mut dirs: Vec<(Point, Rational, Rational)> = support
        .iter()
        .map(|p| (p.clone(), &p.x - &center.x, &p.y - &center.y))
        .collect();
    dirs.sort_by(|a, b| {
        let (ha, hb) = (half(&a.1, &a.2), half(&b.1, &b.2));
        if ha != hb {
            return ha.cmp(&hb);
        }
        let cross = &a.1 * &b.2 - &a.2 * &b.1;
        if cross > Rational::zero() {
            Ordering::Less
        } else if cross < Rational::zero() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    });
    dirs.into_iter().map(|(p, _, _)| p).collect()
}

fn point_pair(a: &Point, b: &Point) -> (Point, Point) {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

/// Assembles a full summary from first principles: circles by brute force,
/// infinite edges from hull neighbors, finite edges by direct enumeration of
/// pairs support-adjacent at exactly two vertices, degrees by counting
/// incident enumerated edges. The counting identity is never used.
pub fn brute_force_summary(set: &PointSet) -> VoronoiSummary {
    let pts = set.points();
    let n = set.len();
    let outline = hull_outline(set);
    if outline.collinear {
        return VoronoiSummary {
            vertices: Vec::new(),
            n_finite_edges: 0,
            n_infinite_edges: outline.neighbor_index_pairs().len(),
            i_c: 0,
            boundary_count: n,
            interior_count: 0,
            collinear: true,
        };
    }

    let circles = brute_force_empty_circles(set);
    let mut pair_map: BTreeMap<(Point, Point), Vec<usize>> = BTreeMap::new();
    for (ci, c) in circles.iter().enumerate() {
        let ring = angular_order_rational(&c.center, &c.support);
        let m = ring.len();
        for i in 0..m {
            pair_map
                .entry(point_pair(&ring[i], &ring[(i + 1) % m]))
                .or_default()
                .push(ci);
        }
    }

    let mut degree = vec![0usize; circles.len()];
    let mut n_finite_edges = 0usize;
    let mut infinite_pairs: BTreeSet<(Point, Point)> = BTreeSet::new();
    for (pair, cs) in &pair_map {
        for &ci in cs {
            degree[ci] += 1;
        }
        match cs.len() {
            1 => {
                infinite_pairs.insert(pair.clone());
            }
            2 => n_finite_edges += 1,
            k => panic!("pair {pair:?} adjacent at {k} vertices"),
        }
    }

    let hull_pairs: BTreeSet<(Point, Point)> = outline
        .neighbor_index_pairs()
        .into_iter()
        .map(|(i, j)| point_pair(&pts[i], &pts[j]))
        .collect();
    assert_eq!(
        infinite_pairs, hull_pairs,
        "single-vertex pairs must be exactly the hull neighbor pairs"
    );

    let i_c = circles.iter().map(|c| c.support.len() - 3).sum();
    let vertices = circles
        .iter()
        .enumerate()
        .map(|(ci, c)| VertexInfo {
            point: c.center.clone(),
            degree: degree[ci],
            support_size: c.support.len(),
        })
        .collect();
    VoronoiSummary {
        vertices,
        n_finite_edges,
        n_infinite_edges: infinite_pairs.len(),
        i_c,
        boundary_count: outline.boundary.len(),
        interior_count: n - outline.boundary.len(),
        collinear: false,
    }
}

/// What bounds one edge of a reconstructed cell polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EdgeSource {
    /// Perpendicular bisector against this generator.
    Bisector(Point),
    /// An artificial clipping-box side.
    Box,
}

/// A polygon vertex and the source of the edge leaving it toward the next
/// vertex (cyclically).
#[derive(Clone, Debug)]
pub struct CellVertex {
    pub position: Point,
    pub edge_to_next: EdgeSource,
}

/// One reconstructed Voronoi cell, clipped to a large box, counterclockwise.
#[derive(Clone, Debug)]
pub struct Cell {
    pub generator: Point,
    pub polygon: Vec<CellVertex>,
}

/// All cells plus the clipping box they were cut with.
#[derive(Clone, Debug)]
pub struct CellComplex {
    pub cells: Vec<Cell>,
    pub x_range: (Rational, Rational),
    pub y_range: (Rational, Rational),
}

impl CellComplex {
    /// True if `p` lies on the clipping box boundary, i.e. the cell is
    /// really unbounded there.
    pub fn on_box(&self, p: &Point) -> bool {
        p.x == self.x_range.0 || p.x == self.x_range.1 || p.y == self.y_range.0
            || p.y == self.y_range.1
    }
}

/// Bounding box strictly beyond the circumcenter of every non-collinear
/// triple, so every true Voronoi vertex is strictly interior and an edge is
/// unbounded iff its clipped version touches the box.
fn clipping_box(set: &PointSet) -> (Rational, Rational, Rational, Rational) {
    let pts = set.points();
    let mut lo_x = pts[0].x.clone();
    let mut hi_x = pts[0].x.clone();
    let mut lo_y = pts[0].y.clone();
    let mut hi_y = pts[0].y.clone();
    {
        let mut extend = |p: &Point| {
            if p.x < lo_x {
                lo_x = p.x.clone();
            }
            if p.x > hi_x {
                hi_x = p.x.clone();
            }
            if p.y < lo_y {
                lo_y = p.y.clone();
            }
            if p.y > hi_y {
                hi_y = p.y.clone();
            }
        };
        let n = pts.len();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    if let Ok(c) = circumcenter(&pts[i], &pts[j], &pts[k]) {
                        extend(&c);
                    }
                }
            }
        }
        for p in pts {
            extend(p);
        }
    }
    let margin = (&hi_x - &lo_x) + (&hi_y - &lo_y) + rat_int(1);
    (lo_x - &margin, hi_x + &margin, lo_y - &margin, hi_y + &margin)
}

/// Clips a counterclockwise polygon by the half-plane `a*x + b*y <= c`,
/// labeling boundary created on the clip line with `source`.
fn clip_polygon(
    poly: &[CellVertex],
    a: &Rational,
    b: &Rational,
    c: &Rational,
    source: &EdgeSource,
) -> Vec<CellVertex> {
    let side = |p: &Point| -> Ordering { (a * &p.x + b * &p.y).cmp(c) };
    let crossing = |p: &Point, q: &Point| -> Point {
        let fp = a * &p.x + b * &p.y;
        let fq = a * &q.x + b * &q.y;
        let t = (c - &fp) / (&fq - &fp);
        Point::new(&p.x + &t * (&q.x - &p.x), &p.y + &t * (&q.y - &p.y))
    };

    let mut out: Vec<CellVertex> = Vec::new();
    let n = poly.len();
    for i in 0..n {
        let cur = &poly[i];
        let nxt = &poly[(i + 1) % n];
        let (sc, sn) = (side(&cur.position), side(&nxt.position));
        if sc != Ordering::Greater {
            out.push(cur.clone());
            if sn == Ordering::Greater {
                if sc == Ordering::Less {
                    out.push(CellVertex {
                        position: crossing(&cur.position, &nxt.position),
                        edge_to_next: source.clone(),
                    });
                } else {
                    // Leaving exactly from a vertex on the line: the
                    // boundary turns along the clip line here.
                    out.last_mut().unwrap().edge_to_next = source.clone();
                }
            }
        } else if sn == Ordering::Less {
            out.push(CellVertex {
                position: crossing(&cur.position, &nxt.position),
                edge_to_next: cur.edge_to_next.clone(),
            });
        }
        // Re-entry exactly at the next vertex (sc Greater, sn Equal) emits
        // nothing; the next iteration keeps that vertex.
    }

    // Collapse zero-length edges from crossings that pinch at one point:
    // keep the first position, take the later outgoing label.
    let mut dedup: Vec<CellVertex> = Vec::with_capacity(out.len());
    for v in out {
        if let Some(last) = dedup.last_mut() {
            if last.position == v.position {
                last.edge_to_next = v.edge_to_next;
                continue;
            }
        }
        dedup.push(v);
    }
    // Same collapse across the cyclic seam: the tail's outgoing edge has
    // zero length, so it just disappears.
    while dedup.len() > 1 && dedup.first().unwrap().position == dedup.last().unwrap().position {
        dedup.pop();
    }
    dedup
}

/// Reconstructs every cell as the intersection of the bisector half-planes
/// against all other generators, clipped to a provably-large box.
pub fn reconstruct_cells(set: &PointSet) -> CellComplex {
    let pts = set.points();
    assert!(pts.len() >= 2, "cells need at least two generators");
    let (x0, x1, y0, y1) = clipping_box(set);
    let corner = |x: &Rational, y: &Rational| CellVertex {
        position: Point::new(x.clone(), y.clone()),
        edge_to_next: EdgeSource::Box,
    };
    let base = vec![
        corner(&x0, &y0),
        corner(&x1, &y0),
        corner(&x1, &y1),
        corner(&x0, &y1),
    ];

    let cells = pts
        .iter()
        .map(|p| {
            let mut poly = base.clone();
            for q in pts.iter().filter(|q| *q != p) {
                // |x - p|^2 <= |x - q|^2  <=>  2(q - p) . x <= |q|^2 - |p|^2
                let a = rat_int(2) * (&q.x - &p.x);
                let b = rat_int(2) * (&q.y - &p.y);
                let c = (&q.x * &q.x + &q.y * &q.y) - (&p.x * &p.x + &p.y * &p.y);
                poly = clip_polygon(&poly, &a, &b, &c, &EdgeSource::Bisector(q.clone()));
                assert!(poly.len() >= 3, "cell of {p:?} degenerated");
            }
            Cell {
                generator: p.clone(),
                polygon: poly,
            }
        })
        .collect();
    CellComplex {
        cells,
        x_range: (x0, x1),
        y_range: (y0, y1),
    }
}
