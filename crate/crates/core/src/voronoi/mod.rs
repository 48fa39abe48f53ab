//! Voronoi vertex extraction and diagram summaries.
//!
//! The vertex set of the Voronoi tessellation is exactly the set of centers
//! of empty circles: circles through three or more generators with no
//! generator strictly inside. The fast path triangulates, takes each
//! triangle's circumcircle, and merges triangles sharing one circumcircle so
//! that cocircular clusters collapse to a single vertex carrying the full
//! support — that merge is where instances of cocircularity live.
//!
//! Every summary cross-checks itself: finite edges are counted both through
//! the Euler relation and by direct enumeration of support-adjacent
//! generator pairs, infinite edges must biject with hull neighbor pairs, and
//! the vertex count must satisfy the counting identity
//! `|V(P)| = 2|P| - |Bd(P)| - I_c(P) - 2`. A mismatch is reported as an
//! internal error, never reconciled silently.

mod delaunay;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::geom::{
    cmp_ccw_from_positive_x, circumcenter_hom, hom_direction, squared_distance, HomPoint, Point,
    PointSet,
};
use crate::hull::{hull_outline, HullOutline};
use crate::rational::Rational;

pub(crate) use delaunay::delaunay_triangles;

/// A circle through three or more generators with no generator strictly
/// inside. Its center is a Voronoi vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmptyCircle {
    pub center: Point,
    pub squared_radius: Rational,
    /// Generators on the circle, canonical order, at least three.
    pub support: Vec<Point>,
}

/// One Voronoi vertex with its degree and supporting-generator count.
///
/// The degree (number of incident Voronoi edges) of a merged vertex equals
/// its support size: the edges at a vertex correspond to angularly
/// consecutive pairs of its supporting generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexInfo {
    pub point: Point,
    pub degree: usize,
    pub support_size: usize,
}

/// Combinatorial summary of one Voronoi tessellation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VoronoiSummary {
    /// Vertices in canonical order.
    pub vertices: Vec<VertexInfo>,
    pub n_finite_edges: usize,
    pub n_infinite_edges: usize,
    /// Instances of cocircularity: sum over empty circles of
    /// `(support - 3)`.
    pub i_c: usize,
    pub boundary_count: usize,
    pub interior_count: usize,
    pub collinear: bool,
}

impl VoronoiSummary {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// The vertex set as a point set, i.e. the next state of the iteration.
    pub fn vertex_points(&self) -> PointSet {
        PointSet::new(self.vertices.iter().map(|v| v.point.clone()).collect())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("internal invariant violated: {0}")]
pub struct InvariantViolation(pub String);

#[derive(Clone, Debug)]
pub(crate) struct MergedCircle {
    pub(crate) center: Point,
    /// Indices into the set's canonical order, ascending.
    pub(crate) support: Vec<usize>,
}

/// Triangulates and merges triangles sharing a circumcircle. Canonically
/// ordered by center; empty for collinear input.
pub(crate) fn merged_circles(set: &PointSet) -> Vec<MergedCircle> {
    merged_circles_with_homs(set).0
}

fn merged_circles_with_homs(set: &PointSet) -> (Vec<MergedCircle>, Vec<HomPoint>) {
    let homs: Vec<HomPoint> = set.points().iter().map(HomPoint::from).collect();
    let tris = delaunay_triangles(set);
    let mut groups: BTreeMap<Point, BTreeSet<usize>> = BTreeMap::new();
    for t in &tris {
        let center = circumcenter_hom(&homs[t[0]], &homs[t[1]], &homs[t[2]])
            .expect("triangulation produces no degenerate triangle");
        groups.entry(center).or_default().extend(t.iter().copied());
    }
    let circles = groups
        .into_iter()
        .map(|(center, support)| MergedCircle {
            center,
            support: support.into_iter().collect(),
        })
        .collect();
    (circles, homs)
}

/// The complete list of empty circles of a set; empty when the set is
/// collinear or has fewer than three points.
pub fn empty_circles(set: &PointSet) -> Vec<EmptyCircle> {
    let pts = set.points();
    merged_circles(set)
        .into_iter()
        .map(|mc| EmptyCircle {
            squared_radius: squared_distance(&mc.center, &pts[mc.support[0]]),
            support: mc.support.iter().map(|&i| pts[i].clone()).collect(),
            center: mc.center,
        })
        .collect()
}

/// The Voronoi vertex set of `set`: one application of the iteration map.
pub fn vertex_set(set: &PointSet) -> PointSet {
    PointSet::new(merged_circles(set).into_iter().map(|c| c.center).collect())
}

/// Support indices in counterclockwise order around the circle center.
fn angular_support_order(center: &Point, support: &[usize], homs: &[HomPoint]) -> Vec<usize> {
    let hc = HomPoint::from(center);
    let mut dirs: Vec<(usize, (num_bigint::BigInt, num_bigint::BigInt))> = support
        .iter()
        .map(|&i| (i, hom_direction(&homs[i], &hc)))
        .collect();
    dirs.sort_by(|a, b| cmp_ccw_from_positive_x(&a.1, &b.1));
    dirs.into_iter().map(|(i, _)| i).collect()
}

fn index_pair(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Generator pairs that are angularly adjacent on each circle's support.
/// Each pair is adjacent at exactly one vertex (an infinite Voronoi edge) or
/// exactly two (a finite edge).
fn support_adjacency(
    circles: &[MergedCircle],
    homs: &[HomPoint],
) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut pair_map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (ci, c) in circles.iter().enumerate() {
        let order = angular_support_order(&c.center, &c.support, homs);
        let m = order.len();
        for i in 0..m {
            let pair = index_pair(order[i], order[(i + 1) % m]);
            pair_map.entry(pair).or_default().push(ci);
        }
    }
    pair_map
}

fn collinear_summary(set: &PointSet, outline: &HullOutline) -> VoronoiSummary {
    VoronoiSummary {
        vertices: Vec::new(),
        n_finite_edges: 0,
        // A collinear set still has its parallel bisector lines, one per
        // consecutive neighbor pair; they touch no vertex.
        n_infinite_edges: outline.neighbor_index_pairs().len(),
        i_c: 0,
        boundary_count: set.len(),
        interior_count: 0,
        collinear: true,
    }
}

/// Full combinatorial summary with all runtime cross-checks.
pub fn summarize(set: &PointSet) -> Result<VoronoiSummary, InvariantViolation> {
    let n = set.len();
    let outline = hull_outline(set);
    if outline.collinear {
        return Ok(collinear_summary(set, &outline));
    }

    let (circles, homs) = merged_circles_with_homs(set);
    let v = circles.len();
    if v == 0 {
        return Err(InvariantViolation(
            "non-collinear set produced no empty circles".into(),
        ));
    }
    let boundary_count = outline.boundary.len();
    let interior_count = n - boundary_count;

    let pair_map = support_adjacency(&circles, &homs);
    let mut degree = vec![0usize; v];
    let mut infinite_pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut n_finite_edges = 0usize;
    for (pair, cs) in &pair_map {
        for &ci in cs {
            degree[ci] += 1;
        }
        match cs.len() {
            1 => {
                infinite_pairs.insert(*pair);
            }
            2 => n_finite_edges += 1,
            k => {
                return Err(InvariantViolation(format!(
                    "generator pair {pair:?} is support-adjacent at {k} vertices"
                )))
            }
        }
    }

    let hull_pairs: BTreeSet<(usize, usize)> =
        outline.neighbor_index_pairs().into_iter().collect();
    if infinite_pairs != hull_pairs {
        return Err(InvariantViolation(format!(
            "infinite-edge pairs {infinite_pairs:?} do not match hull neighbor pairs {hull_pairs:?}"
        )));
    }
    let n_infinite_edges = infinite_pairs.len();

    let euler_finite = v + interior_count - 1;
    if n_finite_edges != euler_finite {
        return Err(InvariantViolation(format!(
            "finite edge count {n_finite_edges} (enumerated) != {euler_finite} (Euler relation)"
        )));
    }

    let degree_sum: usize = degree.iter().sum();
    if degree_sum != n_infinite_edges + 2 * n_finite_edges {
        return Err(InvariantViolation(format!(
            "degree sum {degree_sum} != |E_I| + 2|E_F| = {}",
            n_infinite_edges + 2 * n_finite_edges
        )));
    }

    // Instances of cocircularity, two ways: over circles and over vertex
    // degrees. Both must agree and every degree must be at least 3.
    let mut i_c = 0usize;
    let mut i_c_by_degree = 0usize;
    for (ci, c) in circles.iter().enumerate() {
        if degree[ci] < 3 || c.support.len() < 3 {
            return Err(InvariantViolation(format!(
                "vertex {:?} has degree {} with support {}",
                c.center,
                degree[ci],
                c.support.len()
            )));
        }
        if degree[ci] != c.support.len() {
            return Err(InvariantViolation(format!(
                "vertex {:?}: degree {} != support size {}",
                c.center,
                degree[ci],
                c.support.len()
            )));
        }
        i_c += c.support.len() - 3;
        i_c_by_degree += degree[ci] - 3;
    }
    if i_c != i_c_by_degree {
        return Err(InvariantViolation(format!(
            "cocircularity counts disagree: {i_c} by circles, {i_c_by_degree} by degrees"
        )));
    }

    let expected = 2 * (n as i64) - (boundary_count as i64) - (i_c as i64) - 2;
    if v as i64 != expected {
        return Err(InvariantViolation(format!(
            "counting identity failed: |V| = {v} but 2*{n} - {boundary_count} - {i_c} - 2 = {expected}"
        )));
    }

    let vertices = circles
        .iter()
        .enumerate()
        .map(|(ci, c)| VertexInfo {
            point: c.center.clone(),
            degree: degree[ci],
            support_size: c.support.len(),
        })
        .collect();

    Ok(VoronoiSummary {
        vertices,
        n_finite_edges,
        n_infinite_edges,
        i_c,
        boundary_count,
        interior_count,
        collinear: false,
    })
}

/// Verifies the defining triangulation property directly: no set point lies
/// strictly inside the circumcircle of any triangle. O(n * triangles);
/// intended for tests and spot audits.
pub fn delaunay_property_holds(set: &PointSet) -> bool {
    let pts = set.points();
    let homs: Vec<HomPoint> = pts.iter().map(HomPoint::from).collect();
    for t in delaunay_triangles(set) {
        let center = match circumcenter_hom(&homs[t[0]], &homs[t[1]], &homs[t[2]]) {
            Some(c) => c,
            None => return false,
        };
        let r2 = squared_distance(&center, &pts[t[0]]);
        if pts.iter().any(|p| squared_distance(&center, p) < r2) {
            return false;
        }
    }
    true
}

/// Geometry of the Voronoi edges, for rendering: finite segments, infinite
/// rays (from their vertex, pointing away from the hull), and full bisector
/// lines for vertex-free diagrams.
#[derive(Clone, Debug, Default)]
pub struct DiagramEdges {
    pub segments: Vec<(Point, Point)>,
    /// Ray origin and an outward direction vector.
    pub rays: Vec<(Point, (Rational, Rational))>,
    /// A point on the line and a direction vector.
    pub lines: Vec<(Point, (Rational, Rational))>,
}

pub fn diagram_edges(set: &PointSet) -> DiagramEdges {
    let pts = set.points();
    let outline = hull_outline(set);
    let mut out = DiagramEdges::default();
    if outline.collinear {
        for (i, j) in outline.neighbor_index_pairs() {
            let (a, b) = (&pts[i], &pts[j]);
            let mid = Point::new(
                (&a.x + &b.x) / crate::rational::rat_int(2),
                (&a.y + &b.y) / crate::rational::rat_int(2),
            );
            let dir = (&a.y - &b.y, &b.x - &a.x);
            out.lines.push((mid, dir));
        }
        return out;
    }

    let (circles, homs) = merged_circles_with_homs(set);
    let pair_map = support_adjacency(&circles, &homs);
    for (_, cs) in pair_map.iter().filter(|(_, cs)| cs.len() == 2) {
        out.segments
            .push((circles[cs[0]].center.clone(), circles[cs[1]].center.clone()));
    }
    // Walk hull edges counterclockwise; outward is the clockwise normal.
    let b = &outline.boundary;
    for k in 0..b.len() {
        let (i, j) = (b[k], b[(k + 1) % b.len()]);
        let pair = index_pair(i, j);
        if let Some(cs) = pair_map.get(&pair) {
            let dx = &pts[j].x - &pts[i].x;
            let dy = &pts[j].y - &pts[i].y;
            out.rays
                .push((circles[cs[0]].center.clone(), (dy, -dx)));
        }
    }
    out
}
