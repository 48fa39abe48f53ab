//! Convex hull boundary/interior classification.
//!
//! A point is a boundary point when it lies on the boundary of the convex
//! hull — including points interior to a hull edge, which matters for the
//! infinite-edge count. Two boundary points are neighbors when the segment
//! between them lies on the hull boundary with no third set point on it.

use thiserror::Error;

use crate::geom::{
    find_non_collinear_witness, incircle, orientation, Point, PointSet,
};

/// Boundary/interior partition of a point set plus the boundary neighbor
/// pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullClassification {
    /// Boundary points in counterclockwise cyclic order, starting at the
    /// canonical minimum. For collinear sets: all points, ordered along the
    /// line.
    pub boundary: Vec<Point>,
    /// Points strictly inside the hull, canonical order.
    pub interior: Vec<Point>,
    /// Unordered boundary-neighbor pairs. Cyclically consecutive boundary
    /// points for non-collinear sets; consecutive along the line (one fewer
    /// than the count) for collinear sets.
    pub neighbor_pairs: Vec<(Point, Point)>,
}

/// Index-level hull outline used by the diagram code.
#[derive(Clone, Debug)]
pub(crate) struct HullOutline {
    /// Indices into the canonical point order; counterclockwise cyclic for
    /// non-collinear sets, along the line for collinear ones.
    pub boundary: Vec<usize>,
    pub collinear: bool,
}

impl HullOutline {
    pub(crate) fn neighbor_index_pairs(&self) -> Vec<(usize, usize)> {
        let b = &self.boundary;
        if b.len() < 2 {
            return Vec::new();
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        let last = b.len() - 1;
        for i in 0..last {
            pairs.push(order(b[i], b[i + 1]));
        }
        if !self.collinear {
            pairs.push(order(b[last], b[0]));
        }
        pairs
    }
}

fn order(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// True iff the set has no non-collinear triple (vacuously true for fewer
/// than three points).
pub fn is_collinear(set: &PointSet) -> bool {
    set.len() <= 2 || find_non_collinear_witness(set.points()).is_none()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CocircularityError {
    #[error("cocircularity is undefined for fewer than three points")]
    TooFewPoints,
    #[error("cocircularity is undefined for collinear sets")]
    Collinear,
}

/// True iff all points lie on one common circle. Requires at least three
/// non-collinear points.
pub fn is_cocircular(set: &PointSet) -> Result<bool, CocircularityError> {
    if set.len() < 3 {
        return Err(CocircularityError::TooFewPoints);
    }
    let pts = set.points();
    let (i, j, k) =
        find_non_collinear_witness(pts).ok_or(CocircularityError::Collinear)?;
    for (m, p) in pts.iter().enumerate() {
        if m == i || m == j || m == k {
            continue;
        }
        if incircle(&pts[i], &pts[j], &pts[k], p).expect("witness is non-collinear") != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Monotone-chain hull over the canonical order, retaining points interior
/// to hull edges; they are on the hull boundary and carry infinite edges.
pub(crate) fn hull_outline(set: &PointSet) -> HullOutline {
    let pts = set.points();
    let n = pts.len();
    if n == 0 {
        return HullOutline {
            boundary: Vec::new(),
            collinear: true,
        };
    }
    if is_collinear(set) {
        // Canonical order along a line is monotone along that line.
        return HullOutline {
            boundary: (0..n).collect(),
            collinear: true,
        };
    }

    // Pop only on strict clockwise turns so collinear edge points survive.
    let chain = |indices: &mut dyn Iterator<Item = usize>| -> Vec<usize> {
        let mut out: Vec<usize> = Vec::new();
        for i in indices {
            while out.len() >= 2 {
                let a = &pts[out[out.len() - 2]];
                let b = &pts[out[out.len() - 1]];
                if orientation(a, b, &pts[i]) < 0 {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(i);
        }
        out
    };
    let lower = chain(&mut (0..n));
    let upper = chain(&mut (0..n).rev());

    let mut boundary: Vec<usize> = Vec::with_capacity(lower.len() + upper.len() - 2);
    boundary.extend_from_slice(&lower[..lower.len() - 1]);
    boundary.extend_from_slice(&upper[..upper.len() - 1]);
    HullOutline {
        boundary,
        collinear: false,
    }
}

/// Partitions a set into hull boundary and interior, with the boundary
/// neighbor pairs.
pub fn classify(set: &PointSet) -> HullClassification {
    let outline = hull_outline(set);
    let pts = set.points();
    let mut on_boundary = vec![false; pts.len()];
    for &i in &outline.boundary {
        on_boundary[i] = true;
    }
    HullClassification {
        boundary: outline.boundary.iter().map(|&i| pts[i].clone()).collect(),
        interior: (0..pts.len())
            .filter(|&i| !on_boundary[i])
            .map(|i| pts[i].clone())
            .collect(),
        neighbor_pairs: outline
            .neighbor_index_pairs()
            .into_iter()
            .map(|(i, j)| (pts[i].clone(), pts[j].clone()))
            .collect(),
    }
}
