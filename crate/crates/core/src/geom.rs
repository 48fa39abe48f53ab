//! Points, canonical point sets, and the three exact predicates everything
//! else is built on: orientation, in-circle, and circumcenter.
//!
//! The public predicates take rational points. Internally each point is
//! lifted once to homogeneous integer coordinates `(x, y, w)` with `w > 0`,
//! and every sign is obtained from an integer determinant — no rounding, no
//! gcd reductions on the hot path.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

/// A point of the plane with exact rational coordinates.
///
/// Ordering is lexicographic by `(x, y)`; this is the canonical order used
/// for all deterministic outputs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }
}

impl std::fmt::Debug for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

/// A finite set of distinct points, stored sorted in canonical order.
///
/// Construction deduplicates, so every instance really is a set; iteration
/// order is always the canonical lexicographic order, which makes every
/// downstream output reproducible byte for byte.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Builds a set from arbitrary points, sorting and deduplicating.
    pub fn new(mut points: Vec<Point>) -> Self {
        points.sort();
        points.dedup();
        PointSet { points }
    }

    pub fn empty() -> Self {
        PointSet { points: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Point> {
        self.points.iter()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Position of `p` in the canonical order, if present.
    pub fn index_of(&self, p: &Point) -> Option<usize> {
        self.points.binary_search(p).ok()
    }
}

impl FromIterator<Point> for PointSet {
    fn from_iter<T: IntoIterator<Item = Point>>(iter: T) -> Self {
        PointSet::new(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a Point;
    type IntoIter = std::slice::Iter<'a, Point>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("degenerate input: the three points are collinear")]
pub struct CollinearInput;

/// Exact squared Euclidean distance.
pub fn squared_distance(a: &Point, b: &Point) -> Rational {
    let dx = &a.x - &b.x;
    let dy = &a.y - &b.y;
    &dx * &dx + &dy * &dy
}

/// Sign of the cross product `(b - a) x (c - a)`.
///
/// `+1` if `a, b, c` make a counterclockwise turn, `0` if collinear, `-1`
/// if clockwise.
pub fn orientation(a: &Point, b: &Point, c: &Point) -> i8 {
    orient_hom(&HomPoint::from(a), &HomPoint::from(b), &HomPoint::from(c))
}

/// Position of `d` relative to the circle through `a`, `b`, `c`.
///
/// `+1` strictly inside, `0` on the circle, `-1` strictly outside, for any
/// orientation of the non-collinear triple `(a, b, c)`.
pub fn incircle(a: &Point, b: &Point, c: &Point, d: &Point) -> Result<i8, CollinearInput> {
    let (ha, hb, hc, hd) = (
        HomPoint::from(a),
        HomPoint::from(b),
        HomPoint::from(c),
        HomPoint::from(d),
    );
    let orient = orient_hom(&ha, &hb, &hc);
    if orient == 0 {
        return Err(CollinearInput);
    }
    Ok(incircle_hom(&ha, &hb, &hc, &hd) * orient)
}

/// The unique point exactly equidistant from three non-collinear points.
pub fn circumcenter(a: &Point, b: &Point, c: &Point) -> Result<Point, CollinearInput> {
    let (ha, hb, hc) = (HomPoint::from(a), HomPoint::from(b), HomPoint::from(c));
    circumcenter_hom(&ha, &hb, &hc).ok_or(CollinearInput)
}

/// Homogeneous integer coordinates `(x / w, y / w)` with `w > 0`.
///
/// Lifting clears per-coordinate denominators once so predicate signs reduce
/// to integer determinants.
#[derive(Clone, Debug)]
pub(crate) struct HomPoint {
    pub(crate) x: BigInt,
    pub(crate) y: BigInt,
    pub(crate) w: BigInt,
}

impl From<&Point> for HomPoint {
    fn from(p: &Point) -> Self {
        let (xn, xd) = (p.x.numer(), p.x.denom());
        let (yn, yd) = (p.y.numer(), p.y.denom());
        HomPoint {
            x: xn * yd,
            y: yn * xd,
            w: xd * yd,
        }
    }
}

impl HomPoint {
    /// Row of the paraboloid-lifted determinant, scaled by `w^2`:
    /// `(x*w, y*w, x^2 + y^2, w^2)`.
    pub(crate) fn lift_row(&self) -> [BigInt; 4] {
        [
            &self.x * &self.w,
            &self.y * &self.w,
            &self.x * &self.x + &self.y * &self.y,
            &self.w * &self.w,
        ]
    }
}

fn sign_to_i8(s: Sign) -> i8 {
    match s {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Sign of `det [[ax, ay, aw], [bx, by, bw], [cx, cy, cw]]`, which equals the
/// sign of the affine orientation determinant.
pub(crate) fn orient_hom(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> i8 {
    let det = &a.x * (&b.y * &c.w - &b.w * &c.y) - &a.y * (&b.x * &c.w - &b.w * &c.x)
        + &a.w * (&b.x * &c.y - &b.y * &c.x);
    sign_to_i8(det.sign())
}

fn det3(r0: &[BigInt; 3], r1: &[BigInt; 3], r2: &[BigInt; 3]) -> BigInt {
    &r0[0] * (&r1[1] * &r2[2] - &r1[2] * &r2[1]) - &r0[1] * (&r1[0] * &r2[2] - &r1[2] * &r2[0])
        + &r0[2] * (&r1[0] * &r2[1] - &r1[1] * &r2[0])
}

/// The four 3x3 minors of three lifted rows, ordered by deleted column.
/// Cached per triangle by the triangulation.
pub(crate) fn lift_minors(ra: &[BigInt; 4], rb: &[BigInt; 4], rc: &[BigInt; 4]) -> [BigInt; 4] {
    let minor = |c0: usize, c1: usize, c2: usize| {
        det3(
            &[ra[c0].clone(), ra[c1].clone(), ra[c2].clone()],
            &[rb[c0].clone(), rb[c1].clone(), rb[c2].clone()],
            &[rc[c0].clone(), rc[c1].clone(), rc[c2].clone()],
        )
    };
    [
        minor(1, 2, 3),
        minor(0, 2, 3),
        minor(0, 1, 3),
        minor(0, 1, 2),
    ]
}

/// Lifted in-circle determinant sign given precomputed minors of `(a, b, c)`
/// and the lifted row of `d`: positive iff `d` is strictly inside the
/// circumcircle when `(a, b, c)` is counterclockwise.
pub(crate) fn incircle_from_minors(minors: &[BigInt; 4], d_row: &[BigInt; 4]) -> i8 {
    let det = -(&d_row[0] * &minors[0]) + &d_row[1] * &minors[1] - &d_row[2] * &minors[2]
        + &d_row[3] * &minors[3];
    sign_to_i8(det.sign())
}

/// Raw oriented in-circle sign: positive iff `d` strictly inside the circle
/// through `(a, b, c)` taken counterclockwise.
pub(crate) fn incircle_hom(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> i8 {
    incircle_from_minors(
        &lift_minors(&a.lift_row(), &b.lift_row(), &c.lift_row()),
        &d.lift_row(),
    )
}

/// Lexicographic comparison of the affine points behind two homogeneous
/// representations.
pub(crate) fn cmp_hom(a: &HomPoint, b: &HomPoint) -> Ordering {
    let x = (&a.x * &b.w - &b.x * &a.w).sign();
    match x {
        Sign::Minus => Ordering::Less,
        Sign::Plus => Ordering::Greater,
        Sign::NoSign => match (&a.y * &b.w - &b.y * &a.w).sign() {
            Sign::Minus => Ordering::Less,
            Sign::Plus => Ordering::Greater,
            Sign::NoSign => Ordering::Equal,
        },
    }
}

/// `p` strictly inside the open segment `(a, b)`, for collinear homogeneous
/// points.
pub(crate) fn hom_strictly_between(a: &HomPoint, b: &HomPoint, p: &HomPoint) -> bool {
    let (lo, hi) = if cmp_hom(a, b) == Ordering::Less {
        (a, b)
    } else {
        (b, a)
    };
    cmp_hom(lo, p) == Ordering::Less && cmp_hom(p, hi) == Ordering::Less
}

/// Circumcenter as a reduced rational point; `None` when collinear.
pub(crate) fn circumcenter_hom(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> Option<Point> {
    let d = det3(
        &[a.x.clone(), a.y.clone(), a.w.clone()],
        &[b.x.clone(), b.y.clone(), b.w.clone()],
        &[c.x.clone(), c.y.clone(), c.w.clone()],
    );
    if d.is_zero() {
        return None;
    }
    let sq = |p: &HomPoint| &p.x * &p.x + &p.y * &p.y;
    let (sa, sb, sc) = (sq(a), sq(b), sq(c));
    let nx = det3(
        &[sa.clone(), &a.y * &a.w, &a.w * &a.w],
        &[sb.clone(), &b.y * &b.w, &b.w * &b.w],
        &[sc.clone(), &c.y * &c.w, &c.w * &c.w],
    );
    let ny = det3(
        &[&a.x * &a.w, sa, &a.w * &a.w],
        &[&b.x * &b.w, sb, &b.w * &b.w],
        &[&c.x * &c.w, sc, &c.w * &c.w],
    );
    let denom = BigInt::from(2) * d * (&a.w * &b.w * &c.w);
    Some(Point::new(
        Rational::new(nx, denom.clone()),
        Rational::new(ny, denom),
    ))
}

/// Comparator ordering directions counterclockwise starting from the
/// positive x-axis; `u` and `v` are direction vectors given as the
/// difference of homogeneous points minus a common homogeneous center.
///
/// Concretely the caller supplies the integer pairs
/// `(ux, uy) = (x_i * wc - xc * w_i, y_i * wc - yc * w_i)`, whose implicit
/// positive denominators cancel in every sign computed here.
pub(crate) fn cmp_ccw_from_positive_x(u: &(BigInt, BigInt), v: &(BigInt, BigInt)) -> Ordering {
    fn half(d: &(BigInt, BigInt)) -> u8 {
        // 0 for angle in [0, pi), 1 for [pi, 2pi)
        if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
            0
        } else {
            1
        }
    }
    let (hu, hv) = (half(u), half(v));
    if hu != hv {
        return hu.cmp(&hv);
    }
    let cross = &u.0 * &v.1 - &u.1 * &v.0;
    match cross.sign() {
        Sign::Plus => Ordering::Less,
        Sign::Minus => Ordering::Greater,
        Sign::NoSign => Ordering::Equal,
    }
}

/// Difference `p - center` as an integer direction pair with an implicit
/// positive denominator.
pub(crate) fn hom_direction(p: &HomPoint, center: &HomPoint) -> (BigInt, BigInt) {
    (
        &p.x * &center.w - &center.x * &p.w,
        &p.y * &center.w - &center.y * &p.w,
    )
}

/// One is `true` iff the set's points admit a non-collinear triple; helper
/// shared by hull and triangulation code.
pub(crate) fn find_non_collinear_witness(points: &[Point]) -> Option<(usize, usize, usize)> {
    if points.len() < 3 {
        return None;
    }
    // Points are distinct, so (0, 1) is a valid base pair in canonical order.
    for k in 2..points.len() {
        if orientation(&points[0], &points[1], &points[k]) != 0 {
            return Some((0, 1, k));
        }
    }
    None
}
