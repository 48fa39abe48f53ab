#![allow(dead_code)]

//! Shared seeded generators for the integration suites.

use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use voriter_core::rational::Rational;
use voriter_core::{Point, PointSet};

/// Random points on a fine grid (denominator 2^16) inside the unit box,
/// mirroring the CLI generator's shape.
pub fn fine_grid_set(rng: &mut ChaCha8Rng, count: usize) -> PointSet {
    grid_set(rng, count, 1 << 16, 1)
}

/// Random integer-coordinate points in `[0, span)^2`: coarse grids produce
/// collinear and cocircular degeneracies constantly.
pub fn coarse_grid_set(rng: &mut ChaCha8Rng, count: usize, span: i64) -> PointSet {
    grid_set(rng, count, 1, span)
}

pub fn grid_set(rng: &mut ChaCha8Rng, count: usize, denom: i64, span: i64) -> PointSet {
    let mut pts: Vec<Point> = Vec::new();
    let mut guard = 0;
    while pts.len() < count {
        guard += 1;
        assert!(guard < 100_000, "grid too small to fit {count} distinct points");
        let x = Rational::new(BigInt::from(rng.gen_range(0..denom * span)), BigInt::from(denom));
        let y = Rational::new(BigInt::from(rng.gen_range(0..denom * span)), BigInt::from(denom));
        let p = Point::new(x, y);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointSet::new(pts)
}

/// Degenerate fixture sets: cocircular fans, grids with collinear hull
/// edges, collinear runs.
pub fn degenerate_fixtures() -> Vec<PointSet> {
    let int_set = |pts: &[(i64, i64)]| -> PointSet {
        PointSet::new(
            pts.iter()
                .map(|&(x, y)| {
                    Point::new(
                        Rational::from_integer(BigInt::from(x)),
                        Rational::from_integer(BigInt::from(y)),
                    )
                })
                .collect(),
        )
    };
    let mut out = vec![
        // Unit square.
        int_set(&[(0, 0), (1, 0), (1, 1), (0, 1)]),
        // Six rational points on the circle of radius 5 plus the center: a
        // cocircular hexagon stand-in with exact coordinates.
        int_set(&[(5, 0), (3, 4), (-3, 4), (-5, 0), (-4, -3), (4, -3), (0, 0)]),
        // Full cocircular fan of eight points on x^2 + y^2 = 25.
        int_set(&[
            (5, 0),
            (4, 3),
            (0, 5),
            (-3, 4),
            (-5, 0),
            (-4, -3),
            (0, -5),
            (3, -4),
        ]),
        // Collinear sets.
        int_set(&[(0, 0), (1, 0), (2, 0)]),
        int_set(&[(0, 0), (1, 1), (2, 2), (5, 5), (9, 9)]),
        // Grids: collinear hull-edge points and massive cocircularity.
        int_set(&[(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]),
        int_set(&[
            (0, 0),
            (1, 0),
            (2, 0),
            (0, 1),
            (1, 1),
            (2, 1),
            (0, 2),
            (1, 2),
            (2, 2),
        ]),
        // Square with all edge midpoints and center.
        int_set(&[
            (0, 0),
            (1, 0),
            (2, 0),
            (2, 1),
            (2, 2),
            (1, 2),
            (0, 2),
            (0, 1),
            (1, 1),
        ]),
        // Two points, one point.
        int_set(&[(0, 0), (7, 3)]),
        int_set(&[(4, 4)]),
    ];
    // 4x4 grid.
    let g: Vec<(i64, i64)> = (0..4).flat_map(|x| (0..4).map(move |y| (x, y))).collect();
    out.push(int_set(&g));
    out
}
