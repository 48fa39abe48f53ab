//! Exact-arithmetic engine for the Voronoi vertex iteration: the map sending
//! a finite planar point set to the vertex set of its Voronoi tessellation.
//!
//! All coordinates are arbitrary-precision rationals, so cocircularity and
//! collinearity are decided exactly and iterated vertex sets stay exact at
//! every depth. The crate is organized as:
//!
//! - [`rational`]: the coordinate scalar and its parsing/formatting helpers
//! - [`geom`]: points, canonical point sets, and the three exact predicates
//! - [`hull`]: convex hull boundary/interior classification
//! - [`voronoi`]: empty-circle extraction and diagram summaries (fast path)
//! - [`oracle`]: brute-force reference implementation used for validation
//! - [`dynamics`]: orbits, growth-bound checks, similarity, period detection

pub mod dynamics;
pub mod geom;
pub mod hull;
pub mod oracle;
pub mod rational;
pub mod voronoi;

pub use geom::{Point, PointSet};
pub use rational::Rational;
