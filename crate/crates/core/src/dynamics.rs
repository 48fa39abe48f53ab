//! Orbits of the vertex-set iteration, per-step theorem checking, similarity
//! transforms, and period detection up to similarity.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::geom::{squared_distance, Point, PointSet};
use crate::hull::hull_outline;
use crate::rational::{bit_length, Rational};
use crate::voronoi::{summarize, vertex_set, InvariantViolation, VoronoiSummary};

/// A plane similarity `x -> k U x + x0` with `U` orthogonal and `k > 0`,
/// stored as the combined rational matrix `k U`.
///
/// The combined form is closed over the rationals: solving the two-point
/// correspondence equations between rational sets always yields a rational
/// matrix, even when `k` itself (and hence `U` alone) would be irrational,
/// e.g. the scale sqrt(2) rotation by 45 degrees mapping {(0,0),(1,0)} to
/// {(0,0),(1,1)}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Similarity {
    /// Matrix entries: rotation form `[[p, -q], [q, p]]` or reflection form
    /// `[[p, q], [q, -p]]`.
    p: Rational,
    q: Rational,
    reflection: bool,
    tx: Rational,
    ty: Rational,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SimilarityError {
    #[error("matrix is not orthogonal")]
    NotOrthogonal,
    #[error("scale must be positive")]
    NonPositiveScale,
    #[error("zero linear part")]
    Degenerate,
}

impl Similarity {
    pub fn identity() -> Self {
        Similarity {
            p: Rational::one(),
            q: Rational::zero(),
            reflection: false,
            tx: Rational::zero(),
            ty: Rational::zero(),
        }
    }

    pub fn translation(tx: Rational, ty: Rational) -> Self {
        Similarity {
            p: Rational::one(),
            q: Rational::zero(),
            reflection: false,
            tx,
            ty,
        }
    }

    /// Builds `x -> k U x + x0` from explicit parts; `U` given row-major.
    /// Requires exact orthogonality and `k > 0`.
    pub fn from_parts(
        k: Rational,
        u: [[Rational; 2]; 2],
        x0: (Rational, Rational),
    ) -> Result<Self, SimilarityError> {
        if !k.is_positive() {
            return Err(SimilarityError::NonPositiveScale);
        }
        let [[a, b], [c, d]] = &u;
        let one = Rational::one();
        let zero = Rational::zero();
        // U^T U = I
        if a * a + c * c != one || b * b + d * d != one || a * b + c * d != zero {
            return Err(SimilarityError::NotOrthogonal);
        }
        let det = a * d - b * c;
        let reflection = if det == one {
            false
        } else if det == -one {
            true
        } else {
            return Err(SimilarityError::NotOrthogonal);
        };
        Ok(Similarity {
            p: &k * a,
            q: &k * c,
            reflection,
            tx: x0.0,
            ty: x0.1,
        })
    }

    /// Rotation-type similarity from the combined matrix column `(p, q)`.
    pub fn direct(p: Rational, q: Rational, tx: Rational, ty: Rational) -> Result<Self, SimilarityError> {
        if p.is_zero() && q.is_zero() {
            return Err(SimilarityError::Degenerate);
        }
        Ok(Similarity {
            p,
            q,
            reflection: false,
            tx,
            ty,
        })
    }

    /// Reflection-type similarity from the combined matrix column `(p, q)`.
    pub fn reflecting(
        p: Rational,
        q: Rational,
        tx: Rational,
        ty: Rational,
    ) -> Result<Self, SimilarityError> {
        if p.is_zero() && q.is_zero() {
            return Err(SimilarityError::Degenerate);
        }
        Ok(Similarity {
            p,
            q,
            reflection: true,
            tx,
            ty,
        })
    }

    /// Squared scale factor `k^2 = p^2 + q^2`.
    pub fn scale_squared(&self) -> Rational {
        &self.p * &self.p + &self.q * &self.q
    }

    pub fn is_reflection(&self) -> bool {
        self.reflection
    }

    pub fn apply(&self, pt: &Point) -> Point {
        if self.reflection {
            Point::new(
                &self.p * &pt.x + &self.q * &pt.y + &self.tx,
                &self.q * &pt.x - &self.p * &pt.y + &self.ty,
            )
        } else {
            Point::new(
                &self.p * &pt.x - &self.q * &pt.y + &self.tx,
                &self.q * &pt.x + &self.p * &pt.y + &self.ty,
            )
        }
    }

    pub fn apply_set(&self, set: &PointSet) -> PointSet {
        PointSet::new(set.iter().map(|p| self.apply(p)).collect())
    }

    /// Composition `self after other`.
    pub fn compose(&self, other: &Similarity) -> Similarity {
        let o = other.apply(&Point::new(Rational::zero(), Rational::zero()));
        let ex = other.apply(&Point::new(Rational::one(), Rational::zero()));
        let img_o = self.apply(&o);
        let img_ex = self.apply(&ex);
        // Derive the combined matrix from the images of (0,0) and (1,0).
        let p = &img_ex.x - &img_o.x;
        let q = &img_ex.y - &img_o.y;
        Similarity {
            p,
            q,
            reflection: self.reflection != other.reflection,
            tx: img_o.x,
            ty: img_o.y,
        }
    }

    pub fn inverse(&self) -> Similarity {
        let s2 = self.scale_squared();
        let (p, q) = (&self.p / &s2, &self.q / &s2);
        if self.reflection {
            // Reflection matrices are involutions up to scale.
            let inv = Similarity {
                p,
                q,
                reflection: true,
                tx: Rational::zero(),
                ty: Rational::zero(),
            };
            let t = inv.apply(&Point::new(self.tx.clone(), self.ty.clone()));
            Similarity {
                tx: -t.x,
                ty: -t.y,
                ..inv
            }
        } else {
            let inv = Similarity {
                p,
                q: -q,
                reflection: false,
                tx: Rational::zero(),
                ty: Rational::zero(),
            };
            let t = inv.apply(&Point::new(self.tx.clone(), self.ty.clone()));
            Similarity {
                tx: -t.x,
                ty: -t.y,
                ..inv
            }
        }
    }
}

/// Applies a similarity pointwise; cardinality is preserved.
pub fn apply_similarity(t: &Similarity, set: &PointSet) -> PointSet {
    t.apply_set(set)
}

/// Maximum squared pairwise distance and the canonical pair realizing it.
fn diameter_pair(set: &PointSet) -> Option<(usize, usize, Rational)> {
    let pts = set.points();
    let n = pts.len();
    if n < 2 {
        return None;
    }
    let mut best: Option<(usize, usize, Rational)> = None;
    for i in 0..n {
        for j in (i + 1)..n {
            let d = squared_distance(&pts[i], &pts[j]);
            match &best {
                Some((_, _, cur)) if *cur >= d => {}
                _ => best = Some((i, j, d)),
            }
        }
    }
    best
}

/// Solves the unique orientation-preserving similarity with
/// `t(a) = c, t(b) = d`.
fn solve_direct(a: &Point, b: &Point, c: &Point, d: &Point) -> Similarity {
    let ux = &b.x - &a.x;
    let uy = &b.y - &a.y;
    let vx = &d.x - &c.x;
    let vy = &d.y - &c.y;
    let norm = &ux * &ux + &uy * &uy;
    let p = (&vx * &ux + &vy * &uy) / &norm;
    let q = (&vy * &ux - &vx * &uy) / &norm;
    let t = Similarity {
        p,
        q,
        reflection: false,
        tx: Rational::zero(),
        ty: Rational::zero(),
    };
    let ia = t.apply(a);
    Similarity {
        tx: &c.x - &ia.x,
        ty: &c.y - &ia.y,
        ..t
    }
}

/// Solves the unique orientation-reversing similarity with
/// `t(a) = c, t(b) = d`.
fn solve_reflecting(a: &Point, b: &Point, c: &Point, d: &Point) -> Similarity {
    let ux = &b.x - &a.x;
    let uy = &b.y - &a.y;
    let vx = &d.x - &c.x;
    let vy = &d.y - &c.y;
    let norm = &ux * &ux + &uy * &uy;
    // t(z) = alpha * conj(z) + beta with alpha = (d - c) / conj(b - a).
    let p = (&vx * &ux - &vy * &uy) / &norm;
    let q = (&vy * &ux + &vx * &uy) / &norm;
    let t = Similarity {
        p,
        q,
        reflection: true,
        tx: Rational::zero(),
        ty: Rational::zero(),
    };
    let ia = t.apply(a);
    Similarity {
        tx: &c.x - &ia.x,
        ty: &c.y - &ia.y,
        ..t
    }
}

/// Finds a similarity with `t(P) = Q`, if one exists.
///
/// Fixes the canonical maximum-distance pair of `P`; a similarity scales all
/// distances by the same factor, so its image must be a maximum-distance
/// pair of `Q`. Both candidate orientations are solved for every such pair
/// and verified exactly against the full sets.
pub fn are_similar(p_set: &PointSet, q_set: &PointSet) -> Option<Similarity> {
    if p_set.len() != q_set.len() {
        return None;
    }
    let n = p_set.len();
    if n == 0 {
        return Some(Similarity::identity());
    }
    if n == 1 {
        let a = &p_set.points()[0];
        let c = &q_set.points()[0];
        return Some(Similarity::translation(&c.x - &a.x, &c.y - &a.y));
    }
    let (ai, bi, dp) = diameter_pair(p_set).expect("two or more points");
    let (_, _, dq) = diameter_pair(q_set).expect("two or more points");
    let (a, b) = (&p_set.points()[ai], &p_set.points()[bi]);
    let pts_q = q_set.points();
    for i in 0..n {
        for j in 0..n {
            if i == j || squared_distance(&pts_q[i], &pts_q[j]) != dq {
                continue;
            }
            let _ = &dp;
            let (c, d) = (&pts_q[i], &pts_q[j]);
            let direct = solve_direct(a, b, c, d);
            if direct.apply_set(p_set) == *q_set {
                return Some(direct);
            }
            let mirrored = solve_reflecting(a, b, c, d);
            if mirrored.apply_set(p_set) == *q_set {
                return Some(mirrored);
            }
        }
    }
    None
}

/// Resource limits for iteration: generic orbits grow exponentially in both
/// cardinality and coordinate bit length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_points: usize,
    pub max_bits: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_points: 100_000,
            max_bits: 1_000_000,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CapKind {
    #[error("cardinality")]
    Points,
    #[error("coordinate bit length")]
    Bits,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("resource cap exceeded at step {step}: {kind} {actual} > {limit}")]
pub struct CapExceeded {
    pub step: usize,
    pub kind: CapKind,
    pub limit: u64,
    pub actual: u64,
}

/// Largest coordinate bit length over the set (max of numerator and
/// denominator sizes).
pub fn max_coordinate_bits(set: &PointSet) -> u64 {
    set.iter()
        .map(|p| bit_length(&p.x).max(bit_length(&p.y)))
        .max()
        .unwrap_or(0)
}

fn check_caps(set: &PointSet, step: usize, caps: &Caps) -> Result<(), CapExceeded> {
    if set.len() > caps.max_points {
        return Err(CapExceeded {
            step,
            kind: CapKind::Points,
            limit: caps.max_points as u64,
            actual: set.len() as u64,
        });
    }
    let bits = max_coordinate_bits(set);
    if bits > caps.max_bits {
        return Err(CapExceeded {
            step,
            kind: CapKind::Bits,
            limit: caps.max_bits,
            actual: bits,
        });
    }
    Ok(())
}

/// `n`-fold application of the vertex-set map. `iterate(P, 0) = P`.
pub fn iterate(set: &PointSet, n: usize, caps: &Caps) -> Result<PointSet, CapExceeded> {
    let mut cur = set.clone();
    check_caps(&cur, 0, caps)?;
    for step in 1..=n {
        if cur.is_empty() {
            return Ok(cur);
        }
        cur = vertex_set(&cur);
        check_caps(&cur, step, caps)?;
    }
    Ok(cur)
}

/// Outcome of one per-step theorem check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    /// The theorem's hypothesis does not apply at this step.
    Skipped(String),
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail(_))
    }

    fn require(ok: bool, msg: impl FnOnce() -> String) -> Verdict {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail(msg())
        }
    }
}

/// Per-step bound and identity verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepChecks {
    /// Counting identity (checked inside `summarize`; recorded here).
    pub identity: Verdict,
    /// `|V(P)| <= 2 |P| - 5` against the previous step.
    pub step_upper: Verdict,
    /// `|V^n(P)| <= 2^n (|P| - 5) + 5` against step zero.
    pub cumulative_upper: Verdict,
    /// `|Bd|` non-increasing along the orbit.
    pub boundary_monotone: Verdict,
    /// `|V^N(P)| >= 2^N |P| - (2^N - 1)(|Bd(P)| + 2)` while the orbit is
    /// cocircularity-free.
    pub lower_bound: Verdict,
}

impl StepChecks {
    pub fn any_fail(&self) -> bool {
        self.identity.is_fail()
            || self.step_upper.is_fail()
            || self.cumulative_upper.is_fail()
            || self.boundary_monotone.is_fail()
            || self.lower_bound.is_fail()
    }
}

/// One recorded orbit step.
#[derive(Clone, Debug)]
pub struct OrbitStep {
    pub n: usize,
    pub set: PointSet,
    pub cardinality: usize,
    pub boundary_count: usize,
    pub interior_count: usize,
    pub collinear: bool,
    pub max_bits: u64,
    /// Full diagram summary; absent only on the final step when the caller
    /// opted out of summarizing it.
    pub summary: Option<VoronoiSummary>,
    pub checks: StepChecks,
}

/// A recorded trajectory `P, V(P), V^2(P), ...`.
#[derive(Clone, Debug)]
pub struct OrbitRecord {
    pub steps: Vec<OrbitStep>,
    /// First step at which the set became empty, if it did.
    pub terminated_at: Option<usize>,
    /// Set when the orbit was cut short by a resource cap under
    /// [`CapPolicy::Truncate`]; the offending step is not recorded.
    pub truncated_by: Option<CapExceeded>,
}

impl OrbitRecord {
    pub fn sizes(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.cardinality).collect()
    }

    pub fn any_check_failed(&self) -> bool {
        self.steps.iter().any(|s| s.checks.any_fail())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error(transparent)]
    Invariant(#[from] InvariantViolation),
}

/// What to do when a resource cap is hit mid-orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CapPolicy {
    /// Abort with an error (the CLI contract).
    Error,
    /// Stop the orbit and return the steps observed so far.
    Truncate,
}

#[derive(Clone, Debug)]
pub struct OrbitOptions {
    pub max_steps: usize,
    pub caps: Caps,
    /// Summarize the final step too. Skipping it avoids triangulating a set
    /// whose own iteration is never needed, which dominates the cost of
    /// deep orbits.
    pub summarize_last: bool,
    pub cap_policy: CapPolicy,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions {
            max_steps: 64,
            caps: Caps::default(),
            summarize_last: true,
            cap_policy: CapPolicy::Error,
        }
    }
}

fn pow2(n: usize) -> BigInt {
    BigInt::one() << n
}

/// Runs the orbit, recording a summary and theorem verdicts at every step.
///
/// The upper bounds, boundary monotonicity, and the conditional lower bound
/// are evaluated wherever their hypotheses hold; the counting identity and
/// the edge-accounting identities are enforced by `summarize` itself and
/// abort the orbit as internal errors if they ever fail.
pub fn orbit(set: &PointSet, options: &OrbitOptions) -> Result<OrbitRecord, OrbitError> {
    let mut steps: Vec<OrbitStep> = Vec::new();
    let mut terminated_at = None;
    let mut truncated_by = None;
    let mut cur = set.clone();
    let mut prefix_clean = true; // all prior steps non-collinear with I_c = 0

    for n in 0..=options.max_steps {
        if let Err(cap) = check_caps(&cur, n, &options.caps) {
            match options.cap_policy {
                CapPolicy::Error => return Err(cap.into()),
                CapPolicy::Truncate => {
                    truncated_by = Some(cap);
                    break;
                }
            }
        }
        let outline = hull_outline(&cur);
        let boundary_count = outline.boundary.len();
        let collinear = outline.collinear;
        let cardinality = cur.len();
        let is_last = n == options.max_steps || cur.is_empty();

        let summary = if !is_last || options.summarize_last {
            Some(summarize(&cur)?)
        } else {
            None
        };

        let identity = if collinear {
            Verdict::Skipped("collinear or empty: identity does not apply".into())
        } else if summary.is_some() {
            Verdict::Pass
        } else {
            Verdict::Skipped("final step not summarized".into())
        };

        let step_upper = match steps.last() {
            None => Verdict::Skipped("first step".into()),
            Some(prev) if prev.collinear => {
                Verdict::require(cardinality == 0, || {
                    format!("collinear predecessor must map to empty, got {cardinality}")
                })
            }
            Some(prev) => Verdict::require(
                cardinality as i64 <= 2 * prev.cardinality as i64 - 5,
                || {
                    format!(
                        "|V(P)| = {} > 2*{} - 5",
                        cardinality, prev.cardinality
                    )
                },
            ),
        };

        let cumulative_upper = if n == 0 {
            Verdict::Skipped("first step".into())
        } else if steps.iter().all(|s| !s.collinear) {
            let bound = pow2(n) * (BigInt::from(steps[0].cardinality as i64) - 5) + 5;
            Verdict::require(BigInt::from(cardinality) <= bound, || {
                format!("|V^{n}(P)| = {cardinality} > 2^{n}(|P| - 5) + 5 = {bound}")
            })
        } else {
            Verdict::Skipped("a previous step was collinear".into())
        };

        let boundary_monotone = match steps.last() {
            None => Verdict::Skipped("first step".into()),
            Some(_) if cardinality == 0 => Verdict::Pass,
            Some(prev) => Verdict::require(boundary_count <= prev.boundary_count, || {
                format!(
                    "|Bd| grew from {} to {}",
                    prev.boundary_count, boundary_count
                )
            }),
        };

        let lower_bound = if n == 0 {
            Verdict::Skipped("first step".into())
        } else if prefix_clean {
            let bd0 = steps[0].boundary_count as i64;
            let p0 = steps[0].cardinality as i64;
            let bound = pow2(n) * p0 - (pow2(n) - 1) * (bd0 + 2);
            Verdict::require(BigInt::from(cardinality) >= bound, || {
                format!("|V^{n}(P)| = {cardinality} < 2^{n}|P| - (2^{n} - 1)(|Bd| + 2) = {bound}")
            })
        } else {
            Verdict::Skipped("cocircularity or collinearity occurred earlier".into())
        };

        if collinear || summary.as_ref().is_some_and(|s| s.i_c > 0) || summary.is_none() {
            prefix_clean = false;
        }

        let next = summary
            .as_ref()
            .map(|s| s.vertex_points())
            .unwrap_or_else(PointSet::empty);

        steps.push(OrbitStep {
            n,
            cardinality,
            boundary_count,
            interior_count: cardinality - boundary_count,
            collinear,
            max_bits: max_coordinate_bits(&cur),
            summary,
            set: cur,
            checks: StepChecks {
                identity,
                step_upper,
                cumulative_upper,
                boundary_monotone,
                lower_bound,
            },
        });

        if cardinality == 0 {
            terminated_at = Some(n);
            break;
        }
        if is_last {
            break;
        }
        cur = next;
    }

    Ok(OrbitRecord {
        steps,
        terminated_at,
        truncated_by,
    })
}

/// Result of scanning an orbit for a similarity back to its start.
#[derive(Clone, Debug)]
pub enum PeriodScan {
    /// `P` is similar to `V^k(P)` with the given witness.
    Found { k: usize, witness: Box<Similarity> },
    /// The orbit reached the empty set at this step.
    OrbitDied { at_step: usize },
    /// A resource cap stopped the scan before `k_max`.
    CapExceeded(CapExceeded),
    /// Observed through `k_max`, no similarity found.
    NoMatch,
}

impl PeriodScan {
    pub fn found(&self) -> Option<(usize, &Similarity)> {
        match self {
            PeriodScan::Found { k, witness } => Some((*k, witness)),
            _ => None,
        }
    }
}

/// Smallest `k <= k_max` with `P` similar to `V^k(P)`, up to resource caps.
pub fn detect_period(set: &PointSet, k_max: usize, caps: &Caps) -> PeriodScan {
    if set.is_empty() {
        return PeriodScan::OrbitDied { at_step: 0 };
    }
    let mut cur = set.clone();
    for k in 1..=k_max {
        cur = vertex_set(&cur);
        if let Err(cap) = check_caps(&cur, k, caps) {
            return PeriodScan::CapExceeded(cap);
        }
        if cur.is_empty() {
            return PeriodScan::OrbitDied { at_step: k };
        }
        if let Some(witness) = are_similar(set, &cur) {
            return PeriodScan::Found {
                k,
                witness: Box::new(witness),
            };
        }
    }
    PeriodScan::NoMatch
}
