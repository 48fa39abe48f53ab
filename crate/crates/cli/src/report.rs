//! Machine-readable report shapes. Field order is fixed by the struct
//! definitions, so serialized output is deterministic.

use serde::Serialize;
use voriter_core::dynamics::{OrbitRecord, OrbitStep, StepChecks, Verdict};
use voriter_core::voronoi::VoronoiSummary;

#[derive(Serialize, Debug)]
pub struct AnalyzeReport {
    pub cardinality: usize,
    pub boundary: usize,
    pub interior: usize,
    pub collinear: bool,
    pub i_c: usize,
    pub vertex_count: usize,
    pub finite_edges: usize,
    pub infinite_edges: usize,
    pub identity: String,
}

impl AnalyzeReport {
    pub fn from_summary(n: usize, s: &VoronoiSummary) -> Self {
        AnalyzeReport {
            cardinality: n,
            boundary: s.boundary_count,
            interior: s.interior_count,
            collinear: s.collinear,
            i_c: s.i_c,
            vertex_count: s.vertex_count(),
            finite_edges: s.n_finite_edges,
            infinite_edges: s.n_infinite_edges,
            identity: if s.collinear {
                "skipped: collinear".to_string()
            } else {
                "pass".to_string()
            },
        }
    }
}

fn verdict_string(v: &Verdict) -> String {
    match v {
        Verdict::Pass => "pass".to_string(),
        Verdict::Fail(msg) => format!("fail: {msg}"),
        Verdict::Skipped(msg) => format!("skipped: {msg}"),
    }
}

#[derive(Serialize, Debug)]
pub struct ChecksReport {
    pub identity: String,
    pub step_upper: String,
    pub cumulative_upper: String,
    pub boundary_monotone: String,
    pub lower_bound: String,
}

impl From<&StepChecks> for ChecksReport {
    fn from(c: &StepChecks) -> Self {
        ChecksReport {
            identity: verdict_string(&c.identity),
            step_upper: verdict_string(&c.step_upper),
            cumulative_upper: verdict_string(&c.cumulative_upper),
            boundary_monotone: verdict_string(&c.boundary_monotone),
            lower_bound: verdict_string(&c.lower_bound),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct OrbitStepReport {
    pub n: usize,
    pub cardinality: usize,
    pub boundary: usize,
    pub interior: usize,
    pub collinear: bool,
    pub max_coord_bits: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i_c: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finite_edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub infinite_edges: Option<usize>,
    pub checks: ChecksReport,
}

impl From<&OrbitStep> for OrbitStepReport {
    fn from(s: &OrbitStep) -> Self {
        OrbitStepReport {
            n: s.n,
            cardinality: s.cardinality,
            boundary: s.boundary_count,
            interior: s.interior_count,
            collinear: s.collinear,
            max_coord_bits: s.max_bits,
            i_c: s.summary.as_ref().map(|x| x.i_c),
            finite_edges: s.summary.as_ref().map(|x| x.n_finite_edges),
            infinite_edges: s.summary.as_ref().map(|x| x.n_infinite_edges),
            checks: (&s.checks).into(),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct OrbitReport {
    pub steps: Vec<OrbitStepReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub terminated_at: Option<usize>,
    pub status: String,
}

impl From<&OrbitRecord> for OrbitReport {
    fn from(r: &OrbitRecord) -> Self {
        OrbitReport {
            steps: r.steps.iter().map(Into::into).collect(),
            terminated_at: r.terminated_at,
            status: match r.terminated_at {
                Some(n) => format!("empty at step {n}"),
                None => "completed".to_string(),
            },
        }
    }
}

#[derive(Serialize, Debug)]
pub struct PeriodTrialReport {
    pub trial: usize,
    pub seed: u64,
    pub outcome: String,
}

#[derive(Serialize, Debug)]
pub struct PeriodSearchReport {
    pub count: usize,
    pub trials: usize,
    pub k_max: usize,
    pub hits: usize,
    pub died: usize,
    pub exhausted: usize,
    pub no_match: usize,
    pub skipped: usize,
    pub trial_reports: Vec<PeriodTrialReport>,
}
