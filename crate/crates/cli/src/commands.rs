//! Command definitions and implementations.
//!
//! Exit codes: 0 success, 1 usage or parse problems, 2 resource cap
//! exceeded, 3 internal invariant violation (a counting-identity failure is
//! a bug by definition, never a data condition).

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;
use voriter_core::dynamics::{
    detect_period, iterate, orbit, CapExceeded, CapPolicy, Caps, OrbitError, OrbitOptions,
    PeriodScan,
};
use voriter_core::rational::parse_rational;
use voriter_core::voronoi::summarize;
use voriter_core::PointSet;

use crate::gen::{generate, GenError, GenOptions, DEFAULT_GRID_DENOM};
use crate::pointfile::{parse_points, write_points, PointFileError};
use crate::render::{render_svg, RenderOptions};
use crate::report::{
    AnalyzeReport, OrbitReport, PeriodSearchReport, PeriodTrialReport,
};

#[derive(Parser, Debug)]
#[command(
    name = "voriter",
    about = "Exact Voronoi vertex iteration: analyze point sets, run orbits, render diagrams",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CapArgs {
    /// Abort when an intermediate set exceeds this many points.
    #[arg(long, default_value_t = 100_000)]
    pub max_points: usize,
    /// Abort when any coordinate exceeds this bit length.
    #[arg(long, default_value_t = 1_000_000)]
    pub max_bits: u64,
}

impl CapArgs {
    fn caps(&self) -> Caps {
        Caps {
            max_points: self.max_points,
            max_bits: self.max_bits,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One-step report: cardinality, boundary/interior split, cocircularity
    /// count, vertex count, edge counts, and the counting-identity check.
    Analyze {
        input: PathBuf,
        /// Emit the report as JSON instead of the one-line summary.
        #[arg(long)]
        json: bool,
    },
    /// Write the n-th vertex-set iterate of the input.
    Iterate {
        input: PathBuf,
        #[arg(short = 'n', long, default_value_t = 1)]
        steps: usize,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        caps: CapArgs,
    },
    /// Run the orbit, checking the counting identity and growth bounds at
    /// every step.
    Orbit {
        input: PathBuf,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
        #[command(flatten)]
        caps: CapArgs,
        /// Write the structured report as JSON to this path ("-" = stdout).
        #[arg(long)]
        json: Option<String>,
        /// Do not triangulate the final step; its hull statistics are still
        /// reported. Saves the dominant cost of deep orbits.
        #[arg(long)]
        skip_final_summary: bool,
    },
    /// Generate a seeded random point set on a rational grid.
    Random {
        #[arg(long)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Bounding box as "x0 y0 x1 y1" (fractions or decimals).
        #[arg(long = "box", value_name = "BOX", allow_hyphen_values = true)]
        bounding_box: Option<String>,
        /// Grid denominator (coordinates are multiples of 1/denom).
        #[arg(long, default_value_t = DEFAULT_GRID_DENOM)]
        grid_denom: u64,
        /// Re-roll until the set has no instance of cocircularity.
        #[arg(long)]
        force_general_position: bool,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Render the point set and its Voronoi diagram as SVG.
    Render {
        input: PathBuf,
        /// Output SVG path.
        #[arg(long)]
        svg: PathBuf,
        /// Dash the convex hull boundary.
        #[arg(long)]
        hull: bool,
        /// Mark the Voronoi vertices (the next iterate) as lighter disks.
        #[arg(long)]
        vertices: bool,
        /// Also draw the next iterate's Voronoi edges.
        #[arg(long)]
        overlay_next: bool,
        /// Skip the Voronoi edges of the input set.
        #[arg(long)]
        no_edges: bool,
    },
    /// Search seeded random sets for periodic points up to similarity.
    PeriodSearch {
        /// Points per trial set.
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Largest period to test.
        #[arg(long, default_value_t = 8)]
        kmax: usize,
        /// Base seed; trial i uses seed + i.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        caps: CapArgs,
        /// Emit the full report as JSON to this path ("-" = stdout).
        #[arg(long)]
        json: Option<String>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    PointFile {
        path: String,
        #[source]
        source: PointFileError,
    },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Generate(#[from] GenError),
    #[error("{0}")]
    Cap(#[from] CapExceeded),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. }
            | CliError::PointFile { .. }
            | CliError::Usage(_)
            | CliError::Generate(_) => 1,
            CliError::Cap(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

fn read_input(path: &Path) -> Result<PointSet, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let parsed = parse_points(&text).map_err(|source| CliError::PointFile {
        path: path.display().to_string(),
        source,
    })?;
    if parsed.duplicates > 0 {
        eprintln!(
            "warning: {}: dropped {} duplicate point(s)",
            path.display(),
            parsed.duplicates
        );
    }
    Ok(parsed.set)
}

fn write_output(path: Option<&Path>, content: &str, out: &mut impl std::io::Write) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            let _ = out.write_all(content.as_bytes());
            Ok(())
        }
    }
}

fn orbit_error(e: OrbitError) -> CliError {
    match e {
        OrbitError::Cap(c) => CliError::Cap(c),
        OrbitError::Invariant(v) => CliError::Internal(v.to_string()),
    }
}

fn parse_box(s: &str) -> Result<(voriter_core::Rational, voriter_core::Rational, voriter_core::Rational, voriter_core::Rational), CliError> {
    let parts: Vec<&str> = s.split_whitespace().collect();
    if parts.len() != 4 {
        return Err(CliError::Usage(format!(
            "--box expects four numbers \"x0 y0 x1 y1\", got `{s}`"
        )));
    }
    let mut vals = parts.iter().map(|p| parse_rational(p));
    let mut next = || {
        vals.next()
            .unwrap()
            .map_err(|e| CliError::Usage(format!("--box: {e}")))
    };
    Ok((next()?, next()?, next()?, next()?))
}

/// Runs a parsed command, writing human-readable output to `out`.
pub fn run_with_output(cli: Cli, out: &mut impl std::io::Write) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze { input, json } => {
            let set = read_input(&input)?;
            let summary = summarize(&set).map_err(|v| CliError::Internal(v.to_string()))?;
            let report = AnalyzeReport::from_summary(set.len(), &summary);
            if json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).unwrap());
            } else if summary.collinear {
                let _ = writeln!(
                    out,
                    "collinear; vit=∅ |P|={} |Bd|={} E_I={}",
                    report.cardinality, report.boundary, report.infinite_edges
                );
            } else {
                let _ = writeln!(
                    out,
                    "|P|={} |Bd|={} |Int|={} I_c={} |vit|={} E_F={} E_I={} identity={}",
                    report.cardinality,
                    report.boundary,
                    report.interior,
                    report.i_c,
                    report.vertex_count,
                    report.finite_edges,
                    report.infinite_edges,
                    report.identity
                );
            }
            Ok(())
        }

        Command::Iterate {
            input,
            steps,
            out: out_path,
            caps,
        } => {
            let set = read_input(&input)?;
            let result = iterate(&set, steps, &caps.caps())?;
            write_output(out_path.as_deref(), &write_points(&result), out)
        }

        Command::Orbit {
            input,
            max_steps,
            caps,
            json,
            skip_final_summary,
        } => {
            let set = read_input(&input)?;
            let record = orbit(
                &set,
                &OrbitOptions {
                    max_steps,
                    caps: caps.caps(),
                    summarize_last: !skip_final_summary,
                    cap_policy: CapPolicy::Error,
                },
            )
            .map_err(orbit_error)?;
            let report = OrbitReport::from(&record);

            let _ = writeln!(
                out,
                "{:>4} {:>7} {:>6} {:>6} {:>5} {:>6} {:>6} {:>9}  checks",
                "n", "|P|", "|Bd|", "|Int|", "I_c", "E_F", "E_I", "bits"
            );
            for s in &report.steps {
                let opt = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
                let checks = if record.steps[s.n].checks.any_fail() {
                    "FAIL"
                } else {
                    "ok"
                };
                let _ = writeln!(
                    out,
                    "{:>4} {:>7} {:>6} {:>6} {:>5} {:>6} {:>6} {:>9}  {}",
                    s.n,
                    s.cardinality,
                    s.boundary,
                    s.interior,
                    opt(s.i_c),
                    opt(s.finite_edges),
                    opt(s.infinite_edges),
                    s.max_coord_bits,
                    checks
                );
            }
            let _ = writeln!(out, "status: {}", report.status);

            if let Some(target) = json {
                let text = serde_json::to_string_pretty(&report).unwrap();
                if target == "-" {
                    let _ = writeln!(out, "{text}");
                } else {
                    write_output(Some(Path::new(&target)), &text, out)?;
                }
            }
            if record.any_check_failed() {
                return Err(CliError::Internal(
                    "a theorem check failed; see the orbit report".to_string(),
                ));
            }
            Ok(())
        }

        Command::Random {
            count,
            seed,
            bounding_box,
            grid_denom,
            force_general_position,
            out: out_path,
        } => {
            if count == 0 {
                return Err(CliError::Usage("--count must be at least 1".into()));
            }
            let mut opts = GenOptions::new(count, seed);
            opts.grid_denom = grid_denom;
            opts.force_general_position = force_general_position;
            if let Some(raw) = bounding_box {
                opts.bounding_box = parse_box(&raw)?;
            }
            let set = generate(&opts)?;
            write_output(out_path.as_deref(), &write_points(&set), out)
        }

        Command::Render {
            input,
            svg,
            hull,
            vertices,
            overlay_next,
            no_edges,
        } => {
            let set = read_input(&input)?;
            let content = render_svg(
                &set,
                &RenderOptions {
                    show_voronoi: !no_edges,
                    show_hull: hull,
                    show_vertices: vertices,
                    overlay_next,
                },
            );
            write_output(Some(&svg), &content, out)
        }

        Command::PeriodSearch {
            count,
            trials,
            kmax,
            seed,
            caps,
            json,
        } => {
            let caps = caps.caps();
            let mut report = PeriodSearchReport {
                count,
                trials,
                k_max: kmax,
                hits: 0,
                died: 0,
                exhausted: 0,
                no_match: 0,
                skipped: 0,
                trial_reports: Vec::new(),
            };
            for trial in 0..trials {
                let trial_seed = seed.wrapping_add(trial as u64);
                let set = generate(&GenOptions::new(count, trial_seed))?;
                let outcome = if kmax == 0 {
                    report.skipped += 1;
                    "skipped: k_max = 0".to_string()
                } else {
                    match detect_period(&set, kmax, &caps) {
                        PeriodScan::Found { k, witness } => {
                            report.hits += 1;
                            let _ = writeln!(
                                out,
                                "HIT: seed {trial_seed} is period-{k} up to similarity; witness {witness:?}; input:"
                            );
                            let _ = write!(out, "{}", write_points(&set));
                            format!("period {k}")
                        }
                        PeriodScan::OrbitDied { at_step } => {
                            report.died += 1;
                            format!("orbit empty at step {at_step}")
                        }
                        PeriodScan::CapExceeded(c) => {
                            report.exhausted += 1;
                            format!("exhausted: {c}")
                        }
                        PeriodScan::NoMatch => {
                            report.no_match += 1;
                            "no match".to_string()
                        }
                    }
                };
                report.trial_reports.push(PeriodTrialReport {
                    trial,
                    seed: trial_seed,
                    outcome,
                });
            }
            let _ = writeln!(
                out,
                "{} trials of {}-point sets, k_max {}: {} hits, {} died, {} exhausted, {} no-match, {} skipped",
                report.trials,
                report.count,
                report.k_max,
                report.hits,
                report.died,
                report.exhausted,
                report.no_match,
                report.skipped
            );
            if let Some(target) = json {
                let text = serde_json::to_string_pretty(&report).unwrap();
                if target == "-" {
                    let _ = writeln!(out, "{text}");
                } else {
                    write_output(Some(Path::new(&target)), &text, out)?;
                }
            }
            Ok(())
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let result = run_with_output(cli, &mut lock);
    let _ = lock.flush();
    result
}
