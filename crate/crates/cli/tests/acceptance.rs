//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measurements (run with `--nocapture` to see them).
//!
//! The pinned growth seed and observation caps are fixed here, in code; no
//! tolerance is deferred to later calibration.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use voriter::gen::{generate, GenOptions};
use voriter_core::dynamics::{
    apply_similarity, detect_period, orbit, CapPolicy, Caps, OrbitOptions, OrbitRecord,
    PeriodScan, Similarity,
};
use voriter_core::geom::orientation;
use voriter_core::hull::is_cocircular;
use voriter_core::oracle::{brute_force_empty_circles, brute_force_summary, reconstruct_cells};
use voriter_core::rational::{rat, rat_int, Rational};
use voriter_core::voronoi::{empty_circles, summarize, vertex_set};
use voriter_core::{Point, PointSet};

/// Seed whose 9-point set keeps |Bd| = 3 and I_c = 0 through step 6,
/// reproducing the doubling growth column. Found with the ignored
/// `find_growth_seed` scan below.
const GROWTH_SEED: u64 = 227;
const GROWTH_SIZES: [usize; 7] = [9, 13, 21, 37, 69, 133, 261];

fn int_point(x: i64, y: i64) -> Point {
    Point::new(rat_int(x), rat_int(y))
}

fn int_set(pts: &[(i64, i64)]) -> PointSet {
    PointSet::new(pts.iter().map(|&(x, y)| int_point(x, y)).collect())
}

/// Degenerate fixture list: square, cocircular fan plus center (a rational
/// stand-in for the regular hexagon, whose exact vertices are irrational),
/// cocircular fans, collinear sets, grids with collinear hull-edge points.
fn degenerate_fixtures() -> Vec<PointSet> {
    let mut out = vec![
        int_set(&[(0, 0), (1, 0), (1, 1), (0, 1)]),
        int_set(&[(5, 0), (3, 4), (-3, 4), (-5, 0), (-4, -3), (4, -3), (0, 0)]),
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
        int_set(&[(0, 0), (1, 0), (2, 0)]),
        int_set(&[(0, 0), (1, 1), (2, 2), (5, 5), (9, 9)]),
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
        int_set(&[(0, 0), (7, 3)]),
        int_set(&[(4, 4)]),
    ];
    let g16: Vec<(i64, i64)> = (0..4).flat_map(|x| (0..4).map(move |y| (x, y))).collect();
    out.push(int_set(&g16));
    out
}

fn random_set(rng: &mut ChaCha8Rng, count: usize, grid_denom: u64) -> PointSet {
    let mut opts = GenOptions::new(count, rng.gen());
    opts.grid_denom = grid_denom;
    generate(&opts).expect("generation succeeds")
}

fn pass(criterion: &str, detail: String) {
    println!("ACCEPTANCE {criterion}: PASS ({detail})");
}

#[test]
fn criterion_1_counting_identity_fuzz() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1);
    let trials = 5_000;
    for i in 0..trials {
        let n = 3 + (i % 48);
        let set = random_set(&mut rng, n, 1 << 16);
        // summarize enforces the identity internally and fails on any
        // violation; re-assert it explicitly from the reported fields.
        let s = summarize(&set).expect("identity and edge accounting hold");
        assert_eq!(
            s.vertex_count() as i64,
            2 * set.len() as i64 - s.boundary_count as i64 - s.i_c as i64 - 2,
            "identity failed on {set:?}"
        );
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(120),
        "criterion 1 exceeded its 2-minute budget: {elapsed:?}"
    );
    pass(
        "criterion 1 (counting-identity fuzz)",
        format!("{trials} sets, |P| in [3,50], zero failures, {elapsed:.2?}"),
    );
}

#[test]
fn criterion_2_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC2);
    let mut checked = 0usize;

    let check = |set: &PointSet| {
        let fast = summarize(set).expect("summary invariants hold");
        let brute = brute_force_summary(set);
        assert_eq!(fast, brute, "summary disagreement on {set:?}");
        assert_eq!(
            empty_circles(set),
            brute_force_empty_circles(set),
            "circle disagreement on {set:?}"
        );
    };

    for set in degenerate_fixtures() {
        check(&set);
        checked += 1;
    }
    for i in 0..2_000 {
        let n = 3 + (i % 10);
        let set = if i % 2 == 0 {
            random_set(&mut rng, n, 1 << 16)
        } else {
            // Coarse grids: degeneracies on nearly every draw.
            let span = 3 + (i % 3) as i64;
            let cap = (span * span) as usize;
            let mut opts = GenOptions::new(n.min(cap), rng.gen());
            opts.grid_denom = span as u64;
            opts.bounding_box = (
                rat_int(0),
                rat_int(0),
                rat_int(span),
                rat_int(span),
            );
            generate(&opts).expect("generation succeeds")
        };
        check(&set);
        checked += 1;
    }
    pass(
        "criterion 2 (oracle equivalence)",
        format!(
            "{checked} sets (fixtures + randomized, |P| <= 12), zero disagreements, {:.2?}",
            start.elapsed()
        ),
    );
}

fn observed_orbit(set: &PointSet, max_steps: usize, max_bits: u64) -> OrbitRecord {
    orbit(
        set,
        &OrbitOptions {
            max_steps,
            caps: Caps {
                max_points: 100_000,
                max_bits,
            },
            summarize_last: true,
            cap_policy: CapPolicy::Truncate,
        },
    )
    .expect("orbit invariants hold")
}

#[test]
fn criterion_3_small_cardinality_theorems() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC3);

    // Four-point sets: empty by step 3 with the predicted intermediate
    // cardinalities. Fixtures pin the degenerate branches the fine grid
    // essentially never draws.
    let mut four_point_sets: Vec<PointSet> = vec![
        int_set(&[(0, 0), (1, 0), (1, 1), (0, 1)]),
        int_set(&[(0, 0), (3, 1), (6, 2), (9, 3)]),
        int_set(&[(0, 0), (4, 0), (0, 4), (1, 1)]),
    ];
    for _ in 0..1_000 {
        four_point_sets.push(random_set(&mut rng, 4, 1 << 16));
    }
    let mut four_cases = [0usize; 4];
    for set in &four_point_sets {
        let record = observed_orbit(set, 4, 1 << 20);
        let first = &record.steps[0];
        let expected: Vec<usize> = if first.collinear {
            four_cases[0] += 1;
            vec![4, 0]
        } else if first.boundary_count == 3 {
            four_cases[1] += 1;
            vec![4, 3, 1, 0]
        } else if is_cocircular(set).unwrap() {
            four_cases[2] += 1;
            vec![4, 1, 0]
        } else {
            four_cases[3] += 1;
            vec![4, 2, 0]
        };
        assert_eq!(record.sizes(), expected, "case analysis failed on {set:?}");
        assert!(record.terminated_at.is_some_and(|n| n <= 3));
        assert!(!record.any_check_failed());
    }
    assert!(four_cases.iter().all(|&c| c > 0), "all four branches exercised");

    // Five-point dichotomy: every orbit either dies or shows exactly five
    // points at every observed step. Exact coordinates triple in bit length
    // per step, so surviving orbits are observed up to a bit cap rather
    // than to a fixed depth.
    let mut survivors = 0usize;
    let mut died = 0usize;
    let mut min_observed_surviving = usize::MAX;
    for _ in 0..1_000 {
        let set = random_set(&mut rng, 5, 1 << 16);
        let record = observed_orbit(&set, 20, 3_000);
        let sizes = record.sizes();
        assert!(!record.any_check_failed());
        if record.terminated_at.is_some() {
            died += 1;
            // Once below five the orbit must die; sizes may pass through
            // smaller values but never return to five.
            let drop = sizes.iter().position(|&s| s != 5).unwrap();
            assert!(sizes[drop..].iter().all(|&s| s < 5));
            assert_eq!(*sizes.last().unwrap(), 0);
        } else {
            survivors += 1;
            assert!(
                sizes.iter().all(|&s| s == 5),
                "surviving five-point orbit changed size: {sizes:?} on {set:?}"
            );
            min_observed_surviving = min_observed_surviving.min(sizes.len());
        }
    }
    assert!(survivors > 0, "expected some constant-five orbits");
    assert!(died > 0, "expected some dying five-point orbits");

    pass(
        "criterion 3 (small-cardinality theorems)",
        format!(
            "{} four-point orbits (collinear/Bd3/cocircular/Bd4 = {four_cases:?}) all empty by step 3; \
             1000 five-point orbits: {died} died, {survivors} constant-5 at every observed step \
             (>= {min_observed_surviving} steps each, bit-capped), {:.2?}",
            four_point_sets.len(),
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_4_growth_sequence_reproduction() {
    let start = Instant::now();

    // Shallow conditional scan: every seed whose record keeps |Bd| = 3 and
    // I_c = 0 must follow the doubling column as far as observed.
    let mut conditioned = 0usize;
    for seed in 0..=300u64 {
        let set = generate(&GenOptions::new(9, seed)).unwrap();
        let record = observed_orbit(&set, 3, 1 << 20);
        let clean = record.steps.iter().all(|s| {
            s.boundary_count == 3 && s.summary.as_ref().is_some_and(|x| x.i_c == 0)
        });
        if clean {
            conditioned += 1;
            assert_eq!(record.sizes(), GROWTH_SIZES[..4].to_vec(), "seed {seed}");
        }
    }
    assert!(conditioned >= 1, "conditional scan must not be vacuous");

    // The pinned seed, full depth, final step summarized: |Bd| = 3 and
    // I_c = 0 hold through step 6 and the column is exact.
    let set = generate(&GenOptions::new(9, GROWTH_SEED)).unwrap();
    let record = orbit(
        &set,
        &OrbitOptions {
            max_steps: 6,
            caps: Caps::default(),
            summarize_last: true,
            cap_policy: CapPolicy::Error,
        },
    )
    .expect("growth orbit stays within default caps");
    assert_eq!(record.sizes(), GROWTH_SIZES.to_vec());
    for step in &record.steps {
        assert_eq!(step.boundary_count, 3, "step {}", step.n);
        let summary = step.summary.as_ref().expect("all steps summarized");
        assert_eq!(summary.i_c, 0, "step {}", step.n);
    }
    assert!(!record.any_check_failed());

    let elapsed = start.elapsed();
    assert!(
        elapsed < Duration::from_secs(300),
        "criterion 4 exceeded its 5-minute budget: {elapsed:?}"
    );
    pass(
        "criterion 4 (growth-sequence reproduction)",
        format!(
            "seed {GROWTH_SEED}: sizes {GROWTH_SIZES:?} with |Bd|=3, I_c=0 through step 6 \
             ({} bits at step 6); {conditioned} shallow seeds matched conditionally, {elapsed:.2?}",
            record.steps[6].max_bits
        ),
    );
}

#[test]
fn criterion_5_bound_suite() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC5);
    let mut records: Vec<OrbitRecord> = Vec::new();

    for set in degenerate_fixtures() {
        records.push(observed_orbit(&set, 6, 4_000));
    }
    for _ in 0..300 {
        let set = random_set(&mut rng, 4, 1 << 16);
        records.push(observed_orbit(&set, 4, 1 << 20));
    }
    for _ in 0..300 {
        let set = random_set(&mut rng, 5, 1 << 16);
        records.push(observed_orbit(&set, 20, 3_000));
    }
    for i in 0..60 {
        let n = 6 + (i % 10);
        let set = random_set(&mut rng, n, 1 << 16);
        records.push(observed_orbit(&set, 3, 1 << 20));
    }
    let growth = generate(&GenOptions::new(9, GROWTH_SEED)).unwrap();
    records.push(observed_orbit(&growth, 4, 1 << 20));

    let mut steps_checked = 0usize;
    for record in &records {
        assert!(!record.any_check_failed(), "bound verdict failed");
        // Re-verify the bounds directly from the recorded numbers rather
        // than trusting the verdicts alone.
        let s = &record.steps;
        for n in 1..s.len() {
            steps_checked += 1;
            if !s[n - 1].collinear {
                assert!(
                    s[n].cardinality as i64 <= 2 * s[n - 1].cardinality as i64 - 5,
                    "per-step upper bound"
                );
                assert!(s[n].boundary_count <= s[n - 1].boundary_count);
            }
            if s[..n].iter().all(|x| !x.collinear) {
                let bound = (BigInt::from(1) << n) * (BigInt::from(s[0].cardinality as i64) - 5) + 5;
                assert!(BigInt::from(s[n].cardinality) <= bound, "cumulative bound");
            }
            let clean_prefix = s[..n]
                .iter()
                .all(|x| !x.collinear && x.summary.as_ref().is_some_and(|y| y.i_c == 0));
            if clean_prefix {
                let two_n = BigInt::from(1) << n;
                let lower = &two_n * s[0].cardinality as i64
                    - (&two_n - 1) * (s[0].boundary_count as i64 + 2);
                assert!(
                    BigInt::from(s[n].cardinality) >= lower,
                    "conditional lower bound"
                );
            }
        }
    }
    pass(
        "criterion 5 (bound suite)",
        format!(
            "{} orbits, {steps_checked} steps re-verified: step upper, cumulative upper, \
             boundary monotone, conditional lower — zero violations, {:.2?}",
            records.len(),
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_6_equivariance() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC6);
    let rotations: Vec<(Rational, Rational)> = vec![
        (rat_int(1), rat_int(0)),
        (rat(3, 5), rat(4, 5)),
        (rat(5, 13), rat(12, 13)),
        (rat(8, 17), rat(15, 17)),
        (rat(20, 29), rat(21, 29)),
        (rat(7, 25), rat(24, 25)),
    ];
    let scales = [rat_int(1), rat_int(2), rat(1, 2), rat(3, 7), rat(5, 2)];
    let mut trials = 0usize;
    for i in 0..500usize {
        let (c, s) = rotations[i % rotations.len()].clone();
        let k = scales[i % scales.len()].clone();
        let reflect = i % 2 == 1;
        let u = if reflect {
            [[c.clone(), s.clone()], [s.clone(), -c.clone()]]
        } else {
            [[c.clone(), -s.clone()], [s.clone(), c.clone()]]
        };
        let t = Similarity::from_parts(
            k,
            u,
            (rat_int(rng.gen_range(-50..50)), rat(rng.gen_range(-99..99), 7)),
        )
        .expect("orthogonal by construction");
        let n = 3 + (i % 18);
        let set = random_set(&mut rng, n, 1 << 16);
        let lhs = vertex_set(&apply_similarity(&t, &set));
        let rhs = apply_similarity(&t, &vertex_set(&set));
        assert_eq!(lhs, rhs, "equivariance failed for transform {i}");
        trials += 1;
    }
    pass(
        "criterion 6 (similarity equivariance)",
        format!(
            "{trials} (t, P) pairs with Pythagorean rotations and reflections, exact equality, {:.2?}",
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_7_cell_angles() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC7);
    let mut sets: Vec<PointSet> = degenerate_fixtures()
        .into_iter()
        .filter(|s| s.len() >= 2)
        .collect();
    for _ in 0..30 {
        let n = rng.gen_range(2..=10);
        sets.push(random_set(&mut rng, n, 64));
    }

    let mut angles_checked = 0usize;
    for set in &sets {
        let vertices = vertex_set(set);
        let complex = reconstruct_cells(set);
        for cell in &complex.cells {
            let poly = &cell.polygon;
            let m = poly.len();
            for i in 0..m {
                let v = &poly[i].position;
                if !vertices.contains(v) {
                    continue;
                }
                let prev = &poly[(i + m - 1) % m].position;
                let next = &poly[(i + 1) % m].position;
                // Interior angle strictly below pi: a strict left turn on
                // the counterclockwise cell polygon.
                assert_eq!(
                    orientation(prev, v, next),
                    1,
                    "cell of {:?} has a straight or reflex angle at {v:?}",
                    cell.generator
                );
                angles_checked += 1;
            }
        }
    }
    assert!(angles_checked > 100, "check must not be vacuous");
    pass(
        "criterion 7 (cell convexity angles)",
        format!(
            "{} sets, {angles_checked} vertex angles strictly below pi, {:.2?}",
            sets.len(),
            start.elapsed()
        ),
    );
}

#[test]
fn criterion_8_cli_determinism() {
    use std::process::Command;
    let start = Instant::now();
    let bin = env!("CARGO_BIN_EXE_voriter");
    let dir = std::env::temp_dir().join(format!("voriter-acc-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let square = dir.join("square.txt");
    std::fs::write(&square, "0 0\n1 0\n1 1\n0 1\n").unwrap();
    let tri = dir.join("tri.txt");
    std::fs::write(&tri, "0 0\n4 0\n0 4\n1 1\n").unwrap();
    let sq = square.to_str().unwrap();
    let tr = tri.to_str().unwrap();

    let svg_a = dir.join("a.svg");
    let svg_b = dir.join("b.svg");
    let commands: Vec<Vec<String>> = vec![
        vec!["analyze".into(), sq.into()],
        vec!["analyze".into(), sq.into(), "--json".into()],
        vec!["iterate".into(), tr.into(), "-n".into(), "2".into()],
        vec!["orbit".into(), tr.into(), "--json".into(), "-".into()],
        vec![
            "random".into(),
            "--count".into(),
            "15".into(),
            "--seed".into(),
            "11".into(),
        ],
        vec![
            "period-search".into(),
            "--count".into(),
            "5".into(),
            "--trials".into(),
            "6".into(),
            "--kmax".into(),
            "3".into(),
            "--max-bits".into(),
            "1500".into(),
        ],
    ];
    let mut runs = 0usize;
    for args in &commands {
        let mut outputs = Vec::new();
        for _ in 0..2 {
            let out = Command::new(bin).args(args).output().unwrap();
            assert!(out.status.success(), "{args:?}");
            outputs.push(out.stdout);
            runs += 1;
        }
        assert_eq!(outputs[0], outputs[1], "stdout differs for {args:?}");
    }
    for (path, input) in [(&svg_a, sq), (&svg_b, sq)] {
        let out = Command::new(bin)
            .args([
                "render",
                input,
                "--svg",
                path.to_str().unwrap(),
                "--vertices",
                "--hull",
                "--overlay-next",
            ])
            .output()
            .unwrap();
        assert!(out.status.success());
        runs += 1;
    }
    assert_eq!(
        std::fs::read(&svg_a).unwrap(),
        std::fs::read(&svg_b).unwrap(),
        "SVG bytes differ between runs"
    );
    pass(
        "criterion 8 (CLI determinism)",
        format!(
            "{} command invocations byte-identical across repeats (including SVG), {:.2?}",
            runs,
            start.elapsed()
        ),
    );
}

/// Desk-scale periodic-point search: not a conjecture-resolving target, but
/// it must run to completion and report zero hits.
#[test]
fn desk_scale_period_search_completes_with_zero_hits() {
    let start = Instant::now();
    let caps = Caps {
        max_points: 1_000,
        max_bits: 2_500,
    };
    let trials = 10_000usize;
    let k_max = 8usize;
    let (mut died, mut exhausted, mut no_match, mut hits) = (0usize, 0usize, 0usize, 0usize);
    for trial in 0..trials {
        let set = generate(&GenOptions::new(5, trial as u64)).unwrap();
        match detect_period(&set, k_max, &caps) {
            PeriodScan::Found { k, witness } => {
                hits += 1;
                // Orbit-shift consistency would make this a publishable
                // discovery; record loudly.
                println!("period-{k} hit at trial {trial}: witness {witness:?}");
            }
            PeriodScan::OrbitDied { .. } => died += 1,
            PeriodScan::CapExceeded(_) => exhausted += 1,
            PeriodScan::NoMatch => no_match += 1,
        }
    }
    let elapsed = start.elapsed();
    assert_eq!(hits, 0, "a periodic point would be a new result; verify manually");
    assert_eq!(died + exhausted + no_match, trials);
    assert!(
        elapsed < Duration::from_secs(600),
        "desk-scale search exceeded its 10-minute budget: {elapsed:?}"
    );
    pass(
        "period-search desk scale",
        format!(
            "{trials} five-point trials, k_max {k_max}: 0 hits, {died} died, \
             {exhausted} cap-exhausted, {no_match} no-match, {elapsed:.2?}"
        ),
    );
}

/// Scans seeds for a 9-point set whose orbit keeps |Bd| = 3 and I_c = 0
/// through step 6. Run manually when re-pinning `GROWTH_SEED`:
/// `cargo test -p voriter --test acceptance find_growth_seed -- --ignored --nocapture`
#[test]
#[ignore]
fn find_growth_seed() {
    'seeds: for seed in 0..5_000u64 {
        let set = generate(&GenOptions::new(9, seed)).unwrap();
        let mut cur = set;
        let mut sizes = vec![9usize];
        for _ in 0..=5 {
            let summary = summarize(&cur).unwrap();
            if summary.boundary_count != 3 || summary.i_c != 0 {
                continue 'seeds;
            }
            cur = summary.vertex_points();
            sizes.push(cur.len());
        }
        if sizes == GROWTH_SIZES.to_vec() {
            println!("seed {seed}: sizes {sizes:?}");
            return;
        }
    }
    panic!("no seed found in range");
}
