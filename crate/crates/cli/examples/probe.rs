//! Development probe: growth-orbit timings and seed search for a 9-point
//! set with |Bd| = 3 and no cocircularity through deep iterations.

use std::time::Instant;

use voriter::gen::{generate, GenOptions};
use voriter_core::dynamics::{max_coordinate_bits, orbit, OrbitOptions};
use voriter_core::hull::classify;
use voriter_core::voronoi::{summarize, vertex_set};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mode = args.get(1).map(String::as_str).unwrap_or("time");

    match mode {
        "time" => {
            // Criterion-1 scale: summarize 50-point sets.
            let t0 = Instant::now();
            let mut count = 0;
            for seed in 0..50 {
                let set = generate(&GenOptions::new(50, seed)).unwrap();
                let s = summarize(&set).unwrap();
                count += s.vertex_count();
            }
            println!(
                "50x summarize(50 pts): {:?} total ({} vertices)",
                t0.elapsed(),
                count
            );

            // Growth orbit: steps with per-step timing.
            let seed: u64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(1);
            let set = generate(&GenOptions::new(9, seed)).unwrap();
            let mut cur = set;
            for n in 0..7 {
                let t = Instant::now();
                let summary = summarize(&cur).unwrap();
                let bits = max_coordinate_bits(&cur);
                println!(
                    "step {n}: |P|={} |Bd|={} I_c={} bits={} summarize {:?}",
                    cur.len(),
                    summary.boundary_count,
                    summary.i_c,
                    bits,
                    t.elapsed()
                );
                cur = summary.vertex_points();
                if cur.is_empty() {
                    break;
                }
            }
        }
        "search" => {
            let start: u64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(0);
            let end: u64 = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(start + 2000);
            'seeds: for seed in start..end {
                let set = generate(&GenOptions::new(9, seed)).unwrap();
                if classify(&set).boundary.len() != 3 {
                    continue;
                }
                // Cheap prefix check first: treat seeds failing early as dead.
                let mut cur = set.clone();
                let mut sizes = vec![9usize];
                for n in 0..=5 {
                    let summary = summarize(&cur).unwrap();
                    if summary.boundary_count != 3 || summary.i_c != 0 {
                        println!(
                            "seed {seed}: fails at step {n} (Bd={} Ic={})",
                            summary.boundary_count, summary.i_c
                        );
                        continue 'seeds;
                    }
                    cur = summary.vertex_points();
                    sizes.push(cur.len());
                }
                println!("seed {seed}: CANDIDATE sizes {:?}", sizes);
                if sizes == vec![9, 13, 21, 37, 69, 133, 261] {
                    println!("seed {seed}: MATCH");
                    // Check step-6 conditions too (Bd and I_c of the 261-point set).
                    let t = Instant::now();
                    let summary = summarize(&cur).unwrap();
                    println!(
                        "seed {seed}: step 6 |Bd|={} I_c={} |vit^7|={} bits={} ({:?})",
                        summary.boundary_count,
                        summary.i_c,
                        summary.vertex_count(),
                        max_coordinate_bits(&cur),
                        t.elapsed()
                    );
                    break;
                }
            }
        }
        "orbitfull" => {
            let seed: u64 = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(1);
            let set = generate(&GenOptions::new(9, seed)).unwrap();
            let t = Instant::now();
            let record = orbit(
                &set,
                &OrbitOptions {
                    max_steps: 6,
                    summarize_last: false,
                    ..Default::default()
                },
            )
            .unwrap();
            println!("orbit(6, no final summary): {:?}", t.elapsed());
            println!("sizes: {:?}", record.sizes());
            let t = Instant::now();
            let last = &record.steps.last().unwrap().set;
            let next = vertex_set(last);
            println!("vertex_set(step 6) -> {} pts: {:?}", next.len(), t.elapsed());
        }
        other => eprintln!("unknown probe mode {other}"),
    }
}
