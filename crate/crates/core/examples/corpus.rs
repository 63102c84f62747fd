//! Writes a small seeded corpus to a temporary directory and benchmarks it
//! the way `indsub bench` does.

use std::path::PathBuf;

use indsub::cli::{bench_corpus, ModeArg, RunArgs};
use indsub::generators::{chordal, gnp, planted_subdivision, uniform_lengths};

fn main() {
    let dir: PathBuf = std::env::temp_dir().join(format!("indsub-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    for seed in 0..4 {
        gnp(120, 0.05, seed).unwrap().write(dir.join(format!("gnp-{seed}.txt"))).unwrap();
        chordal(80, seed).0.write(dir.join(format!("chordal-{seed}.txt"))).unwrap();
        let (g, _) = planted_subdivision(3, &uniform_lengths(3, 4), 30, 0.1, seed).unwrap();
        g.write(dir.join(format!("planted-{seed}.txt"))).unwrap();
    }
    let run = RunArgs {
        t: 3,
        k: None,
        mode: ModeArg::Scaled,
        star_constant: None,
        log_exponent: None,
        density_margin: None,
        work_budget: None,
        force_pipeline: true,
        seed: 0,
    };
    let rows = bench_corpus(&dir, &run, 4).expect("readable corpus");
    for r in &rows {
        println!("{:<18} n={:<4} {:<15} {:<28} verified={}", r.name, r.n, r.outcome, r.detail, r.verified);
    }
    std::fs::remove_dir_all(&dir).ok();
}
