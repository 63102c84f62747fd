//! Acceptance criteria. Each prints one PASS/FAIL line; any failure makes the
//! process exit nonzero. Run with `cargo test --release --test acceptance`.

mod common;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use indsub::certificates::{bound_main, ceil_bound, max_subdivision_len, Certificate, CertificateBody};
use indsub::cli::{bench_corpus, check_certificate, ModeArg, RunArgs};
use indsub::extractor::{sparsify_star_system, Exit, Extractor};
use indsub::generators::{gnp, planted_subdivision, star_system_instance, uniform_lengths};
use indsub::oracle::{exact_max_stable, exhaustive_subdivision_search, induced_cycle_in_range, DEFAULT_NODE_BUDGET};
use indsub::search::shortest_pair_path;
use indsub::{extract, verify_subdivision, Certified, Graph, Outcome, Params, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::Instance;

/// Wall-clock limit for the two-mode sweep.
const SWEEP_LIMIT: Duration = Duration::from_secs(600);
const SWEEP_SIZE: usize = 500;
const CHORDAL_COUNT: usize = 100;
const CHORDAL_MAX_N: usize = 40;
const SMALL_MAX_N: usize = 15;
const TIGHTNESS_COUNT: usize = 100;
const TIGHTNESS_MAX_N: usize = 30;
const SPARSIFY_COUNT: usize = 200;
const PATH_TRIPLES: usize = 500;
const PATH_MAX_N: usize = 12;
const PLANTED_COUNT: usize = 50;

struct Verdict {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn verdict(name: &'static str, failures: &[String], detail: String) -> Verdict {
    let mut detail = detail;
    for f in failures.iter().take(5) {
        write!(detail, "\n    {f}").unwrap();
    }
    if failures.len() > 5 {
        write!(detail, "\n    ... {} more", failures.len() - 5).unwrap();
    }
    Verdict { name, pass: failures.is_empty(), detail }
}

fn scaled_forced(t: usize, k: usize) -> Params {
    Params::scaled(t, k).with_force_pipeline(true)
}

/// Independent check of an outcome: JSON round trip, then the verifier.
/// Subdivisions must also respect the global length window.
fn verify_outcome(g: &Graph, o: &Outcome) -> Result<(), String> {
    let cert = Certificate::from_json(&o.certificate().to_json()).map_err(|e| e.to_string())?;
    check_certificate(g, &cert).map_err(|e| e.join("; "))?;
    if let CertificateBody::Subdivision(c) = &cert.body {
        let cap = max_subdivision_len(g.n());
        if c.min_len < 3 || c.max_len > cap {
            return Err(format!("length window [{}, {}] outside [3, {cap}]", c.min_len, c.max_len));
        }
        if c.lengths().iter().any(|&l| !(3..=cap).contains(&l)) {
            return Err(format!("lengths {:?} outside [3, {cap}]", c.lengths()));
        }
    }
    Ok(())
}

struct SweepRow {
    faithful: Result<Outcome, String>,
    scaled: Result<Outcome, String>,
}

fn run_sweep(corpus: &[Instance]) -> (Vec<SweepRow>, Duration) {
    let start = Instant::now();
    let rows = corpus
        .par_iter()
        .map(|inst| SweepRow {
            faithful: extract(&inst.graph, &Params::faithful(inst.t, inst.k)).map_err(|e| e.to_string()),
            scaled: extract(&inst.graph, &scaled_forced(inst.t, inst.k)).map_err(|e| e.to_string()),
        })
        .collect();
    (rows, start.elapsed())
}

fn soundness(corpus: &[Instance], rows: &[SweepRow], took: Duration) -> Verdict {
    let mut failures = Vec::new();
    let mut passed = 0;
    let mut tally = BTreeMap::new();
    for (inst, row) in corpus.iter().zip(rows) {
        for (mode, o) in [("faithful", &row.faithful), ("scaled", &row.scaled)] {
            let res = o.as_ref().map_err(Clone::clone).and_then(|o| {
                let kind = match o.result {
                    Certified::Stable(_) => "stable",
                    Certified::Subdivision(_) => "subdivision",
                    Certified::RegimeFailure { .. } => "regime-failure",
                };
                *tally.entry((mode, kind)).or_insert(0usize) += 1;
                verify_outcome(&inst.graph, o)
            });
            match res {
                Ok(()) => passed += 1,
                Err(e) => failures.push(format!("{} {mode}: {e}", inst.name)),
            }
        }
    }
    if corpus.len() != SWEEP_SIZE {
        failures.push(format!("corpus has {} instances, expected {SWEEP_SIZE}", corpus.len()));
    }
    if took > SWEEP_LIMIT {
        failures.push(format!("sweep took {:.1}s, limit {}s", took.as_secs_f64(), SWEEP_LIMIT.as_secs()));
    }
    let total = 2 * corpus.len();
    let tally: Vec<String> = tally.iter().map(|((m, k), c)| format!("{m}/{k}={c}")).collect();
    verdict(
        "soundness sweep",
        &failures,
        format!(
            "{passed}/{total} verified ({:.2}%), {:.1}s; {}",
            100.0 * passed as f64 / total as f64,
            took.as_secs_f64(),
            tally.join(" ")
        ),
    )
}

fn faithful_bound(corpus: &[Instance], rows: &[SweepRow]) -> Verdict {
    let mut failures = Vec::new();
    let mut min_slack = usize::MAX;
    for (inst, row) in corpus.iter().zip(rows) {
        let g = &inst.graph;
        let o = match &row.faithful {
            Ok(o) => o,
            Err(e) => {
                failures.push(format!("{}: {e}", inst.name));
                continue;
            }
        };
        let Certified::Stable(s) = &o.result else {
            failures.push(format!("{}: faithful run did not return a stable set", inst.name));
            continue;
        };
        let delta = g.max_degree_all();
        let bound = bound_main(g.n().max(2), inst.k, inst.t, delta.max(2).min(g.n().max(2))).unwrap();
        let need = ceil_bound(bound).max(1);
        let floor = g.n().div_ceil(delta + 1);
        if s.size() < need || s.size() < floor {
            failures.push(format!(
                "{}: size {} below max(ceil bound {need}, greedy floor {floor})",
                inst.name,
                s.size()
            ));
        }
        min_slack = min_slack.min(s.size().saturating_sub(floor));
    }
    verdict(
        "faithful-mode bound",
        &failures,
        format!("{} runs, all stable and above both floors; least slack over n/(Δ+1) = {min_slack}", corpus.len()),
    )
}

fn oracle_agreement() -> Verdict {
    let mut failures = Vec::new();

    // Chordal graphs contain no induced cycle of length four or more, hence
    // no subdivision with paths of length three or more.
    let chordal = common::chordal_instances(CHORDAL_COUNT, 8, CHORDAL_MAX_N, 21);
    let mut chordal_subs = 0;
    for inst in &chordal {
        let g = &inst.graph;
        let cycle = induced_cycle_in_range(g, 4, g.n().max(4)).unwrap();
        if let Some(c) = cycle {
            failures.push(format!("{}: generator produced induced cycle {c:?}", inst.name));
        }
        match extract(g, &scaled_forced(3, inst.k)) {
            Ok(o) => {
                if o.is_subdivision() {
                    chordal_subs += 1;
                    failures.push(format!("{}: subdivision reported on a chordal graph", inst.name));
                }
                if let Err(e) = verify_outcome(g, &o) {
                    failures.push(format!("{}: {e}", inst.name));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
    }

    // Small general graphs: every reported subdivision must be re-found by
    // exhaustive search, and the two oracles must agree with each other.
    let mut small: Vec<(String, Graph)> = Vec::new();
    let mut r = ChaCha8Rng::seed_from_u64(31);
    for i in 0..80 {
        let n = r.gen_range(6..=SMALL_MAX_N);
        let p = [0.15, 0.25, 0.35, 0.5][i % 4];
        small.push((format!("gnp-small-{i}-n{n}"), gnp(n, p, 3100 + i as u64).unwrap()));
    }
    for i in 0..20 {
        let noise = r.gen_range(0..=6);
        let (g, _) = planted_subdivision(3, &uniform_lengths(3, 3), noise, 0.2, 3200 + i).unwrap();
        small.push((format!("planted-small-{i}-noise{noise}"), g));
    }
    let mut emitted = 0;
    let mut with_witness = 0;
    for (name, g) in &small {
        let hi = max_subdivision_len(g.n());
        let exhaustive = exhaustive_subdivision_search(g, 3, 3, hi, SMALL_MAX_N).unwrap();
        let cycle = induced_cycle_in_range(g, 9, 3 * hi).unwrap();
        if exhaustive.is_some() != cycle.is_some() {
            failures.push(format!("{name}: exhaustive search and cycle oracle disagree"));
        }
        if exhaustive.is_some() {
            with_witness += 1;
        }
        let k = indsub::generators::clique_upper_bound(g).max(1);
        match extract(g, &scaled_forced(3, k)) {
            Ok(o) => {
                if let Err(e) = verify_outcome(g, &o) {
                    failures.push(format!("{name}: {e}"));
                }
                if o.is_subdivision() {
                    emitted += 1;
                    if exhaustive.is_none() {
                        failures.push(format!("{name}: subdivision not confirmed by exhaustive search"));
                    }
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    verdict(
        "t=3 oracle agreement",
        &failures,
        format!(
            "{} chordal (n <= {CHORDAL_MAX_N}): {chordal_subs} subdivisions; {} small graphs (n <= {SMALL_MAX_N}): \
             {emitted} subdivisions emitted, all re-found; {with_witness} contain one per both oracles",
            chordal.len(),
            small.len()
        ),
    )
}

fn oracle_tightness() -> Verdict {
    let mut failures = Vec::new();
    let mut r = ChaCha8Rng::seed_from_u64(41);
    let mut cases: Vec<(String, Graph, bool)> = Vec::new();
    for _ in 0..10 {
        let n = r.gen_range(1..=TIGHTNESS_MAX_N);
        cases.push((format!("empty-{n}"), Graph::empty(n), true));
    }
    for i in 0..10 {
        let pairs = r.gen_range(1..=TIGHTNESS_MAX_N / 2);
        let isolated = r.gen_range(0..=TIGHTNESS_MAX_N - 2 * pairs);
        let g = Graph::new(2 * pairs + isolated, (0..pairs).map(|j| (2 * j, 2 * j + 1))).unwrap();
        cases.push((format!("matching-{i}-{pairs}+{isolated}"), g, true));
    }
    for i in 0..TIGHTNESS_COUNT - 20 {
        let n = r.gen_range(4..=TIGHTNESS_MAX_N);
        let p = [0.1, 0.2, 0.3, 0.5, 0.7][i % 5];
        cases.push((format!("gnp-{i}-n{n}-p{p}"), gnp(n, p, 4100 + i as u64).unwrap(), false));
    }
    let mut exact_hits = 0;
    let mut runs = 0;
    for (name, g, tight) in &cases {
        let alpha = exact_max_stable(g, DEFAULT_NODE_BUDGET).unwrap().len();
        let k = indsub::generators::clique_upper_bound(g).max(1);
        for t in [3, 4] {
            for params in [Params::faithful(t, k), scaled_forced(t, k)] {
                runs += 1;
                let o = match extract(g, &params) {
                    Ok(o) => o,
                    Err(e) => {
                        failures.push(format!("{name}: {e}"));
                        continue;
                    }
                };
                let size = match &o.result {
                    Certified::Stable(s) => s.size(),
                    Certified::RegimeFailure { best, .. } => best.size(),
                    Certified::Subdivision(_) => continue,
                };
                if size > alpha {
                    failures.push(format!("{name}: size {size} exceeds alpha {alpha}"));
                }
                if *tight && size != alpha {
                    failures.push(format!("{name}: size {size}, alpha {alpha}"));
                }
                if size == alpha {
                    exact_hits += 1;
                }
            }
        }
    }
    verdict(
        "oracle tightness",
        &failures,
        format!("{} graphs, {runs} runs; {exact_hits} stable sets of maximum size", cases.len()),
    )
}

fn sparsify_halving(failures: &mut Vec<String>) -> String {
    let mut r = ChaCha8Rng::seed_from_u64(51);
    let mut checked = 0;
    for i in 0..SPARSIFY_COUNT {
        let p = r.gen_range(2..=5);
        let sizes: Vec<usize> = (0..p).map(|_| r.gen_range(4..=40)).collect();
        let q = [0.05, 0.1, 0.2, 0.4, 0.8][i % 5];
        let (g, sys) = star_system_instance(&sizes, q / (2 * p) as f64, 5100 + i as u64);
        let semi = recount(&g, &sys.leaves, false);
        if semi > q / (2 * p) as f64 {
            failures.push(format!("star instance {i}: semi-sparsity {semi} above {}", q / (2 * p) as f64));
            continue;
        }
        let out = sparsify_star_system(&g, &sys, q);
        for (j, (b, c)) in sys.leaves.iter().zip(&out.leaves).enumerate() {
            if 2 * c.len() < b.len() || !c.is_subset(b) {
                failures.push(format!("star instance {i}: leaf set {j} went from {} to {}", b.len(), c.len()));
            }
        }
        let s = recount(&g, &out.leaves, true);
        if s > q {
            failures.push(format!("star instance {i}: sparsity {s} above {q}"));
        }
        checked += 1;
    }
    format!("halving on {checked} star systems")
}

/// Largest fraction of `C_i` seen by one vertex of a later set (`both` also
/// counts earlier sets), by direct pairwise count.
fn recount(g: &Graph, sets: &[VertexSet], both: bool) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, ci) in sets.iter().enumerate() {
        if ci.is_empty() {
            continue;
        }
        for (j, cj) in sets.iter().enumerate() {
            if j == i || (!both && j < i) {
                continue;
            }
            for v in cj.iter() {
                let hits = ci.iter().filter(|&u| g.adjacent(u, v)).count();
                worst = worst.max(hits as f64 / ci.len() as f64);
            }
        }
    }
    worst
}

/// Star systems built by the extractor on random graphs, before and after
/// sparsification, checked by the pairwise battery.
fn star_battery(failures: &mut Vec<String>) -> String {
    let mut built = 0;
    let mut stuck = 0;
    for i in 0..60u64 {
        let n = [24, 48, 96][i as usize % 3];
        let p = [0.1, 0.2, 0.4][(i as usize / 3) % 3];
        let t = 3 + (i as usize % 2);
        let g = gnp(n, p, 6100 + i).unwrap();
        let k = indsub::generators::clique_upper_bound(&g).max(2);
        let params = scaled_forced(t, k);
        let mut ex = Extractor::new(&g, params.clone()).unwrap();
        let f = ex.frame(&g.all(), k, 0);
        match ex.build_star_system(&f, t, params.semi_sparsity()) {
            Ok(sys) => {
                built += 1;
                let mut problems = battery(&g, &sys.centers, &sys.leaves);
                let out = sparsify_star_system(&g, &sys, params.final_sparsity());
                problems.extend(battery(&g, &out.centers, &out.leaves));
                for p in problems {
                    failures.push(format!("star battery gnp {i}: {p}"));
                }
            }
            Err(Exit::Stuck { .. }) | Err(Exit::Stable(_)) | Err(Exit::Subdivision(_)) => stuck += 1,
            Err(Exit::Fault(e)) => failures.push(format!("star battery gnp {i}: {e}")),
        }
    }
    format!("battery on {built} built systems ({stuck} builds ended early)")
}

fn battery(g: &Graph, centers: &[usize], leaves: &[VertexSet]) -> Vec<String> {
    let mut out = Vec::new();
    for (i, &a) in centers.iter().enumerate() {
        for &b in &centers[i + 1..] {
            if a == b || g.adjacent(a, b) {
                out.push(format!("centres {a} and {b} clash"));
            }
        }
        for (j, l) in leaves.iter().enumerate() {
            for v in l.iter() {
                if centers.contains(&v) {
                    out.push(format!("leaf {v} is a centre"));
                }
                if (i == j) != g.adjacent(a, v) {
                    out.push(format!("centre {a} vs leaf {v} of set {j}"));
                }
            }
        }
    }
    for (i, l) in leaves.iter().enumerate() {
        let vs: Vec<usize> = l.iter().collect();
        for (x, &u) in vs.iter().enumerate() {
            for &v in &vs[x + 1..] {
                if g.adjacent(u, v) {
                    out.push(format!("leaf set {i} has edge {u}-{v}"));
                }
            }
            for m in &leaves[i + 1..] {
                if m.contains(u) {
                    out.push(format!("leaf {u} shared"));
                }
            }
        }
    }
    out
}

fn path_triples(failures: &mut Vec<String>) -> String {
    let mut r = ChaCha8Rng::seed_from_u64(61);
    let mut found = 0;
    for i in 0..PATH_TRIPLES {
        let n = r.gen_range(2..=PATH_MAX_N);
        let g = gnp(n, r.gen_range(0.1..0.6), 7100 + i as u64).unwrap();
        let mut from = VertexSet::empty(n);
        let mut to = VertexSet::empty(n);
        let mut allowed = VertexSet::empty(n);
        for v in 0..n {
            let _ = match r.gen_range(0..6) {
                0 => from.insert(v),
                1 => to.insert(v),
                2..=4 => allowed.insert(v),
                _ => false,
            };
        }
        let got = shortest_pair_path(&g, &from, &to, &allowed).unwrap();
        let best = brute_shortest(&g, &from, &to, &allowed);
        match (&got, best) {
            (None, None) => {}
            (Some(p), Some(len)) => {
                found += 1;
                let vs = &p.vertices;
                let ends_ok = vs.len() >= 2 && from.contains(vs[0]) && to.contains(*vs.last().unwrap());
                let interior_ok = vs[1..vs.len() - 1]
                    .iter()
                    .all(|&v| allowed.contains(v) && !from.contains(v) && !to.contains(v));
                let mut induced = true;
                for a in 0..vs.len() {
                    for b in a + 1..vs.len() {
                        if vs[a] == vs[b] || g.adjacent(vs[a], vs[b]) != (b == a + 1) {
                            induced = false;
                        }
                    }
                }
                if !(ends_ok && interior_ok && induced) {
                    failures.push(format!("triple {i}: path {vs:?} fails the scan"));
                }
                if p.length() != len {
                    failures.push(format!("triple {i}: length {} but shortest is {len}", p.length()));
                }
            }
            (got, best) => failures.push(format!("triple {i}: got {got:?}, brute force {best:?}")),
        }
    }
    format!("{PATH_TRIPLES} path triples ({found} with a path)")
}

/// Minimum edge count of a path from `from` to `to` with interior in
/// `allowed ∖ (from ∪ to)`, by exhaustive simple-path enumeration.
fn brute_shortest(g: &Graph, from: &VertexSet, to: &VertexSet, allowed: &VertexSet) -> Option<usize> {
    fn dfs(g: &Graph, v: usize, len: usize, seen: &mut Vec<bool>, ok: &dyn Fn(usize) -> bool, to: &VertexSet, best: &mut Option<usize>) {
        for &w in g.neighbors(v) {
            if to.contains(w) {
                let l = len + 1;
                if best.is_none_or(|b| l < b) {
                    *best = Some(l);
                }
            } else if !seen[w] && ok(w) {
                seen[w] = true;
                dfs(g, w, len + 1, seen, ok, to, best);
                seen[w] = false;
            }
        }
    }
    let ok = |v: usize| allowed.contains(v) && !from.contains(v) && !to.contains(v);
    let mut best = None;
    for s in from.iter() {
        let mut seen = vec![false; g.n()];
        seen[s] = true;
        dfs(g, s, 0, &mut seen, &ok, to, &mut best);
    }
    best
}

fn claim_level(rows: &[SweepRow]) -> Verdict {
    let mut failures = Vec::new();
    let a = sparsify_halving(&mut failures);
    let b = star_battery(&mut failures);
    let c = path_triples(&mut failures);
    let mut steps = 0;
    for row in rows {
        if let Ok(o) = &row.faithful {
            for s in o.growth.iter().filter(|s| s.faithful) {
                steps += 1;
                if !s.meets_growth() {
                    failures.push(format!("faithful growth step {} -> {} at radius {}", s.before, s.after, s.radius));
                }
            }
        }
    }
    verdict(
        "claim-level suite",
        &failures,
        format!("{a}; {b}; {c}; {steps} accepted faithful growth steps audited"),
    )
}

fn planted_recovery(corpus: &[Instance], rows: &[SweepRow]) -> Verdict {
    let mut failures = Vec::new();
    let mut planted = 0;
    let mut subs = 0;
    let mut stables = 0;
    for (inst, row) in corpus.iter().zip(rows) {
        let Some(c) = &inst.planted else { continue };
        planted += 1;
        let report = verify_subdivision(&inst.graph, c);
        if !report.is_valid() {
            failures.push(format!("{}: planted certificate rejected: {:?}", inst.name, report.violations));
        }
        if !(3..=4).contains(&inst.t) {
            failures.push(format!("{}: t = {}", inst.name, inst.t));
        }
        match &row.scaled {
            Ok(o) => {
                match &o.result {
                    Certified::Stable(_) => stables += 1,
                    Certified::Subdivision(_) => subs += 1,
                    Certified::RegimeFailure { claim, reason, .. } => {
                        failures.push(format!("{}: regime failure at claim {claim}: {reason}", inst.name))
                    }
                }
                if let Err(e) = verify_outcome(&inst.graph, o) {
                    failures.push(format!("{}: {e}", inst.name));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", inst.name)),
        }
    }
    if planted != PLANTED_COUNT {
        failures.push(format!("{planted} planted instances, expected {PLANTED_COUNT}"));
    }
    verdict(
        "planted recovery",
        &failures,
        format!("{planted} instances: {subs} subdivisions, {stables} stable sets; planted certificates all verify"),
    )
}

fn determinism(corpus: &[Instance], rows: &[SweepRow]) -> Verdict {
    let mut failures = Vec::new();

    // Regenerating the corpus gives the same graphs.
    let again = common::sweep_corpus();
    let same_graphs = corpus.iter().zip(&again).all(|(a, b)| a.graph == b.graph && a.planted == b.planted);
    if !same_graphs {
        failures.push("regenerated corpus differs".into());
    }

    // Repeated extraction on a slice of the corpus gives identical outcomes.
    let mut repeated = 0;
    for (inst, row) in corpus.iter().zip(rows).step_by(10) {
        let again = extract(&inst.graph, &scaled_forced(inst.t, inst.k)).map_err(|e| e.to_string());
        if again != row.scaled {
            failures.push(format!("{}: second run differs", inst.name));
        }
        repeated += 1;
    }

    // Bench output is byte-identical across worker counts.
    let dir = tempfile::tempdir().unwrap();
    for inst in corpus.iter().step_by(12).filter(|i| i.graph.n() <= 512) {
        inst.graph.write(dir.path().join(format!("{}.txt", inst.name))).unwrap();
    }
    let mut benched = 0;
    for mode in [ModeArg::Faithful, ModeArg::Scaled] {
        let run = RunArgs {
            t: 3,
            k: None,
            mode,
            star_constant: None,
            log_exponent: None,
            density_margin: None,
            work_budget: None,
            force_pipeline: mode == ModeArg::Scaled,
            seed: 7,
        };
        let one = bench_corpus(dir.path(), &run, 1).unwrap();
        let four = bench_corpus(dir.path(), &run, 4).unwrap();
        benched = one.len();
        if one.len() != four.len() {
            failures.push(format!("{mode:?}: row counts differ"));
        }
        for (a, b) in one.iter().zip(&four) {
            if a.name != b.name || a.cert_json != b.cert_json || a.trace != b.trace {
                failures.push(format!("{mode:?} {}: output differs between --jobs 1 and --jobs 4", a.name));
            }
        }
    }
    verdict(
        "determinism",
        &failures,
        format!("{repeated} repeated extractions; {benched} bench files x 2 modes identical across --jobs 1/4"),
    )
}

fn main() {
    let corpus = common::sweep_corpus();
    let (rows, took) = run_sweep(&corpus);
    let verdicts = [
        soundness(&corpus, &rows, took),
        faithful_bound(&corpus, &rows),
        oracle_agreement(),
        oracle_tightness(),
        claim_level(&rows),
        planted_recovery(&corpus, &rows),
        determinism(&corpus, &rows),
    ];
    let mut failed = 0;
    for v in &verdicts {
        println!("{} {}: {}", if v.pass { "PASS" } else { "FAIL" }, v.name, v.detail);
        failed += usize::from(!v.pass);
    }
    println!("{} of {} criteria passed", verdicts.len() - failed, verdicts.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
