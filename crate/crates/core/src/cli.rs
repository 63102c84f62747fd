//! Command-line front end: `solve`, `verify`, `bench`, `oracle`, `gen`.
//!
//! Exit codes are the machine contract; prose goes to standard error.
//!
//! | command | codes |
//! |---|---|
//! | solve | 0 stable, 3 subdivision, 4 regime failure, 2 input error, 5 internal error |
//! | verify | 0 valid, 1 invalid, 2 I/O or schema error |
//! | bench | 0 all verified, 1 a verification failed, 2 unreadable input |
//! | oracle | 0 found, 1 none, 2 input error or limit |
//! | gen | 0 written, 2 bad arguments or I/O error |

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path as FsPath, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use crate::certificates::{
    verify_stable, verify_subdivision, Certificate, CertificateBody, ClaimedMode, DerivedConstants,
};
use crate::extractor::{extract, Certified, Outcome, Params};
use crate::generators::{self, ALGORITHM};
use crate::graph::Graph;
use crate::oracle;

#[derive(Parser, Debug)]
#[command(name = "indsub", version, about = "Stable set or induced K_t subdivision, with certificates")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run the dichotomy on a graph file and write the certificate.
    Solve(SolveArgs),
    /// Check a certificate against a graph.
    Verify {
        graph: PathBuf,
        cert: PathBuf,
    },
    /// Solve and verify every graph file in a directory.
    Bench(BenchArgs),
    /// Exact solvers for small graphs.
    #[command(subcommand)]
    Oracle(OracleCmd),
    /// Generate instances.
    #[command(subcommand)]
    Gen(GenCmd),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Faithful,
    Scaled,
}

#[derive(Args, Debug, Clone)]
pub struct RunArgs {
    #[arg(long, default_value_t = 3)]
    pub t: usize,
    /// Clique-number bound; defaults to the greedy colouring number.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long, value_enum, default_value_t = ModeArg::Faithful)]
    pub mode: ModeArg,
    #[arg(long)]
    pub star_constant: Option<f64>,
    #[arg(long)]
    pub log_exponent: Option<f64>,
    #[arg(long)]
    pub density_margin: Option<f64>,
    #[arg(long)]
    pub work_budget: Option<usize>,
    #[arg(long)]
    pub force_pipeline: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl RunArgs {
    /// Parameters for `g`. Faithful mode accepts no overrides.
    pub fn params(&self, g: &Graph) -> Result<Params, String> {
        let k = self
            .k
            .unwrap_or_else(|| generators::clique_upper_bound(g).max(1));
        let mut p = match self.mode {
            ModeArg::Faithful => {
                let overridden = self.star_constant.is_some()
                    || self.log_exponent.is_some()
                    || self.density_margin.is_some()
                    || self.work_budget.is_some()
                    || self.force_pipeline;
                if overridden {
                    return Err("faithful mode takes no scaled overrides; pass --mode scaled".into());
                }
                Params::faithful(self.t, k)
            }
            ModeArg::Scaled => {
                let mut p = Params::scaled(self.t, k).with_force_pipeline(self.force_pipeline);
                if let Some(x) = self.star_constant {
                    p.star_constant = x;
                }
                if let Some(x) = self.log_exponent {
                    p.log_exponent = x;
                }
                if let Some(x) = self.density_margin {
                    p.density_margin = x;
                }
                if let Some(x) = self.work_budget {
                    p.work_budget = x;
                }
                p
            }
        };
        p.rng_seed = self.seed;
        p.validate()?;
        Ok(p)
    }
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    pub graph: PathBuf,
    #[command(flatten)]
    pub run: RunArgs,
    /// Certificate JSON destination (standard output if absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Trace log destination.
    #[arg(long)]
    pub trace: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    pub corpus: PathBuf,
    #[command(flatten)]
    pub run: RunArgs,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Write `<file>.cert.json` and `<file>.trace` per instance here.
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    /// Maximum stable set (branch and bound).
    Mis {
        graph: PathBuf,
        #[arg(long, default_value_t = oracle::DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Induced cycle with length in [lo, hi].
    Cycle {
        graph: PathBuf,
        #[arg(long)]
        lo: usize,
        #[arg(long)]
        hi: usize,
    },
    /// Induced K_t subdivision with lengths in [lo, hi] (t = 3 or 4).
    Subdivision {
        graph: PathBuf,
        #[arg(long, default_value_t = 3)]
        t: usize,
        #[arg(long, default_value_t = 3)]
        lo: usize,
        #[arg(long)]
        hi: usize,
        #[arg(long, default_value_t = oracle::DEFAULT_SIZE_LIMIT)]
        size_limit: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenCmd {
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    Chordal {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    Planted {
        #[arg(long)]
        t: usize,
        /// One length for every pair.
        #[arg(long, conflicts_with = "lengths")]
        length: Option<usize>,
        /// Comma-separated lengths for the pairs in lexicographic order.
        #[arg(long, value_delimiter = ',')]
        lengths: Option<Vec<usize>>,
        #[arg(long, default_value_t = 0)]
        noise_n: usize,
        #[arg(long, default_value_t = 0.0)]
        noise_p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        /// Where to write the planted certificate.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn main_with<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            code
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Solve(a) => solve(&a),
        Command::Verify { graph, cert } => verify(&graph, &cert),
        Command::Bench(a) => bench(&a),
        Command::Oracle(o) => run_oracle(o),
        Command::Gen(gcmd) => gen(gcmd),
    }
}

fn read_graph(path: &FsPath) -> Result<Graph, String> {
    Graph::read(path).map_err(|e| format!("{}: {e}", path.display()))
}

/// Exit code for a finished extraction.
pub fn outcome_code(o: &Outcome) -> i32 {
    match o.result {
        Certified::Stable(_) => 0,
        Certified::Subdivision(_) => 3,
        Certified::RegimeFailure { .. } => 4,
    }
}

fn solve(a: &SolveArgs) -> i32 {
    let g = match read_graph(&a.graph) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let params = match a.run.params(&g) {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let out = match extract(&g, &params) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return if matches!(e, crate::extractor::ExtractError::EmptyGraph) { 2 } else { 5 };
        }
    };
    let json = out.certificate().to_json();
    if let Some(path) = &a.out {
        if let Err(e) = fs::write(path, format!("{json}\n")) {
            eprintln!("error: {}: {e}", path.display());
            return 2;
        }
    } else {
        println!("{json}");
    }
    if let Some(path) = &a.trace {
        if let Err(e) = fs::write(path, out.trace_text()) {
            eprintln!("error: {}: {e}", path.display());
            return 2;
        }
    }
    match &out.result {
        Certified::Stable(s) => eprintln!("stable set of size {}", s.size()),
        Certified::Subdivision(c) => eprintln!("induced subdivision of K_{} with lengths {:?}", c.t, c.lengths()),
        Certified::RegimeFailure { claim, reason, best } => eprintln!(
            "regime failure at claim {claim}: {reason}; best stable set has size {}",
            best.size()
        ),
    }
    outcome_code(&out)
}

/// Checks `cert` against `g`; `Ok(())` when valid, otherwise the reasons.
pub fn check_certificate(g: &Graph, cert: &Certificate) -> Result<String, Vec<String>> {
    if cert.n != g.n() {
        return Err(vec![format!("certificate is for n = {}, graph has {}", cert.n, g.n())]);
    }
    match &cert.body {
        CertificateBody::Stable(s) => {
            let p = cert.params;
            let consts = DerivedConstants::for_graph(g.n(), p.k, p.t, g.max_degree_all())
                .map_err(|e| vec![e.to_string()])?;
            let r = verify_stable(g, s, &consts).map_err(|e| vec![e.to_string()])?;
            if !r.is_stable {
                let (u, v) = r.witness_edge.unwrap_or_default();
                return Err(vec![format!("edge {u}-{v} inside the set")]);
            }
            if p.mode == ClaimedMode::Faithful && !r.meets_faithful_bound {
                return Err(vec![format!(
                    "size {} below the faithful bound {}",
                    r.size, r.bound
                )]);
            }
            Ok(format!("stable set of size {} (bound {:.6})", r.size, r.bound))
        }
        CertificateBody::Subdivision(c) => {
            let r = verify_subdivision(g, c);
            let mut errs: Vec<String> = r.violations.iter().map(ToString::to_string).collect();
            if cert.params.t != c.t {
                errs.push(format!("params say t = {} but {} branch vertices given", cert.params.t, c.t));
            }
            if errs.is_empty() {
                Ok(format!("induced subdivision of K_{} with lengths {:?}", c.t, c.lengths()))
            } else {
                Err(errs)
            }
        }
    }
}

fn verify(graph: &FsPath, cert: &FsPath) -> i32 {
    let g = match read_graph(graph) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let c = match Certificate::read(cert) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}: {e}", cert.display());
            return 2;
        }
    };
    match check_certificate(&g, &c) {
        Ok(msg) => {
            eprintln!("valid: {msg}");
            0
        }
        Err(errs) => {
            for e in errs {
                eprintln!("invalid: {e}");
            }
            1
        }
    }
}

/// One bench row.
#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub outcome: String,
    pub detail: String,
    pub millis: f64,
    pub deepest: String,
    pub verified: bool,
    pub cert_json: String,
    pub trace: String,
}

/// Solves and verifies one graph.
pub fn bench_one(name: &str, g: &Graph, run: &RunArgs) -> Result<BenchRow, String> {
    let params = run.params(g)?;
    let start = Instant::now();
    let out = extract(g, &params).map_err(|e| format!("{name}: {e}"))?;
    let millis = start.elapsed().as_secs_f64() * 1e3;
    let cert_json = out.certificate().to_json();
    let verified = Certificate::from_json(&cert_json)
        .ok()
        .is_some_and(|c| check_certificate(g, &c).is_ok());
    let (outcome, detail) = match &out.result {
        Certified::Stable(s) => ("stable", format!("size={}", s.size())),
        Certified::Subdivision(c) => ("subdivision", format!("lengths={:?}", c.lengths())),
        Certified::RegimeFailure { claim, best, .. } => {
            ("regime-failure", format!("claim={claim} best={}", best.size()))
        }
    };
    Ok(BenchRow {
        name: name.to_string(),
        n: g.n(),
        m: g.edge_count(),
        outcome: outcome.into(),
        detail,
        millis,
        deepest: out.deepest_claim().into(),
        verified,
        cert_json,
        trace: out.trace_text(),
    })
}

/// Graph files of `dir`, sorted by name.
pub fn corpus_files(dir: &FsPath) -> Result<Vec<PathBuf>, String> {
    let entries = fs::read_dir(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let mut files = Vec::new();
    for e in entries {
        let e = e.map_err(|e| format!("{}: {e}", dir.display()))?;
        let path = e.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Runs the corpus on `jobs` worker threads; rows come back in file order.
pub fn bench_corpus(dir: &FsPath, run: &RunArgs, jobs: usize) -> Result<Vec<BenchRow>, String> {
    let files = corpus_files(dir)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| {
        files
            .par_iter()
            .map(|path| {
                let g = read_graph(path)?;
                let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
                bench_one(&name, &g, run)
            })
            .collect()
    })
}

fn bench(a: &BenchArgs) -> i32 {
    let rows = match bench_corpus(&a.corpus, &a.run, a.jobs) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Some(dir) = &a.out_dir {
        if let Err(e) = fs::create_dir_all(dir) {
            eprintln!("error: {}: {e}", dir.display());
            return 2;
        }
        for r in &rows {
            let written = fs::write(dir.join(format!("{}.cert.json", r.name)), format!("{}\n", r.cert_json))
                .and_then(|_| fs::write(dir.join(format!("{}.trace", r.name)), &r.trace));
            if let Err(e) = written {
                eprintln!("error: {}: {e}", dir.display());
                return 2;
            }
        }
    }
    println!(
        "{:<24} {:>6} {:>8} {:<15} {:<28} {:>10} {:<9} verified",
        "instance", "n", "m", "outcome", "certificate", "ms", "deepest"
    );
    for r in &rows {
        println!(
            "{:<24} {:>6} {:>8} {:<15} {:<28} {:>10.2} {:<9} {}",
            r.name, r.n, r.m, r.outcome, r.detail, r.millis, r.deepest, r.verified
        );
    }
    let ok = rows.iter().filter(|r| r.verified).count();
    let rate = if rows.is_empty() { 100.0 } else { 100.0 * ok as f64 / rows.len() as f64 };
    println!("verified {ok}/{} ({rate:.2}%)", rows.len());
    if ok == rows.len() {
        0
    } else {
        for r in rows.iter().filter(|r| !r.verified) {
            eprintln!("error: certificate for {} failed verification", r.name);
        }
        1
    }
}

fn run_oracle(cmd: OracleCmd) -> i32 {
    let path = match &cmd {
        OracleCmd::Mis { graph, .. } | OracleCmd::Cycle { graph, .. } | OracleCmd::Subdivision { graph, .. } => graph,
    };
    let g = match read_graph(path) {
        Ok(g) => g,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    let result = match cmd {
        OracleCmd::Mis { budget, .. } => oracle::exact_max_stable(&g, budget).map(|s| {
            let cert = Certificate {
                n: g.n(),
                params: crate::certificates::CertParams {
                    k: generators::clique_upper_bound(&g).max(1),
                    t: 3,
                    d: g.max_degree_all().max(2),
                    mode: ClaimedMode::Oracle,
                },
                body: CertificateBody::Stable(crate::certificates::StableSetCertificate::new(
                    s.iter(),
                    ClaimedMode::Oracle,
                )),
            };
            Some(cert.to_json())
        }),
        OracleCmd::Cycle { lo, hi, .. } => oracle::induced_cycle_in_range(&g, lo, hi)
            .map(|c| c.map(|c| serde_json::to_string(&c).expect("serialises"))),
        OracleCmd::Subdivision { t, lo, hi, size_limit, .. } => {
            oracle::exhaustive_subdivision_search(&g, t, lo, hi, size_limit).map(|c| {
                c.map(|c| {
                    Certificate {
                        n: g.n(),
                        params: crate::certificates::CertParams {
                            k: generators::clique_upper_bound(&g).max(1),
                            t,
                            d: g.max_degree_all().max(2),
                            mode: ClaimedMode::Oracle,
                        },
                        body: CertificateBody::Subdivision(c),
                    }
                    .to_json()
                })
            })
        }
    };
    match result {
        Ok(Some(json)) => {
            println!("{json}");
            0
        }
        Ok(None) => {
            println!("null");
            eprintln!("none found");
            1
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn write_graph(g: &Graph, out: &FsPath) -> Result<(), String> {
    g.write(out).map_err(|e| format!("{}: {e}", out.display()))
}

fn gen(cmd: GenCmd) -> i32 {
    let res: Result<serde_json::Value, String> = (|| match cmd {
        GenCmd::Gnp { n, p, seed, out } => {
            let g = generators::gnp(n, p, seed).map_err(|e| e.to_string())?;
            write_graph(&g, &out)?;
            Ok(json!({"generator": "gnp", "algorithm": ALGORITHM, "n": n, "p": p, "seed": seed, "m": g.edge_count()}))
        }
        GenCmd::Chordal { n, seed, out } => {
            let (g, peo) = generators::chordal(n, seed);
            write_graph(&g, &out)?;
            Ok(json!({"generator": "chordal", "algorithm": ALGORITHM, "n": n, "seed": seed,
                      "m": g.edge_count(), "elimination_order": peo}))
        }
        GenCmd::Planted { t, length, lengths, noise_n, noise_p, seed, out, cert } => {
            let map: BTreeMap<(usize, usize), usize> = match (length, lengths) {
                (_, Some(ls)) => {
                    let pairs: Vec<(usize, usize)> =
                        (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).collect();
                    if ls.len() != pairs.len() {
                        return Err(format!("expected {} lengths, got {}", pairs.len(), ls.len()));
                    }
                    pairs.into_iter().zip(ls).collect()
                }
                (Some(l), None) => generators::uniform_lengths(t, l),
                (None, None) => generators::uniform_lengths(t, 3),
            };
            let (g, c) = generators::planted_subdivision(t, &map, noise_n, noise_p, seed).map_err(|e| e.to_string())?;
            write_graph(&g, &out)?;
            if let Some(path) = &cert {
                let cert = Certificate {
                    n: g.n(),
                    params: crate::certificates::CertParams {
                        k: generators::clique_upper_bound(&g).max(1),
                        t,
                        d: g.max_degree_all().max(2),
                        mode: ClaimedMode::Planted,
                    },
                    body: CertificateBody::Subdivision(c.clone()),
                };
                fs::write(path, format!("{}\n", cert.to_json())).map_err(|e| format!("{}: {e}", path.display()))?;
            }
            Ok(json!({"generator": "planted", "algorithm": ALGORITHM, "t": t, "n": g.n(), "m": g.edge_count(),
                      "noise_n": noise_n, "noise_p": noise_p, "seed": seed, "lengths": c.lengths()}))
        }
    })();
    match res {
        Ok(meta) => {
            println!("{meta}");
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
