//! The recursive dichotomy: given `G`, `t` and a clique bound `k`, return a
//! verified stable set or a verified induced subdivision of `K_t`.
//!
//! The recursion follows the inductive argument step by step. Wherever the
//! argument says "otherwise the bound would already hold", the code returns
//! the stable set it has in hand; every completed construction returns a
//! subdivision. Recursive calls run on vertex-set views of the one host graph,
//! so whatever they produce is valid verbatim at the top level.
//!
//! Control flow inside a level uses [`Flow`]: `Ok` continues, while
//! [`Exit`] carries an early answer (or a failure) up through the helpers.

mod greedy;
mod params;
mod routing;
mod star;
mod trace;

pub use greedy::{greedy_stable, matching_stable};
pub use params::{Mode, Params};
pub use routing::{Expansion, GrowthStep, LayerState, ObstructionContext};
pub use star::{sparsify_star_system, StarSystem};
pub use trace::{claim_rank, deepest_claim, render as render_trace, TraceRecord};

use std::collections::HashSet;

use thiserror::Error;

use crate::certificates::{
    ceil_bound, max_subdivision_len, ClaimedMode, CertParams, Certificate, CertificateBody, StableSetCertificate,
    SubdivisionCertificate,
};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Length of the centre prefix a stuck top-level attempt rules out.
const DEAD_PREFIX: usize = 2;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExtractError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("recursion depth limit {0} exceeded")]
    DepthLimit(usize),
    #[error("claim {claim} failed: {detail}")]
    Assertion { claim: &'static str, detail: String },
    #[error("assembled subdivision rejected by the verifier: {0:?}")]
    VerifierRejected(Vec<String>),
}

/// Early exit from a level of the recursion.
#[derive(Debug, Clone)]
pub enum Exit {
    /// This level's answer is the given stable set.
    Stable(VertexSet),
    /// A certified induced subdivision; bubbles to the top unchanged.
    Subdivision(SubdivisionCertificate),
    /// Scaled mode only: the construction cannot continue at this level.
    Stuck { claim: &'static str, reason: String },
    Fault(ExtractError),
}

pub type Flow<T> = Result<T, Exit>;

/// The quantities one level of the recursion works with.
#[derive(Clone, Debug)]
pub struct Frame {
    pub view: VertexSet,
    pub n: usize,
    pub k: usize,
    /// `max(Δ(view), 2)`.
    pub d: usize,
    pub delta: usize,
    /// Smallest-id vertex of maximum degree.
    pub max_vertex: Option<usize>,
    pub depth: usize,
    pub log_n: f64,
    pub log_d: f64,
    pub bound: f64,
    /// `ceil(bound)`.
    pub target: usize,
}

/// Result of a run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certified {
    Stable(StableSetCertificate),
    Subdivision(SubdivisionCertificate),
    /// Scaled mode could not complete the construction; carries the largest
    /// verified stable set seen during the run.
    RegimeFailure {
        claim: &'static str,
        reason: String,
        best: StableSetCertificate,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub result: Certified,
    pub trace: Vec<TraceRecord>,
    /// Every layer-growth step taken, in order.
    pub growth: Vec<GrowthStep>,
    /// Deepest recursion level reached.
    pub max_depth: usize,
    pub n: usize,
    pub k: usize,
    pub t: usize,
    /// `max(Δ(G), 2)` of the input graph.
    pub d: usize,
    pub mode: Mode,
}

impl Outcome {
    pub fn certificate(&self) -> Certificate {
        let (mode, body) = match &self.result {
            Certified::Stable(s) => (s.claimed_mode, CertificateBody::Stable(s.clone())),
            Certified::Subdivision(c) => (
                match self.mode {
                    Mode::Faithful => ClaimedMode::Faithful,
                    Mode::Scaled => ClaimedMode::Scaled,
                },
                CertificateBody::Subdivision(c.clone()),
            ),
            Certified::RegimeFailure { best, .. } => {
                (best.claimed_mode, CertificateBody::Stable(best.clone()))
            }
        };
        Certificate {
            n: self.n,
            params: CertParams {
                k: self.k,
                t: self.t,
                d: self.d,
                mode,
            },
            body,
        }
    }

    pub fn trace_text(&self) -> String {
        render_trace(&self.trace)
    }

    pub fn deepest_claim(&self) -> &'static str {
        deepest_claim(&self.trace)
    }

    pub fn is_stable(&self) -> bool {
        matches!(self.result, Certified::Stable(_))
    }

    pub fn is_subdivision(&self) -> bool {
        matches!(self.result, Certified::Subdivision(_))
    }
}

/// Runs the dichotomy on `g`.
///
/// The recursion can nest deeply, so it runs on a helper thread with a
/// generous stack.
pub fn extract(g: &Graph, params: &Params) -> Result<Outcome, ExtractError> {
    let ex = Extractor::new(g, params.clone())?;
    std::thread::scope(|s| {
        std::thread::Builder::new()
            .stack_size(512 << 20)
            .spawn_scoped(s, move || ex.run())
            .expect("spawn extraction thread")
            .join()
            .expect("extraction thread panicked")
    })
}

/// Mutable state of one run: the host graph, parameters, trace and the
/// running best stable set.
pub struct Extractor<'g> {
    g: &'g Graph,
    params: Params,
    trace: Vec<TraceRecord>,
    calls: usize,
    max_depth: usize,
    best: Option<VertexSet>,
    growth: Vec<GrowthStep>,
    /// Top-level vertices no longer eligible as the first centre.
    /// Top-level centre prefixes already known to fail.
    dead: HashSet<Vec<usize>>,
    /// Centres accepted so far by the current top-level attempt.
    prefix: Vec<usize>,
}

impl<'g> Extractor<'g> {
    pub fn new(g: &'g Graph, params: Params) -> Result<Self, ExtractError> {
        params.validate().map_err(ExtractError::InvalidParams)?;
        if g.n() == 0 {
            return Err(ExtractError::EmptyGraph);
        }
        Ok(Extractor {
            g,
            params,
            trace: Vec::new(),
            calls: 0,
            max_depth: 0,
            best: None,
            growth: Vec::new(),
            dead: HashSet::new(),
            prefix: Vec::new(),
        })
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn trace(&self) -> &[TraceRecord] {
        &self.trace
    }

    /// Deepest recursion level reached so far.
    pub fn max_depth(&self) -> usize {
        self.max_depth
    }

    pub fn frame(&self, view: &VertexSet, k: usize, depth: usize) -> Frame {
        let n = view.len();
        let (max_vertex, delta) = match self.g.max_degree(view) {
            Ok((v, deg)) => (Some(v), deg),
            Err(_) => (None, 0),
        };
        let d = delta.max(2);
        let bound = self.params.bound(n, k, d);
        Frame {
            view: view.clone(),
            n,
            k,
            d,
            delta,
            max_vertex,
            depth,
            log_n: (n.max(1) as f64).log2(),
            log_d: (d as f64).log2(),
            bound,
            target: ceil_bound(bound),
        }
    }

    pub fn run(mut self) -> Result<Outcome, ExtractError> {
        let g = self.g;
        let all = g.all();
        let d = g.max_degree_all().max(2);
        let res = self.solve(&all, self.params.k, 0);
        let mode = match self.params.mode {
            Mode::Faithful => ClaimedMode::Faithful,
            Mode::Scaled => ClaimedMode::Scaled,
        };
        let result = match res {
            Ok(s) | Err(Exit::Stable(s)) => {
                assert!(g.is_stable(&s), "extractor produced a non-stable set");
                Certified::Stable(StableSetCertificate::new(s.iter(), mode))
            }
            Err(Exit::Subdivision(c)) => Certified::Subdivision(c),
            Err(Exit::Stuck { claim, reason }) => {
                let best = self
                    .best
                    .take()
                    .unwrap_or_else(|| greedy_stable(g, &all));
                Certified::RegimeFailure {
                    claim,
                    reason,
                    best: StableSetCertificate::new(best.iter(), ClaimedMode::BestEffort),
                }
            }
            Err(Exit::Fault(e)) => return Err(e),
        };
        Ok(Outcome {
            result,
            trace: self.trace,
            growth: self.growth,
            max_depth: self.max_depth,
            n: g.n(),
            k: self.params.k,
            t: self.params.t,
            d,
            mode: self.params.mode,
        })
    }

    pub(crate) fn note(&mut self, f: &Frame, claim: &'static str, branch: &'static str, set: usize) {
        self.trace.push(TraceRecord {
            claim,
            branch,
            set,
            depth: f.depth,
            n: f.n,
        });
    }

    fn note_raw(&mut self, depth: usize, n: usize, claim: &'static str, branch: &'static str, set: usize) {
        self.trace.push(TraceRecord {
            claim,
            branch,
            set,
            depth,
            n,
        });
    }

    pub(crate) fn record_growth(&mut self, step: GrowthStep) {
        self.growth.push(step);
    }

    /// Records a stable set as a candidate for the regime-failure payload.
    pub(crate) fn offer(&mut self, s: &VertexSet) {
        debug_assert!(self.g.is_stable(s));
        if self.best.as_ref().is_none_or(|b| s.len() > b.len()) {
            self.best = Some(s.clone());
        }
    }

    /// A claim that holds under faithful constants. Faithful runs abort when
    /// it fails; scaled runs note the miss and carry on.
    pub(crate) fn require(
        &mut self,
        f: &Frame,
        ok: bool,
        claim: &'static str,
        detail: impl FnOnce() -> String,
    ) -> Flow<()> {
        if ok {
            return Ok(());
        }
        match self.params.mode {
            Mode::Faithful => Err(Exit::Fault(ExtractError::Assertion {
                claim,
                detail: detail(),
            })),
            Mode::Scaled => {
                self.note(f, claim, "assert-miss", 0);
                Ok(())
            }
        }
    }

    /// The construction cannot proceed: a failed claim in faithful mode,
    /// a regime failure in scaled mode.
    pub(crate) fn stuck(&self, claim: &'static str, reason: impl Into<String>) -> Exit {
        let reason = reason.into();
        match self.params.mode {
            Mode::Faithful => Exit::Fault(ExtractError::Assertion {
                claim,
                detail: reason,
            }),
            Mode::Scaled => Exit::Stuck { claim, reason },
        }
    }

    /// Internal invariant; violated only by a bug, in either mode.
    pub(crate) fn invariant(&self, ok: bool, claim: &'static str, detail: impl FnOnce() -> String) -> Flow<()> {
        if ok {
            Ok(())
        } else {
            Err(Exit::Fault(ExtractError::Assertion {
                claim,
                detail: detail(),
            }))
        }
    }

    /// Solves an induced subgraph one level down. A scaled-mode failure there
    /// is answered with that view's greedy set instead of aborting the parent.
    pub fn sub_solve(&mut self, view: &VertexSet, k: usize, depth: usize) -> Flow<VertexSet> {
        match self.solve(view, k, depth) {
            Err(Exit::Stuck { .. }) if depth > 0 => {
                let s = greedy_stable(self.g, view);
                self.note_raw(depth, view.len(), "base", "stuck-fallback", s.len());
                self.offer(&s);
                Ok(s)
            }
            other => other,
        }
    }

    /// One level of the recursion on `G[view]` with clique bound `k`.
    pub fn solve(&mut self, view: &VertexSet, k: usize, depth: usize) -> Flow<VertexSet> {
        match self.solve_level(view, k, depth) {
            Ok(s) | Err(Exit::Stable(s)) => Ok(s),
            Err(e) => Err(e),
        }
    }

    fn solve_level(&mut self, view: &VertexSet, k: usize, depth: usize) -> Flow<VertexSet> {
        if depth > self.params.recursion_depth_limit {
            return Err(Exit::Fault(ExtractError::DepthLimit(
                self.params.recursion_depth_limit,
            )));
        }
        self.calls += 1;
        self.max_depth = self.max_depth.max(depth);
        let g = self.g;
        let n = view.len();
        if n == 0 {
            return Ok(VertexSet::empty(g.n()));
        }
        let scaled = !self.params.is_faithful();
        if scaled && depth > 0 && self.calls > self.params.work_budget {
            let s = greedy_stable(g, view);
            self.note_raw(depth, n, "budget", "greedy", s.len());
            self.offer(&s);
            return Ok(s);
        }
        if k == 1 {
            let s = greedy_stable(g, view);
            self.note_raw(depth, n, "base", "k1", s.len());
            self.offer(&s);
            return Ok(s);
        }
        if n <= 2 || max_subdivision_len(g.n()) < 3 {
            let s = greedy_stable(g, view);
            self.note_raw(depth, n, "base", "tiny", s.len());
            self.offer(&s);
            return Ok(s);
        }
        let f = self.frame(view, k, depth);
        if f.delta <= 1 {
            let s = matching_stable(g, view);
            self.note(&f, "base", "max-degree-1", s.len());
            self.offer(&s);
            return Ok(s);
        }

        let forced = scaled && self.params.force_pipeline && depth == 0;
        if forced {
            self.note(&f, "greedy", "forced-skip", 0);
        } else {
            let s = greedy_stable(g, view);
            self.offer(&s);
            if s.len() >= f.target {
                self.note(&f, "greedy", "accept", s.len());
                return Ok(s);
            }
            self.note(&f, "greedy", "short", s.len());
            self.neighborhood_branch(&f)?;
        }
        let attempts = if scaled && depth == 0 {
            self.params.pipeline_attempts
        } else {
            1
        };
        // A stuck attempt marks the first DEAD_PREFIX centres it chose as
        // dead, so the next attempt changes the second centre (or, once
        // every second centre is exhausted, the first).
        for attempt in 1..attempts {
            self.prefix.clear();
            match self.pipeline(&f) {
                Err(Exit::Stuck { claim, reason }) => {
                    if self.prefix.is_empty() {
                        return Err(Exit::Stuck { claim, reason });
                    }
                    let mut seq = std::mem::take(&mut self.prefix);
                    seq.truncate(DEAD_PREFIX);
                    self.dead.insert(seq);
                    self.note(&f, claim, "retry", attempt);
                }
                other => return other,
            }
        }
        self.pipeline(&f)
    }

    /// Would `v` extend the top-level centre sequence `centers` into one
    /// already known to fail?
    pub(crate) fn centre_dead(&self, f: &Frame, centers: &[usize], v: usize) -> bool {
        if f.depth > 0 || self.dead.is_empty() {
            return false;
        }
        let mut seq = centers.to_vec();
        seq.push(v);
        self.dead.contains(&seq)
    }

    pub(crate) fn accept_centre(&mut self, f: &Frame, v: usize) {
        if f.depth == 0 {
            self.prefix.push(v);
        }
    }

    /// A vertex of maximum degree: solve its neighbourhood with clique bound
    /// `k - 1` and return the result if it already beats this level's bound.
    pub fn neighborhood_branch(&mut self, f: &Frame) -> Flow<()> {
        let Some(v) = f.max_vertex else {
            return Ok(());
        };
        let nbhd = self.g.neighbor_set(v).intersection(&f.view);
        let s = self.sub_solve(&nbhd, f.k - 1, f.depth + 1)?;
        self.offer(&s);
        if s.len() >= f.target {
            self.note(f, "1", "neighbourhood-accept", s.len());
            return Err(Exit::Stable(s));
        }
        self.note(f, "1", "pass", s.len());
        let p = &self.params;
        let big_t = p.expansion_threshold(f.n, 2, 2);
        let lhs = f.d as f64 * f.log_d.powi(3);
        let rhs = f.n as f64 / big_t;
        let second = (f.d + 1) as f64 >= p.expansion_threshold(f.n, f.k, f.d);
        self.require(f, lhs <= rhs, "1", || {
            format!("d (log d)^3 = {lhs} exceeds n / T = {rhs}")
        })?;
        self.require(f, second, "1", || "d + 1 below the expansion factor".into())
    }

    /// Claims (3), (4) and the routing phase.
    fn pipeline(&mut self, f: &Frame) -> Flow<VertexSet> {
        let t = self.params.t;
        let q = self.params.final_sparsity();
        let built = self.build_star_system(f, t, self.params.semi_sparsity())?;
        let problems = built.violations(self.g);
        self.invariant(problems.is_empty(), "3", || problems.join("; "))?;

        let semi = built.semi_sparsity(self.g);
        let sys = sparsify_star_system(self.g, &built, q);
        self.note(f, "4", "sparsified", sys.size(f.n));
        let problems = sys.violations(self.g);
        self.invariant(problems.is_empty(), "4", || problems.join("; "))?;
        if semi <= q / (2 * t) as f64 {
            for (b, c) in built.leaves.iter().zip(&sys.leaves) {
                self.invariant(2 * c.len() >= b.len(), "4", || {
                    format!("leaf set shrank from {} to {}", b.len(), c.len())
                })?;
            }
            let s = sys.sparsity(self.g);
            self.invariant(s <= q, "4", || format!("sparsity {s} above {q}"))?;
        }
        if sys.leaves.iter().any(VertexSet::is_empty) {
            return Err(self.stuck("4", "empty leaf set after sparsification"));
        }

        let cert = self.assemble_subdivision(f, &sys)?;
        Err(Exit::Subdivision(cert))
    }
}
