//! Second half of the construction: grow balls around the leaf sets, route
//! induced paths between them while avoiding the neighbourhood of the paths
//! already chosen, and assemble the subdivision.

use super::star::StarSystem;
use super::{Exit, ExtractError, Extractor, Flow, Frame};
use crate::certificates::{max_subdivision_len, verify_subdivision, PairPath, SubdivisionCertificate};
use crate::graph::{Graph, Path};
use crate::search::{expand_layer, shortest_pair_path};
use crate::vertex_set::VertexSet;

/// The vertex sets routing has to avoid.
///
/// `x1`: neighbours of the centres. `x2`: vertices outside `x1` dense to some
/// leaf set. `y`: the paths routed so far; `x3 = N[y]`. `allowed` is the
/// view minus `x1 ∪ x2 ∪ x3` and the centres.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionContext {
    pub view: VertexSet,
    pub x1: VertexSet,
    pub x2: VertexSet,
    pub y: VertexSet,
    pub x3: VertexSet,
    pub centers: VertexSet,
    pub allowed: VertexSet,
}

impl ObstructionContext {
    /// `x2` takes every vertex outside `x1` with at least
    /// `max(density |B_i|, min_hits)` neighbours in some leaf set.
    pub fn new(g: &Graph, view: &VertexSet, sys: &StarSystem, density: f64, min_hits: usize) -> Self {
        let n = g.n();
        let centers = VertexSet::from_ids(n, sys.centers.iter().copied());
        let mut x1 = VertexSet::empty(n);
        for &a in &sys.centers {
            x1.union_with(g.neighbor_set(a));
        }
        x1.intersect_with(view);
        let mut x2 = VertexSet::empty(n);
        for v in view.difference(&x1).iter() {
            let nv = g.neighbor_set(v);
            let dense = sys.leaves.iter().any(|b| {
                let hits = nv.intersection_len(b);
                hits >= min_hits && hits as f64 >= density * b.len() as f64
            });
            if dense {
                x2.insert(v);
            }
        }
        let mut ctx = ObstructionContext {
            view: view.clone(),
            x1,
            x2,
            y: VertexSet::empty(n),
            x3: VertexSet::empty(n),
            centers,
            allowed: VertexSet::empty(n),
        };
        ctx.refresh();
        ctx
    }

    /// Nothing forbidden: everything in `view` is allowed.
    pub fn unconstrained(view: &VertexSet) -> Self {
        let n = view.capacity();
        ObstructionContext {
            view: view.clone(),
            x1: VertexSet::empty(n),
            x2: VertexSet::empty(n),
            y: VertexSet::empty(n),
            x3: VertexSet::empty(n),
            centers: VertexSet::empty(n),
            allowed: view.clone(),
        }
    }

    /// Replaces the obstruction set and recomputes `x3` and `allowed`.
    pub fn set_obstruction(&mut self, g: &Graph, y: VertexSet) {
        self.x3 = g.closed_neighborhood(&y).intersection(&self.view);
        self.y = y;
        self.refresh();
    }

    fn refresh(&mut self) {
        let mut allowed = self.view.difference(&self.x1);
        allowed.difference_with(&self.x2);
        allowed.difference_with(&self.x3);
        allowed.difference_with(&self.centers);
        self.allowed = allowed;
    }
}

/// Outcome of the expansion test on a stable set `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expansion {
    /// `|N[A]|` reached the threshold; carries `|N[A]|`.
    Expanded(usize),
    /// `N[A]` was small, so `A` plus a stable set of the rest is stable.
    Merged(VertexSet),
}

/// One BFS step of a layer growth.
#[derive(Clone, Debug, PartialEq)]
pub struct GrowthStep {
    pub radius: usize,
    pub before: usize,
    pub after: usize,
    pub log_n: f64,
    /// Taken under faithful constants (and therefore checked).
    pub faithful: bool,
}

impl GrowthStep {
    /// `after >= (1 + 2/L) before`.
    pub fn meets_growth(&self) -> bool {
        self.after as f64 >= (1.0 + 2.0 / self.log_n) * self.before as f64
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct LayerState {
    pub radius: usize,
    pub layer: VertexSet,
    pub sizes: Vec<usize>,
    pub steps: Vec<GrowthStep>,
}

impl Extractor<'_> {
    /// Either `N[A]` has at least `threshold |A|` vertices, or the rest of
    /// the view yields a stable set to merge with `A`.
    pub fn expand_or_merge(&mut self, f: &Frame, a: &VertexSet, threshold: f64) -> Flow<Expansion> {
        let g = self.graph();
        let s = g.closed_neighborhood(a).intersection(&f.view);
        if s.len() as f64 >= threshold * a.len() as f64 {
            self.note(f, "5", "expanded", s.len());
            return Ok(Expansion::Expanded(s.len()));
        }
        let rest = f.view.difference(&s);
        let r = self.sub_solve(&rest, f.k, f.depth + 1)?;
        let merged = a.union(&r);
        self.invariant(g.is_stable(&merged), "5", || "merged set not stable".into())?;
        self.offer(&merged);
        self.note(f, "5", "merge", merged.len());
        Ok(Expansion::Merged(merged))
    }

    /// Grows `N^r` from `sources` through `ctx.allowed` until it covers more
    /// than half of the view.
    pub fn grow_layers(&mut self, f: &Frame, ctx: &ObstructionContext, sources: &VertexSet) -> Flow<LayerState> {
        let g = self.graph();
        let faithful = self.params().is_faithful();
        let t = self.params().t as f64;
        let threshold = self.params().expansion_threshold(f.n, f.k, f.d);
        let l2 = f.log_n * f.log_n;
        let cap = ((l2 / 2.0).floor() as usize).saturating_sub(1);
        let mut st = LayerState {
            radius: 0,
            layer: sources.clone(),
            sizes: vec![sources.len()],
            steps: Vec::new(),
        };
        loop {
            if 2 * st.layer.len() > f.n {
                self.note(f, "8", "half", st.layer.len());
                return Ok(st);
            }
            if st.radius >= cap {
                return Err(self.stuck("9", format!("radius cap {cap} reached at |N| = {}", st.layer.len())));
            }
            let a = if st.radius == 0 {
                // The sources lie in one leaf set, which is stable.
                st.layer.clone()
            } else {
                self.sub_solve(&st.layer, f.k, f.depth + 1)?
            };
            self.offer(&a);
            if a.len() >= f.target {
                self.note(f, "8", "layer-accept", a.len());
                return Err(Exit::Stable(a));
            }
            if let Expansion::Merged(m) = self.expand_or_merge(f, &a, threshold)? {
                if m.len() >= f.target {
                    return Err(Exit::Stable(m));
                }
                self.require(f, false, "5", || {
                    format!("merged set of size {} below {}", m.len(), f.target)
                })?;
            }
            let next = expand_layer(g, &st.layer, &ctx.allowed);
            let step = GrowthStep {
                radius: st.radius + 1,
                before: st.layer.len(),
                after: next.len(),
                log_n: f.log_n,
                faithful,
            };
            if step.radius == 1 {
                let need = 3.0 * t.powi(3) * f.log_n.powi(3) * f.d as f64;
                self.require(f, next.len() as f64 >= need, "7", || {
                    format!("|N^1| = {} below {need}", next.len())
                })?;
            } else {
                self.require(f, step.meets_growth(), "8", || {
                    format!("layer grew {} -> {}", step.before, step.after)
                })?;
            }
            self.note(f, if step.radius == 1 { "7" } else { "8" }, "grow", next.len());
            let stalled = next.len() == st.layer.len();
            st.radius += 1;
            st.sizes.push(next.len());
            st.steps.push(step.clone());
            self.record_growth(step);
            st.layer = next;
            if stalled {
                return Err(self.stuck("8", "layer stopped growing"));
            }
        }
    }

    /// Shortest induced path from `B_i \ X3` to `B_j \ X3` through `allowed`.
    pub fn route_path(&mut self, f: &Frame, ctx: &ObstructionContext, bi: &VertexSet, bj: &VertexSet) -> Flow<Path> {
        let g = self.graph();
        let from = bi.difference(&ctx.x3);
        let to = bj.difference(&ctx.x3);
        let path = shortest_pair_path(g, &from, &to, &ctx.allowed)
            .map_err(|e| Exit::Fault(ExtractError::Assertion { claim: "9", detail: e.to_string() }))?;
        let Some(path) = path else {
            return Err(self.stuck("9", "no admissible path between the leaf sets"));
        };
        let local = (f.log_n * f.log_n - 2.0).floor();
        self.require(f, path.length() as f64 <= local, "9", || {
            format!("path of length {} exceeds L^2 - 2 = {local}", path.length())
        })?;
        let cap = max_subdivision_len(g.n()).saturating_sub(2);
        if path.length() > cap {
            return Err(self.stuck("9", format!("path of length {} exceeds {cap}", path.length())));
        }
        self.note(f, "9", "route", path.length());
        Ok(path)
    }

    /// Routes the pairs in lexicographic order, each path avoiding the
    /// closed neighbourhood of the earlier ones, and returns the verified
    /// subdivision with the centres as branch vertices.
    pub fn assemble_subdivision(&mut self, f: &Frame, sys: &StarSystem) -> Flow<SubdivisionCertificate> {
        let g = self.graph();
        let t = sys.len();
        let scaled = !self.params().is_faithful();
        let density = self.params().route_density(f.log_n);
        // Scaled runs leave X2 empty: with desk-scale constants it walls off
        // most routes, and the verifier does not depend on it.
        let min_hits = if scaled { usize::MAX } else { 0 };
        let mut ctx = ObstructionContext::new(g, &f.view, sys, density, min_hits);
        let l2 = f.log_n * f.log_n;
        let tt = (t * t) as f64;
        let mut y = VertexSet::empty(g.n());
        let mut paths = Vec::new();
        let all_leaves = sys.leaves.iter().fold(VertexSet::empty(g.n()), |acc, b| acc.union(b));

        for i in 0..t {
            for j in i + 1..t {
                ctx.set_obstruction(g, y.clone());
                let y_x1 = ctx.y.intersection(&ctx.x1);
                self.invariant(y_x1.is_subset(&all_leaves) && ctx.y.is_disjoint(&ctx.x2), "6", || {
                    "obstruction set meets X2 or non-leaf X1".into()
                })?;
                self.require(f, y_x1.len() as f64 <= tt, "6", || format!("|Y ∩ X1| = {}", y_x1.len()))?;
                self.require(f, ctx.y.len() as f64 <= 0.5 * tt * l2, "6", || format!("|Y| = {}", ctx.y.len()))?;
                self.require(f, ctx.x3.len() as f64 <= 0.5 * tt * l2 * f.d as f64, "6", || {
                    format!("|X3| = {}", ctx.x3.len())
                })?;
                for (idx, b) in sys.leaves.iter().enumerate() {
                    let hit = ctx.x3.intersection_len(b);
                    self.require(f, 2 * hit <= b.len(), "6", || {
                        format!("X3 covers {hit} of the {} vertices of leaf set {idx}", b.len())
                    })?;
                }

                for side in [i, j] {
                    let sources = sys.leaves[side].difference(&ctx.x3);
                    if sources.is_empty() {
                        return Err(self.stuck("6", format!("leaf set {side} swallowed by X3")));
                    }
                    match self.grow_layers(f, &ctx, &sources) {
                        Ok(_) => {}
                        // Growth is the faithful argument for why a route
                        // exists; scaled runs try the route regardless.
                        Err(Exit::Stuck { .. }) if scaled => self.note(f, "8", "growth-short", sources.len()),
                        Err(e) => return Err(e),
                    }
                }

                let path = self.route_path(f, &ctx, &sys.leaves[i], &sys.leaves[j])?;
                for &v in &path.vertices {
                    y.insert(v);
                }
                paths.push(PairPath { pair: (i, j), vertices: path.vertices });
            }
        }

        let cert = SubdivisionCertificate::new(sys.centers.clone(), paths, 3, max_subdivision_len(g.n()));
        let report = verify_subdivision(g, &cert);
        if !report.is_valid() {
            return Err(Exit::Fault(ExtractError::VerifierRejected(
                report.violations.iter().map(ToString::to_string).collect(),
            )));
        }
        self.note(f, "assemble", "subdivision", cert.vertices().len());
        Ok(cert)
    }
}
