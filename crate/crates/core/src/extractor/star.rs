//! Star systems: construction by repeated high-degree picks, and the
//! halving sparsification.

use super::{Exit, Extractor, Flow, Frame};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Centre candidates a scaled build may pass over.
pub const MAX_SKIPS: usize = 64;

/// Centres `a_1..a_p` with leaf sets `B_1..B_p`.
///
/// Invariants (see [`StarSystem::violations`]): centres distinct and pairwise
/// nonadjacent; leaf sets stable, pairwise disjoint and disjoint from the
/// centres; `a_i` complete to `B_i` and anticomplete to every other `B_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarSystem {
    pub centers: Vec<usize>,
    pub leaves: Vec<VertexSet>,
}

/// Largest `|N(v) ∩ b| / |b|` over `v ∈ a`; 0 when either side is empty.
fn sparsity_to(g: &Graph, a: &VertexSet, b: &VertexSet) -> f64 {
    if b.is_empty() {
        return 0.0;
    }
    a.iter()
        .map(|v| g.neighbor_set(v).intersection_len(b))
        .max()
        .map_or(0.0, |m| m as f64 / b.len() as f64)
}

impl StarSystem {
    pub fn new(centers: Vec<usize>, leaves: Vec<VertexSet>) -> Self {
        assert_eq!(centers.len(), leaves.len(), "one leaf set per centre");
        StarSystem { centers, leaves }
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }

    /// `min |B_i|`, or `n` for the empty system.
    pub fn size(&self, n: usize) -> usize {
        self.leaves.iter().map(VertexSet::len).min().unwrap_or(n)
    }

    /// Max sparsity of a later leaf set to an earlier one.
    pub fn semi_sparsity(&self, g: &Graph) -> f64 {
        let mut worst = 0.0f64;
        for j in 0..self.len() {
            for i in 0..j {
                worst = worst.max(sparsity_to(g, &self.leaves[j], &self.leaves[i]));
            }
        }
        worst
    }

    /// Max sparsity over all ordered pairs of distinct leaf sets.
    pub fn sparsity(&self, g: &Graph) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.len() {
            for j in 0..self.len() {
                if i != j {
                    worst = worst.max(sparsity_to(g, &self.leaves[i], &self.leaves[j]));
                }
            }
        }
        worst
    }

    /// Every violated star-system invariant, checked by direct adjacency
    /// queries. Empty means valid.
    pub fn violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        if self.centers.len() != self.leaves.len() {
            out.push(format!(
                "{} centres but {} leaf sets",
                self.centers.len(),
                self.leaves.len()
            ));
            return out;
        }
        let leaf_lists: Vec<Vec<usize>> = self.leaves.iter().map(VertexSet::to_vec).collect();
        for (i, &a) in self.centers.iter().enumerate() {
            for (j, &b) in self.centers.iter().enumerate().skip(i + 1) {
                if a == b {
                    out.push(format!("centres {i} and {j} coincide"));
                } else if g.adjacent(a, b) {
                    out.push(format!("centres {a} and {b} adjacent"));
                }
            }
        }
        for (i, li) in leaf_lists.iter().enumerate() {
            for (x, &u) in li.iter().enumerate() {
                for &w in &li[x + 1..] {
                    if g.adjacent(u, w) {
                        out.push(format!("leaf set {i} not stable: {u}-{w}"));
                    }
                }
                if self.centers.contains(&u) {
                    out.push(format!("leaf {u} of set {i} is a centre"));
                }
                for (j, &a) in self.centers.iter().enumerate() {
                    let adj = g.adjacent(a, u);
                    if i == j && !adj {
                        out.push(format!("centre {a} misses its leaf {u}"));
                    } else if i != j && adj {
                        out.push(format!("centre {a} sees leaf {u} of set {i}"));
                    }
                }
            }
            for (j, lj) in leaf_lists.iter().enumerate().skip(i + 1) {
                if let Some(u) = li.iter().find(|u| lj.contains(u)) {
                    out.push(format!("leaf sets {i} and {j} share {u}"));
                }
            }
        }
        out
    }
}

/// Processes leaf sets from last to first; `C_i` keeps the vertices of
/// `B_i` with at most `q |C_j|` neighbours in every later `C_j`.
///
/// If the input has semi-sparsity at most `q / (2p)`, every `|C_i| >=
/// |B_i| / 2` and the result has sparsity at most `q`.
pub fn sparsify_star_system(g: &Graph, sys: &StarSystem, q: f64) -> StarSystem {
    let p = sys.len();
    let mut out: Vec<VertexSet> = sys.leaves.clone();
    for i in (0..p).rev() {
        let (head, tail) = out.split_at_mut(i + 1);
        let ci = &mut head[i];
        let keep: Vec<usize> = ci
            .iter()
            .filter(|&v| {
                let nv = g.neighbor_set(v);
                tail.iter()
                    .all(|cj| nv.intersection_len(cj) as f64 <= q * cj.len() as f64)
            })
            .collect();
        *ci = VertexSet::from_ids(g.n(), keep);
    }
    StarSystem::new(sys.centers.clone(), out)
}

impl Extractor<'_> {
    /// Removal step: if deleting `x` leaves maximum degree at most `d/2`,
    /// recurse on the rest and return its stable set. Otherwise hand back a
    /// vertex of maximum degree outside `x` (smallest id on ties).
    pub fn removal_branch(&mut self, f: &Frame, x: &VertexSet) -> Flow<usize> {
        self.removal_check(f, x)?;
        self.pick_centre(f, x, &VertexSet::empty(self.graph().n()), &[])
    }

    /// The recursion half of the removal step.
    fn removal_check(&mut self, f: &Frame, x: &VertexSet) -> Flow<()> {
        let g = self.graph();
        let rest = f.view.difference(x);
        let Ok((_, delta)) = g.max_degree(&rest) else {
            return Err(self.stuck("2", "every vertex is excluded"));
        };
        if 2 * delta > f.d {
            return Ok(());
        }
        let s = self.sub_solve(&rest, f.k, f.depth + 1)?;
        self.offer(&s);
        if s.len() >= f.target {
            self.note(f, "2", "removal-accept", s.len());
            return Err(Exit::Stable(s));
        }
        self.require(f, false, "2", || {
            format!("removal recursion gave {} < {}", s.len(), f.target)
        })?;
        if delta == 0 {
            return Err(self.stuck("2", "no edges left outside the excluded set"));
        }
        self.note(f, "2", "weak-witness", delta);
        Ok(())
    }

    /// Highest degree in `G \ x` among vertices not in `skip`, smallest id on
    /// ties. Top-level picks also avoid extending `centers` into a sequence
    /// that already failed.
    fn pick_centre(&mut self, f: &Frame, x: &VertexSet, skip: &VertexSet, centers: &[usize]) -> Flow<usize> {
        let g = self.graph();
        let rest = f.view.difference(x);
        let pick = rest
            .difference(skip)
            .iter()
            .filter(|&v| !self.centre_dead(f, centers, v))
            .map(|v| (g.degree_within(v, &rest), v))
            .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
        match pick {
            Some((deg, w)) if deg > 0 => {
                self.note(f, "2", "witness", deg);
                Ok(w)
            }
            _ => Err(self.stuck("2", "no eligible centre with a neighbour outside X")),
        }
    }

    /// Builds a star system of length `p` with semi-sparsity at most `q`
    /// (up to the trimming noted below).
    ///
    /// Each round excludes the neighbours of the centres so far (`X1`), the
    /// vertices with at least `q |B_i|` neighbours in some leaf set (`X2`)
    /// and the centres themselves, picks a high-degree vertex `a` outside
    /// them and takes a stable subset of its remaining neighbourhood as the
    /// next leaf set. Earlier leaf sets lose any neighbours of `a`, which
    /// keeps every centre anticomplete to the other leaf sets.
    ///
    /// Every leaf set must keep room for `p - 1` path ends. Scaled runs pass
    /// over a centre that would break this (up to [`MAX_SKIPS`] times);
    /// faithful runs treat it as a failed claim.
    pub fn build_star_system(&mut self, f: &Frame, p: usize, q: f64) -> Flow<StarSystem> {
        let g = self.graph();
        let scaled = !self.params().is_faithful();
        let mut centers: Vec<usize> = Vec::with_capacity(p);
        let mut leaves: Vec<VertexSet> = Vec::with_capacity(p);
        let star_target = self.params().star_target(f.d, f.k);
        let need = p.max(2) - 1;
        let mut skip = VertexSet::empty(g.n());
        let mut skips = 0;
        let mut cached: Option<VertexSet> = None;
        while centers.len() < p {
            let x = match &cached {
                Some(x) => x.clone(),
                None => {
                    let fresh = self.exclusion(f, &centers, &leaves, q)?;
                    self.removal_check(f, &fresh)?;
                    cached = Some(fresh.clone());
                    fresh
                }
            };
            let a = self.pick_centre(f, &x, &skip, &centers)?;
            let c = g.neighbor_set(a).intersection(&f.view).difference(&x);
            let b = self.sub_solve(&c, f.k - 1, f.depth + 1)?;
            self.offer(&b);
            if b.len() >= f.target {
                self.note(f, "3", "oversized-leaf-accept", b.len());
                return Err(Exit::Stable(b));
            }
            self.require(f, b.len() as f64 >= star_target, "3", || {
                format!("leaf set of size {} below {star_target}", b.len())
            })?;
            let na = g.neighbor_set(a);
            let short = b.len() < need
                || leaves
                    .iter()
                    .any(|l| l.len() - l.intersection_len(na) < need);
            if short {
                if scaled && skips < MAX_SKIPS {
                    skips += 1;
                    skip.insert(a);
                    self.note(f, "3", "skip-centre", b.len());
                    continue;
                }
                return Err(self.stuck("3", format!("centre {a} leaves a leaf set with room for fewer than {need} paths")));
            }
            for leaf in leaves.iter_mut() {
                if leaf.intersects(na) {
                    leaf.difference_with(na);
                    self.note(f, "3", "trim", leaf.len());
                }
            }
            self.accept_centre(f, a);
            self.note(f, "3", "centre", b.len());
            centers.push(a);
            leaves.push(b);
            skip.clear();
            cached = None;
        }
        Ok(StarSystem::new(centers, leaves))
    }

    /// `X1 ∪ X2` plus the centres, with the claim-(3) size checks.
    fn exclusion(&mut self, f: &Frame, centers: &[usize], leaves: &[VertexSet], q: f64) -> Flow<VertexSet> {
        let g = self.graph();
        let mut x1 = VertexSet::empty(g.n());
        for &a in centers {
            x1.union_with(g.neighbor_set(a));
        }
        x1.intersect_with(&f.view);
        let mut x2 = VertexSet::empty(g.n());
        for v in f.view.difference(&x1).iter() {
            let nv = g.neighbor_set(v);
            if leaves
                .iter()
                .any(|b| nv.intersection_len(b) as f64 >= q * b.len() as f64)
            {
                x2.insert(v);
            }
        }
        let mut x = x1.union(&x2);
        let bound = f.n as f64 / f.log_d;
        self.require(f, x.len() as f64 <= bound, "3", || {
            format!("|X1 ∪ X2| = {} exceeds n/D = {bound}", x.len())
        })?;
        let x2_cap = centers.len() as f64 * f.d as f64 / q;
        self.require(f, x2.len() as f64 <= x2_cap, "3", || {
            format!("|X2| = {} exceeds {x2_cap}", x2.len())
        })?;
        for &a in centers {
            x.insert(a);
        }
        Ok(x)
    }
}
