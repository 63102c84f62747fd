//! Verifiers. These re-check every claim from the raw adjacency relation with
//! plain pairwise scans and share no logic with the code that builds
//! certificates.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use super::bounds::{ceil_bound, DerivedConstants};
use super::{StableSetCertificate, SubdivisionCertificate};
use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifyError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} listed twice")]
    Repeated(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct StableReport {
    pub is_stable: bool,
    pub size: usize,
    /// First offending edge, if any.
    pub witness_edge: Option<(usize, usize)>,
    pub bound: f64,
    pub meets_faithful_bound: bool,
}

pub fn verify_stable(
    g: &Graph,
    c: &StableSetCertificate,
    constants: &DerivedConstants,
) -> Result<StableReport, VerifyError> {
    let mut seen = HashSet::with_capacity(c.set.len());
    for &v in &c.set {
        if v >= g.n() {
            return Err(VerifyError::OutOfRange { vertex: v, n: g.n() });
        }
        if !seen.insert(v) {
            return Err(VerifyError::Repeated(v));
        }
    }
    let mut witness_edge = None;
    'scan: for (i, &u) in c.set.iter().enumerate() {
        for &v in &c.set[i + 1..] {
            if g.adjacent(u, v) {
                witness_edge = Some((u.min(v), u.max(v)));
                break 'scan;
            }
        }
    }
    let bound = constants.bound();
    let size = c.set.len();
    Ok(StableReport {
        is_stable: witness_edge.is_none(),
        size,
        witness_edge,
        bound,
        meets_faithful_bound: size >= ceil_bound(bound),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BranchCount { t: usize, found: usize },
    OutOfRange(usize),
    RepeatedVertex(usize),
    MissingPair(usize, usize),
    UnexpectedPair(usize, usize),
    EmptyPath(usize, usize),
    Length { pair: (usize, usize), length: usize, min: usize, max: usize },
    MissingEdge(usize, usize),
    ExtraEdge(usize, usize),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BranchCount { t, found } => {
                write!(f, "expected {t} branch vertices, found {found}")
            }
            Violation::OutOfRange(v) => write!(f, "vertex {v} out of range"),
            Violation::RepeatedVertex(v) => write!(f, "vertex {v} used more than once"),
            Violation::MissingPair(i, j) => write!(f, "no path for pair {{{i},{j}}}"),
            Violation::UnexpectedPair(i, j) => {
                write!(f, "pair {{{i},{j}}} is invalid or listed twice")
            }
            Violation::EmptyPath(i, j) => write!(f, "path for pair {{{i},{j}}} is empty"),
            Violation::Length {
                pair,
                length,
                min,
                max,
            } => write!(
                f,
                "pair {{{},{}}} has length {length} outside [{min}, {max}]",
                pair.0, pair.1
            ),
            Violation::MissingEdge(u, v) => write!(f, "required edge {u}-{v} absent"),
            Violation::ExtraEdge(u, v) => write!(f, "edge {u}-{v} breaks inducedness"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubdivisionReport {
    pub violations: Vec<Violation>,
}

impl SubdivisionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_subdivision(g: &Graph, c: &SubdivisionCertificate) -> SubdivisionReport {
    let mut violations = Vec::new();
    let n = g.n();
    let t = c.t;
    if c.branch.len() != t {
        violations.push(Violation::BranchCount {
            t,
            found: c.branch.len(),
        });
    }

    let mut seen = BTreeSet::new();
    let mut all = Vec::new();
    for v in c
        .branch
        .iter()
        .chain(c.paths.iter().flat_map(|p| p.vertices.iter()))
        .copied()
    {
        if v >= n {
            violations.push(Violation::OutOfRange(v));
        } else if !seen.insert(v) {
            violations.push(Violation::RepeatedVertex(v));
        } else {
            all.push(v);
        }
    }

    let mut covered = BTreeSet::new();
    let mut expected: HashSet<(usize, usize)> = HashSet::new();
    let edge = |a: usize, b: usize| (a.min(b), a.max(b));
    for p in &c.paths {
        let (i, j) = p.pair;
        if i >= j || j >= t || j >= c.branch.len() || !covered.insert((i, j)) {
            violations.push(Violation::UnexpectedPair(i, j));
            continue;
        }
        if p.vertices.is_empty() {
            violations.push(Violation::EmptyPath(i, j));
            continue;
        }
        let length = p.vertices.len() + 1;
        if length < c.min_len || length > c.max_len {
            violations.push(Violation::Length {
                pair: (i, j),
                length,
                min: c.min_len,
                max: c.max_len,
            });
        }
        let mut chain = Vec::with_capacity(p.vertices.len() + 2);
        chain.push(c.branch[i]);
        chain.extend_from_slice(&p.vertices);
        chain.push(c.branch[j]);
        for w in chain.windows(2) {
            expected.insert(edge(w[0], w[1]));
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            if !covered.contains(&(i, j)) {
                violations.push(Violation::MissingPair(i, j));
            }
        }
    }

    for (a, &u) in all.iter().enumerate() {
        for &v in &all[a + 1..] {
            let want = expected.contains(&edge(u, v));
            let have = g.adjacent(u, v);
            if want && !have {
                let (x, y) = edge(u, v);
                violations.push(Violation::MissingEdge(x, y));
            } else if have && !want {
                let (x, y) = edge(u, v);
                violations.push(Violation::ExtraEdge(x, y));
            }
        }
    }
    SubdivisionReport { violations }
}
