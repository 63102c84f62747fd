//! Certificates for both sides of the dichotomy, their independent verifiers,
//! and the JSON interchange format.

pub mod bounds;
mod json;
mod verify;

pub use bounds::{
    bound_clique_free, bound_main, bound_no_degree, ceil_bound, clique_free_constant,
    general_h_order, max_subdivision_len, BoundError, DerivedConstants,
};
pub use json::{CertParams, Certificate, CertificateBody, SchemaError};
pub use verify::{
    verify_stable, verify_subdivision, StableReport, SubdivisionReport, VerifyError, Violation,
};

use serde::{Deserialize, Serialize};

/// Which regime a certificate claims to have been produced under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimedMode {
    Faithful,
    Scaled,
    BestEffort,
    Planted,
    Oracle,
}

impl std::fmt::Display for ClaimedMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClaimedMode::Faithful => "faithful",
            ClaimedMode::Scaled => "scaled",
            ClaimedMode::BestEffort => "best-effort",
            ClaimedMode::Planted => "planted",
            ClaimedMode::Oracle => "oracle",
        })
    }
}

/// A claimed stable set, as sorted host-graph ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableSetCertificate {
    pub set: Vec<usize>,
    pub claimed_mode: ClaimedMode,
}

impl StableSetCertificate {
    pub fn new<I: IntoIterator<Item = usize>>(set: I, claimed_mode: ClaimedMode) -> Self {
        let mut set: Vec<usize> = set.into_iter().collect();
        set.sort_unstable();
        StableSetCertificate { set, claimed_mode }
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }
}

/// One subdivided edge: the path joining `branch[pair.0]` to `branch[pair.1]`,
/// listed from the neighbour of the first branch vertex to the neighbour of
/// the second. Branch vertices are not part of `vertices`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPath {
    pub pair: (usize, usize),
    pub vertices: Vec<usize>,
}

impl PairPath {
    /// Length of the subdivided edge, counting both branch edges.
    pub fn total_length(&self) -> usize {
        self.vertices.len() + 1
    }
}

/// A claimed induced subdivision of `K_t` with every edge length in
/// `[min_len, max_len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdivisionCertificate {
    pub t: usize,
    pub branch: Vec<usize>,
    /// Sorted by pair, with `pair.0 < pair.1`.
    pub paths: Vec<PairPath>,
    pub min_len: usize,
    pub max_len: usize,
}

impl SubdivisionCertificate {
    /// Normalises pair orientation (`i < j`, reversing the path when needed)
    /// and sorts the paths by pair.
    pub fn new(
        branch: Vec<usize>,
        paths: Vec<PairPath>,
        min_len: usize,
        max_len: usize,
    ) -> Self {
        let mut paths: Vec<PairPath> = paths
            .into_iter()
            .map(|mut p| {
                if p.pair.0 > p.pair.1 {
                    p.pair = (p.pair.1, p.pair.0);
                    p.vertices.reverse();
                }
                p
            })
            .collect();
        paths.sort_by_key(|p| p.pair);
        SubdivisionCertificate {
            t: branch.len(),
            branch,
            paths,
            min_len,
            max_len,
        }
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.paths.iter().map(PairPath::total_length).collect()
    }

    /// Every vertex the certificate mentions, branch vertices first.
    pub fn vertices(&self) -> Vec<usize> {
        self.branch
            .iter()
            .copied()
            .chain(self.paths.iter().flat_map(|p| p.vertices.iter().copied()))
            .collect()
    }

    pub fn path(&self, i: usize, j: usize) -> Option<&PairPath> {
        let key = (i.min(j), i.max(j));
        self.paths.iter().find(|p| p.pair == key)
    }
}
