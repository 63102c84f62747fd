//! Seeded instance generators. Every generator is a pure function of its
//! arguments; the random stream is ChaCha8 seeded with `seed_from_u64`, and
//! [`ALGORITHM`] names the exact sampling procedure for output metadata.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::certificates::{max_subdivision_len, PairPath, SubdivisionCertificate};
use crate::extractor::StarSystem;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Identifier of the sampling procedures below. Bump when any of them
/// changes the stream it consumes.
pub const ALGORITHM: &str = "chacha8-seed_from_u64/v1";

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("probability {0} outside [0, 1]")]
    Probability(f64),
    #[error("t must be at least 3 (got {0})")]
    SmallT(usize),
    #[error("pair ({0}, {1}) has length {2}; lengths must be at least 3")]
    ShortPath(usize, usize, usize),
    #[error("no length given for pair ({0}, {1})")]
    MissingPair(usize, usize),
    #[error("length given for pair ({0}, {1}), which is not a pair of 0..t")]
    UnknownPair(usize, usize),
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_p(p: f64) -> Result<(), GenError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GenError::Probability(p))
    }
}

/// `G(n, p)`: pairs `u < v` in lexicographic order, each kept when a fresh
/// uniform `f64` in `[0, 1)` is below `p`.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    check_p(p)?;
    let mut r = rng(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if r.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::new(n, edges).expect("generated edges are simple"))
}

/// Random chordal graph by simplicial attachment: vertex `v` joins a random
/// clique of the graph on `0..v` (grown greedily from a random anchor), or
/// stays isolated with probability 1/8. Returns the graph and a perfect
/// elimination ordering (reverse insertion order).
pub fn chordal(n: usize, seed: u64) -> (Graph, Vec<usize>) {
    let mut r = rng(seed);
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for v in 1..n {
        if r.gen_ratio(1, 8) {
            continue;
        }
        let anchor = r.gen_range(0..v);
        let mut clique = vec![anchor];
        let mut cand = adj[anchor].clone();
        cand.shuffle(&mut r);
        for w in cand {
            if r.gen_bool(0.5) && clique.iter().all(|c| adj[*c].contains(&w)) {
                clique.push(w);
            }
        }
        for &c in &clique {
            adj[c].push(v);
            adj[v].push(c);
            edges.push((c, v));
        }
    }
    let g = Graph::new(n, edges).expect("generated edges are simple");
    (g, (0..n).rev().collect())
}

/// Does every vertex's set of later neighbours in `order` form a clique?
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    if order.len() != g.n() {
        return false;
    }
    let mut pos = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        if v >= g.n() || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]).collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.adjacent(a, b)))
    })
}

/// All pairs `(i, j)`, `i < j < t`, mapped to the same length.
pub fn uniform_lengths(t: usize, len: usize) -> BTreeMap<(usize, usize), usize> {
    (0..t)
        .flat_map(|i| (i + 1..t).map(move |j| ((i, j), len)))
        .collect()
}

/// An exact subdivision of `K_t` with the given path lengths, plus
/// `noise_n` extra vertices each joined with probability `noise_p` to every
/// earlier vertex (certificate or noise), then relabelled by a random
/// permutation. Noise never adds edges inside the certificate, so the
/// returned certificate stays valid.
pub fn planted_subdivision(
    t: usize,
    lengths: &BTreeMap<(usize, usize), usize>,
    noise_n: usize,
    noise_p: f64,
    seed: u64,
) -> Result<(Graph, SubdivisionCertificate), GenError> {
    if t < 3 {
        return Err(GenError::SmallT(t));
    }
    check_p(noise_p)?;
    for (&(i, j), &len) in lengths {
        if i >= j || j >= t {
            return Err(GenError::UnknownPair(i, j));
        }
        if len < 3 {
            return Err(GenError::ShortPath(i, j, len));
        }
    }
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    let mut next = t;
    for i in 0..t {
        for j in i + 1..t {
            let len = *lengths.get(&(i, j)).ok_or(GenError::MissingPair(i, j))?;
            let inner: Vec<usize> = (next..next + len - 1).collect();
            next += len - 1;
            let mut prev = i;
            for &v in &inner {
                edges.push((prev, v));
                prev = v;
            }
            edges.push((prev, j));
            paths.push(PairPath { pair: (i, j), vertices: inner });
        }
    }
    let core = next;
    let n = core + noise_n;
    let mut r = rng(seed);
    for x in core..n {
        for y in 0..x {
            if r.gen::<f64>() < noise_p {
                edges.push((y, x));
            }
        }
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut r);
    let g = Graph::new(n, edges.iter().map(|&(u, v)| (perm[u], perm[v]))).expect("generated edges are simple");
    let branch = (0..t).map(|i| perm[i]).collect();
    let paths = paths
        .into_iter()
        .map(|p| PairPath {
            pair: p.pair,
            vertices: p.vertices.iter().map(|&v| perm[v]).collect(),
        })
        .collect();
    let longest = lengths.values().copied().max().unwrap_or(3);
    let max_len = max_subdivision_len(n).max(longest);
    Ok((g, SubdivisionCertificate::new(branch, paths, 3, max_len)))
}

/// A star system with `sizes.len()` centres, for exercising the
/// sparsification step. Centre `i` is vertex `i`; leaf sets follow in order.
/// Each vertex of a later leaf set sees at most `floor(semi |B_i|)` vertices
/// of each earlier `B_i`, picked from a small random hub so that some
/// earlier vertices become heavy. The result has semi-sparsity at most `semi`.
pub fn star_system_instance(sizes: &[usize], semi: f64, seed: u64) -> (Graph, StarSystem) {
    let mut r = rng(seed);
    let p = sizes.len();
    let n = p + sizes.iter().sum::<usize>();
    let mut edges = Vec::new();
    let mut leaves: Vec<Vec<usize>> = Vec::with_capacity(p);
    let mut next = p;
    for (i, &s) in sizes.iter().enumerate() {
        let leaf: Vec<usize> = (next..next + s).collect();
        next += s;
        edges.extend(leaf.iter().map(|&v| (i, v)));
        leaves.push(leaf);
    }
    for j in 0..p {
        for i in 0..j {
            let cap = (semi * sizes[i] as f64).floor() as usize;
            if cap == 0 {
                continue;
            }
            let mut hub = leaves[i].clone();
            hub.shuffle(&mut r);
            hub.truncate((2 * cap).max(1).min(hub.len()));
            for &u in &leaves[j] {
                let k = r.gen_range(0..=cap.min(hub.len()));
                for &w in hub.choose_multiple(&mut r, k) {
                    edges.push((w, u));
                }
            }
        }
    }
    let g = Graph::new(n, edges).expect("generated edges are simple");
    let sys = StarSystem::new(
        (0..p).collect(),
        leaves.into_iter().map(|l| VertexSet::from_ids(n, l)).collect(),
    );
    (g, sys)
}

/// Upper bound on the clique number: colours used by greedy colouring in
/// smallest-last (degeneracy) order.
pub fn clique_upper_bound(g: &Graph) -> usize {
    let n = g.n();
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut gone = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !gone[v]).min_by_key(|&v| (deg[v], v)).unwrap();
        gone[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !gone[u] {
                deg[u] -= 1;
            }
        }
    }
    let mut colour = vec![usize::MAX; n];
    let mut used = 0;
    for &v in order.iter().rev() {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|&u| colour[u]).collect();
        let c = (0..).find(|c| !taken.contains(c)).unwrap();
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}
