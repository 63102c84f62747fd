use super::OracleError;
use crate::certificates::{PairPath, SubdivisionCertificate};
use crate::graph::Graph;

pub const DEFAULT_SIZE_LIMIT: usize = 15;

/// Exhaustive search for an induced subdivision of `K_t` whose paths all
/// have lengths in `[lo, hi]` (length counts the two branch edges).
///
/// Tries every set of `t` pairwise nonadjacent branch vertices, then routes
/// the pairs in lexicographic order by depth-first enumeration of induced
/// paths, backtracking across pairs.
pub fn exhaustive_subdivision_search(
    g: &Graph,
    t: usize,
    lo: usize,
    hi: usize,
    size_limit: usize,
) -> Result<Option<SubdivisionCertificate>, OracleError> {
    if !(3..=4).contains(&t) {
        return Err(OracleError::UnsupportedT(t));
    }
    if lo < 2 || lo > hi {
        return Err(OracleError::BadRange { lo, hi });
    }
    if g.n() > size_limit {
        return Err(OracleError::TooLarge { n: g.n(), limit: size_limit });
    }
    let n = g.n();
    let pairs: Vec<(usize, usize)> = (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))).collect();
    let mut branch = Vec::with_capacity(t);
    let mut found = None;
    choose_branch(g, t, 0, &mut branch, &mut |b| {
        let mut st = State {
            g,
            branch: b,
            lo,
            hi,
            used: vec![false; n],
            paths: Vec::new(),
        };
        if st.route(&pairs, 0) {
            found = Some(SubdivisionCertificate::new(b.to_vec(), st.paths, lo, hi));
            true
        } else {
            false
        }
    });
    Ok(found)
}

fn choose_branch(
    g: &Graph,
    t: usize,
    from: usize,
    branch: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if branch.len() == t {
        return visit(branch);
    }
    for v in from..g.n() {
        if branch.iter().all(|&b| !g.adjacent(b, v)) {
            branch.push(v);
            if choose_branch(g, t, v + 1, branch, visit) {
                return true;
            }
            branch.pop();
        }
    }
    false
}

struct State<'a> {
    g: &'a Graph,
    branch: &'a [usize],
    lo: usize,
    hi: usize,
    /// Internal vertices of the paths routed so far.
    used: Vec<bool>,
    paths: Vec<PairPath>,
}

impl State<'_> {
    /// May `v` serve as an internal vertex of the path for `(i, j)`?
    fn free(&self, v: usize, i: usize, j: usize) -> bool {
        let g = self.g;
        if self.used[v] || self.branch.contains(&v) {
            return false;
        }
        if (0..g.n()).any(|u| self.used[u] && g.adjacent(u, v)) {
            return false;
        }
        self.branch
            .iter()
            .enumerate()
            .all(|(k, &b)| k == i || k == j || !g.adjacent(b, v))
    }

    fn route(&mut self, pairs: &[(usize, usize)], idx: usize) -> bool {
        let Some(&(i, j)) = pairs.get(idx) else {
            return true;
        };
        let bi = self.branch[i];
        let starts: Vec<usize> = self.g.neighbors(bi).to_vec();
        for v in starts {
            if !self.free(v, i, j) {
                continue;
            }
            let mut path = vec![v];
            if self.walk(pairs, idx, &mut path) {
                return true;
            }
        }
        false
    }

    /// Extends the internal path for pair `pairs[idx]`; on reaching the
    /// second branch vertex, commits it and routes the remaining pairs.
    fn walk(&mut self, pairs: &[(usize, usize)], idx: usize, path: &mut Vec<usize>) -> bool {
        let g = self.g;
        let (i, j) = pairs[idx];
        let (bi, bj) = (self.branch[i], self.branch[j]);
        let last = *path.last().unwrap();
        if g.adjacent(last, bj) {
            let len = path.len() + 1;
            if !(self.lo..=self.hi).contains(&len) {
                return false;
            }
            for &v in path.iter() {
                self.used[v] = true;
            }
            self.paths.push(PairPath { pair: (i, j), vertices: path.clone() });
            if self.route(pairs, idx + 1) {
                return true;
            }
            self.paths.pop();
            for &v in path.iter() {
                self.used[v] = false;
            }
            return false;
        }
        if path.len() + 2 > self.hi {
            return false;
        }
        let next: Vec<usize> = g.neighbors(last).to_vec();
        for v in next {
            if path.contains(&v) || !self.free(v, i, j) || g.adjacent(v, bi) {
                continue;
            }
            if path[..path.len() - 1].iter().any(|&u| g.adjacent(u, v)) {
                continue;
            }
            path.push(v);
            if self.walk(pairs, idx, path) {
                return true;
            }
            path.pop();
        }
        false
    }
}
