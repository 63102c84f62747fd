use super::OracleError;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;
const LIMIT: usize = 128;

/// Maximum stable set by branch and bound, as a maximum clique of the
/// complement over `u128` masks. Candidates are coloured greedily (colour
/// classes are cliques of `g`) and a branch is cut once the current set plus
/// the colour count cannot beat the incumbent.
pub fn exact_max_stable(g: &Graph, budget: u64) -> Result<VertexSet, OracleError> {
    let n = g.n();
    if n > LIMIT {
        return Err(OracleError::TooLarge { n, limit: LIMIT });
    }
    // Relabel by descending complement degree, i.e. ascending degree in g.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut comp = vec![0u128; n];
    for (i, &u) in order.iter().enumerate() {
        for (j, &v) in order.iter().enumerate() {
            if i != j && !g.adjacent(u, v) {
                comp[i] |= 1 << j;
            }
        }
    }
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut s = Search {
        comp: &comp,
        best: 0,
        best_len: 0,
        nodes: 0,
        budget,
    };
    s.expand(0, 0, all)?;
    Ok(VertexSet::from_ids(
        n,
        (0..n).filter(|&i| s.best >> i & 1 == 1).map(|i| order[i]),
    ))
}

struct Search<'a> {
    comp: &'a [u128],
    best: u128,
    best_len: u32,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// Greedy colouring of `p`: vertices in colour order with their colours.
    fn colour(&self, mut p: u128) -> Vec<(usize, u32)> {
        let mut out = Vec::with_capacity(p.count_ones() as usize);
        let mut c = 0;
        while p != 0 {
            c += 1;
            let mut avail = p;
            while avail != 0 {
                let v = avail.trailing_zeros() as usize;
                avail &= !(1u128 << v) & !self.comp[v];
                p &= !(1u128 << v);
                out.push((v, c));
            }
        }
        out
    }

    fn expand(&mut self, r: u128, r_len: u32, mut p: u128) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::Budget(self.budget));
        }
        if p == 0 {
            if r_len > self.best_len {
                self.best = r;
                self.best_len = r_len;
            }
            return Ok(());
        }
        for (v, c) in self.colour(p).into_iter().rev() {
            if r_len + c <= self.best_len {
                return Ok(());
            }
            let bit = 1u128 << v;
            self.expand(r | bit, r_len + 1, p & self.comp[v])?;
            p &= !bit;
        }
        if r_len > self.best_len {
            self.best = r;
            self.best_len = r_len;
        }
        Ok(())
    }
}
