use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Minimum-degree greedy stable set inside `view`: take a vertex of least
/// remaining degree (smallest id on ties), delete its closed neighbourhood,
/// repeat. Has size at least `ceil(|view| / (Δ + 1))`.
pub fn greedy_stable(g: &Graph, view: &VertexSet) -> VertexSet {
    let n = g.n();
    let mut alive = view.clone();
    let mut deg = vec![0usize; n];
    for v in view {
        deg[v] = g.degree_within(v, view);
    }
    let mut out = VertexSet::empty(n);
    while let Some(v) = alive.iter().min_by_key(|&v| (deg[v], v)) {
        out.insert(v);
        let mut removed = g.neighbor_set(v).intersection(&alive);
        removed.insert(v);
        alive.difference_with(&removed);
        for u in &removed {
            for &w in g.neighbors(u) {
                if alive.contains(w) {
                    deg[w] -= 1;
                }
            }
        }
    }
    out
}

/// For views of maximum degree at most one: the smaller endpoint of every
/// edge plus every isolated vertex.
pub fn matching_stable(g: &Graph, view: &VertexSet) -> VertexSet {
    let mut out = VertexSet::empty(g.n());
    for v in view {
        if !g.neighbor_set(v).intersects(&out) {
            out.insert(v);
        }
    }
    out
}
