//! Restricted breadth-first search: radius layers and shortest induced connectors.

use crate::graph::{Graph, GraphError, Path};
use crate::vertex_set::VertexSet;

/// Radius layers around `sources` inside `allowed`.
///
/// `layers[r]` is the set of vertices reachable from `sources` by a path of
/// length at most `r` whose non-source vertices all lie in `allowed`. The
/// sources themselves count at radius 0 whether or not they are allowed.
pub fn bfs_layers(
    g: &Graph,
    sources: &VertexSet,
    allowed: &VertexSet,
    r_max: usize,
) -> Vec<VertexSet> {
    let mut layers = Vec::with_capacity(r_max + 1);
    let mut current = sources.clone();
    let mut frontier = sources.clone();
    layers.push(current.clone());
    for _ in 0..r_max {
        let mut next = VertexSet::empty(g.n());
        if !frontier.is_empty() {
            next = g.open_neighborhood(&frontier);
            next.intersect_with(allowed);
            next.difference_with(&current);
        }
        current.union_with(&next);
        frontier = next;
        layers.push(current.clone());
    }
    layers
}

/// One breadth-first step: `layer` plus its neighbours in `allowed`.
pub fn expand_layer(g: &Graph, layer: &VertexSet, allowed: &VertexSet) -> VertexSet {
    let mut next = g.open_neighborhood(layer);
    next.intersect_with(allowed);
    next.union_with(layer);
    next
}

/// Shortest path starting in `from` and ending in `to` whose internal vertices
/// lie in `allowed` and avoid `from ∪ to`.
///
/// Being globally shortest, the path is induced in `G[from ∪ to ∪ allowed]`
/// and meets each endpoint set exactly once. Among shortest paths the
/// lexicographically smallest vertex sequence is returned. `None` if either
/// endpoint set is empty or no such path exists.
pub fn shortest_pair_path(
    g: &Graph,
    from: &VertexSet,
    to: &VertexSet,
    allowed: &VertexSet,
) -> Result<Option<Path>, GraphError> {
    if from.intersects(to) {
        return Err(GraphError::OverlappingEndpoints);
    }
    if from.is_empty() || to.is_empty() {
        return Ok(None);
    }
    let n = g.n();
    let mut interior = allowed.difference(from);
    interior.difference_with(to);

    // Distance to `to` through interior vertices.
    const UNSEEN: usize = usize::MAX;
    let mut dist = vec![UNSEEN; n];
    for v in to {
        dist[v] = 0;
    }
    let mut reached = to.clone();
    let mut frontier = to.clone();
    let mut r = 0;
    let mut best_start: Option<usize> = None;
    loop {
        // Does some source touch the current frontier?
        let touching: Vec<usize> = from
            .iter()
            .filter(|&s| g.neighbor_set(s).intersects(&frontier))
            .collect();
        if !touching.is_empty() {
            best_start = touching.first().copied();
            for &s in &touching {
                dist[s] = r + 1;
            }
            break;
        }
        let mut next = g.open_neighborhood(&frontier);
        next.intersect_with(&interior);
        next.difference_with(&reached);
        if next.is_empty() {
            break;
        }
        r += 1;
        for v in &next {
            dist[v] = r;
        }
        reached.union_with(&next);
        frontier = next;
    }
    let Some(start) = best_start else {
        return Ok(None);
    };

    let mut vertices = vec![start];
    let mut cur = start;
    while dist[cur] > 0 {
        let want = dist[cur] - 1;
        let step = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&u| {
                dist[u] == want
                    && if want == 0 {
                        to.contains(u)
                    } else {
                        interior.contains(u)
                    }
            })
            .expect("distance labels are consistent");
        vertices.push(step);
        cur = step;
    }
    Ok(Some(Path::new(vertices)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(layers: &[VertexSet]) -> Vec<Vec<usize>> {
        layers.iter().map(VertexSet::to_vec).collect()
    }

    #[test]
    fn bfs_layer_examples() {
        let p5 = Graph::path(5);
        let l = bfs_layers(&p5, &p5.vertex_set([0]), &p5.all(), 2);
        assert_eq!(sets(&l), vec![vec![0], vec![0, 1], vec![0, 1, 2]]);

        let blocked = p5.all().difference(&p5.vertex_set([1]));
        let l = bfs_layers(&p5, &p5.vertex_set([0]), &blocked, 3);
        assert_eq!(sets(&l), vec![vec![0]; 4]);

        let c6 = Graph::cycle(6);
        let l = bfs_layers(&c6, &c6.vertex_set([0, 3]), &c6.all(), 1);
        assert_eq!(sets(&l), vec![vec![0, 3], vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn sources_outside_allowed_still_seed() {
        let p3 = Graph::path(3);
        let l = bfs_layers(&p3, &p3.vertex_set([0]), &p3.vertex_set([1, 2]), 2);
        assert_eq!(sets(&l)[2], vec![0, 1, 2]);
    }

    // u=0, a=1, w=2, b=3, c=4: u-a-w and u-b-c-w.
    fn two_routes() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (0, 3), (3, 4), (4, 2)]).unwrap()
    }

    #[test]
    fn shortest_pair_path_examples() {
        let g = two_routes();
        let from = g.vertex_set([0]);
        let to = g.vertex_set([2]);
        let p = shortest_pair_path(&g, &from, &to, &g.vertex_set([1, 3, 4]))
            .unwrap()
            .unwrap();
        assert_eq!(p.vertices, vec![0, 1, 2]);
        let p = shortest_pair_path(&g, &from, &to, &g.vertex_set([3, 4]))
            .unwrap()
            .unwrap();
        assert_eq!(p.vertices, vec![0, 3, 4, 2]);
        assert_eq!(p.length(), 3);
        assert!(shortest_pair_path(&g, &from, &to, &g.vertex_set([]))
            .unwrap()
            .is_none());
    }

    #[test]
    fn overlapping_endpoints_rejected() {
        let g = Graph::path(3);
        let s = g.vertex_set([0, 1]);
        assert!(matches!(
            shortest_pair_path(&g, &s, &g.vertex_set([1]), &g.all()),
            Err(GraphError::OverlappingEndpoints)
        ));
    }

    #[test]
    fn adjacent_endpoint_sets_give_single_edge() {
        let g = Graph::path(4);
        let p = shortest_pair_path(&g, &g.vertex_set([0, 1]), &g.vertex_set([2, 3]), &g.all())
            .unwrap()
            .unwrap();
        assert_eq!(p.vertices, vec![1, 2]);
    }

    #[test]
    fn lexicographic_tie_break() {
        // 0 reaches 5 via 1 or via 2; both length 2.
        let g = Graph::new(6, [(0, 2), (2, 5), (0, 1), (1, 5)]).unwrap();
        let p = shortest_pair_path(&g, &g.vertex_set([0]), &g.vertex_set([5]), &g.all())
            .unwrap()
            .unwrap();
        assert_eq!(p.vertices, vec![0, 1, 5]);
    }
}
