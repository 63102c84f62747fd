use super::OracleError;
use crate::graph::Graph;

const LIMIT: usize = 64;

/// An induced cycle with `lo <= length <= hi`, found by extending induced
/// paths from each possible minimum vertex. Returned as the cyclic vertex
/// sequence starting at its smallest vertex.
pub fn induced_cycle_in_range(g: &Graph, lo: usize, hi: usize) -> Result<Option<Vec<usize>>, OracleError> {
    if lo < 3 || lo > hi {
        return Err(OracleError::BadRange { lo, hi });
    }
    if g.n() > LIMIT {
        return Err(OracleError::TooLarge { n: g.n(), limit: LIMIT });
    }
    for s in 0..g.n() {
        let mut path = vec![s];
        if extend(g, &mut path, lo, hi) {
            return Ok(Some(path));
        }
    }
    Ok(None)
}

/// `path` is induced, starts at its minimum vertex, and (past the first two
/// vertices) has no chord to `path[0]`.
fn extend(g: &Graph, path: &mut Vec<usize>, lo: usize, hi: usize) -> bool {
    let s = path[0];
    let last = *path.last().unwrap();
    let m = path.len();
    for &v in g.neighbors(last) {
        if v <= s || path.contains(&v) {
            continue;
        }
        // No chords to interior path vertices.
        if path.iter().skip(1).take(m.saturating_sub(2)).any(|&u| g.adjacent(u, v)) {
            continue;
        }
        let closes = m >= 2 && g.adjacent(v, s);
        if closes {
            // Cycle path + v has m + 1 vertices and edges.
            if (lo..=hi).contains(&(m + 1)) {
                path.push(v);
                return true;
            }
            continue;
        }
        if m + 1 < hi {
            path.push(v);
            if extend(g, path, lo, hi) {
                return true;
            }
            path.pop();
        }
    }
    false
}
