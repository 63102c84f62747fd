//! The exact oracles on the Petersen graph: independence number, induced
//! cycles by length, and small subdivisions.

use indsub::oracle::{exact_max_stable, exhaustive_subdivision_search, induced_cycle_in_range, DEFAULT_NODE_BUDGET};
use indsub::Graph;

fn main() {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    let g = Graph::new(10, outer.chain(spokes).chain(inner)).expect("valid graph");

    let s = exact_max_stable(&g, DEFAULT_NODE_BUDGET).expect("small graph");
    println!("alpha = {} via {:?}", s.len(), s.to_vec());
    for len in 3..=10 {
        let c = induced_cycle_in_range(&g, len, len).expect("valid range");
        println!("induced cycle of length {len}: {c:?}");
    }
    for (lo, hi) in [(2, 2), (3, 9)] {
        let found = exhaustive_subdivision_search(&g, 3, lo, hi, 15).expect("within size limit");
        println!("K_3 subdivision with lengths in [{lo}, {hi}]: {}", found.map_or("none".into(), |c| format!("{:?}", c.lengths())));
    }
}
