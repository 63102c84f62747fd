//! The dichotomy on a cycle with isolated vertices: faithful constants return
//! a stable set at once; scaled constants with the pipeline forced run the
//! full construction.

use indsub::certificates::verify_subdivision;
use indsub::{extract, Certified, Graph, Params};

fn main() {
    let mut edges: Vec<(usize, usize)> = (0..9).map(|i| (i, (i + 1) % 9)).collect();
    edges.sort();
    let g = Graph::new(29, edges).expect("valid graph");

    let faithful = extract(&g, &Params::faithful(3, 2)).expect("faithful run");
    println!("faithful: {:?}", faithful.result);

    let scaled = extract(&g, &Params::scaled(3, 2).with_force_pipeline(true)).expect("scaled run");
    match &scaled.result {
        Certified::Subdivision(c) => {
            println!("subdivision: branch {:?}, lengths {:?}", c.branch, c.lengths());
            assert!(verify_subdivision(&g, c).is_valid());
        }
        other => println!("scaled: {other:?}"),
    }
    print!("{}", scaled.trace_text());
}
