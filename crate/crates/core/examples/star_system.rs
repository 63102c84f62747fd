//! Sparsifying a semi-sparse star system: leaf sets at least halve and the
//! pairwise density drops below `q`.

use indsub::extractor::sparsify_star_system;
use indsub::generators::star_system_instance;

fn main() {
    let sizes = [40, 32, 28, 24, 20];
    let q = 0.4;
    let semi = q / (2.0 * sizes.len() as f64);
    let (g, sys) = star_system_instance(&sizes, semi, 7);
    println!("input: semi-sparsity {:.3} (<= {semi:.3}), sparsity {:.3}", sys.semi_sparsity(&g), sys.sparsity(&g));
    let out = sparsify_star_system(&g, &sys, q);
    for (b, c) in sys.leaves.iter().zip(&out.leaves) {
        println!("  |B| = {:>3}  ->  |C| = {:>3}", b.len(), c.len());
    }
    println!("output: sparsity {:.3} (<= {q}), violations {:?}", out.sparsity(&g), out.violations(&g));
}
