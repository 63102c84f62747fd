//! How the guaranteed stable-set size and the path-length cap scale with `n`.

use indsub::certificates::{bound_clique_free, bound_main, ceil_bound, max_subdivision_len};

fn main() {
    println!("{:>12} {:>4} {:>14} {:>14} {:>8}", "n", "k", "bound (d=n)", "clique-free", "max len");
    for exp in [8u32, 16, 32, 48, 63] {
        let n = 1usize << exp;
        for k in [2, 3] {
            let b = bound_main(n, k, 3, n).expect("valid parameters");
            let cf = bound_clique_free(n, 3).expect("valid parameters");
            println!("{n:>12} {k:>4} {:>14} {:>14} {:>8}", ceil_bound(b), ceil_bound(cf), max_subdivision_len(n));
        }
    }
}
