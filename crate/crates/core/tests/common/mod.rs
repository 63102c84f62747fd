//! Seeded corpora shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use indsub::certificates::SubdivisionCertificate;
use indsub::generators::{chordal, clique_upper_bound, gnp, planted_subdivision};
use indsub::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub t: usize,
    pub k: usize,
    pub planted: Option<SubdivisionCertificate>,
}

impl Instance {
    fn new(name: String, graph: Graph, t: usize, planted: Option<SubdivisionCertificate>) -> Self {
        let k = clique_upper_bound(&graph).max(1);
        Instance { name, graph, t, k, planted }
    }
}

pub const GNP_SIZES: [usize; 8] = [16, 32, 64, 128, 256, 512, 1024, 2048];
pub const GNP_PS: [f64; 7] = [0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.5];

/// `count` G(n, p) instances cycling through the size and density grids.
pub fn gnp_instances(count: usize) -> Vec<Instance> {
    (0..count)
        .map(|i| {
            let n = GNP_SIZES[i % GNP_SIZES.len()];
            let p = GNP_PS[(i / GNP_SIZES.len()) % GNP_PS.len()];
            let g = gnp(n, p, 1000 + i as u64).unwrap();
            Instance::new(format!("gnp-{i:03}-n{n}-p{p}"), g, 3 + i % 2, None)
        })
        .collect()
}

/// Chordal instances with `lo <= n <= hi`.
pub fn chordal_instances(count: usize, lo: usize, hi: usize, seed: u64) -> Vec<Instance> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = r.gen_range(lo..=hi);
            let (g, _) = chordal(n, seed * 1000 + i as u64);
            Instance::new(format!("chordal-{i:03}-n{n}"), g, 3, None)
        })
        .collect()
}

/// Planted subdivisions, `t` in {3, 4}, lengths in 3..=5, noise at most 30.
pub fn planted_instances(count: usize, seed: u64) -> Vec<Instance> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let t = 3 + i % 2;
            let mut lengths = BTreeMap::new();
            for a in 0..t {
                for b in a + 1..t {
                    lengths.insert((a, b), r.gen_range(3..=5));
                }
            }
            let noise_n = r.gen_range(0..=30);
            let noise_p = [0.05, 0.1, 0.2][i % 3];
            let (g, c) = planted_subdivision(t, &lengths, noise_n, noise_p, seed * 1000 + i as u64).unwrap();
            Instance::new(format!("planted-{i:03}-t{t}-noise{noise_n}"), g, t, Some(c))
        })
        .collect()
}

/// The 500-instance sweep: 400 G(n, p), 50 chordal, 50 planted.
pub fn sweep_corpus() -> Vec<Instance> {
    let mut v = gnp_instances(400);
    v.extend(chordal_instances(50, 16, 64, 7));
    v.extend(planted_instances(50, 11));
    v
}
