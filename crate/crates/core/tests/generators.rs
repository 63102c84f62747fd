use std::collections::BTreeMap;

use indsub::generators::{
    chordal, clique_upper_bound, gnp, is_perfect_elimination_order, planted_subdivision, star_system_instance,
    uniform_lengths, GenError,
};
use indsub::oracle::induced_cycle_in_range;
use indsub::{verify_subdivision, Graph};
use proptest::prelude::*;

fn clique_number(g: &Graph) -> usize {
    let n = g.n();
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    (0u32..1 << n)
        .filter(|&mask| (0..n).all(|v| mask & (1 << v) == 0 || (mask & !(1 << v)) & !nbr[v] == 0))
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

#[test]
fn gnp_extremes_and_seeds() {
    assert_eq!(gnp(10, 0.0, 1).unwrap().edge_count(), 0);
    assert_eq!(gnp(10, 1.0, 1).unwrap(), Graph::complete(10));
    assert_eq!(gnp(40, 0.3, 9).unwrap(), gnp(40, 0.3, 9).unwrap());
    assert_ne!(gnp(40, 0.3, 9).unwrap(), gnp(40, 0.3, 10).unwrap());
    assert!(matches!(gnp(5, 1.5, 0), Err(GenError::Probability(_))));
    assert!(matches!(gnp(5, -0.1, 0), Err(GenError::Probability(_))));
}

#[test]
fn chordal_graphs_come_with_elimination_orders() {
    let (g, order) = chordal(1, 0);
    assert_eq!((g.n(), order), (1, vec![0]));
    for seed in 0..20 {
        let (g, order) = chordal(30, seed);
        assert!(is_perfect_elimination_order(&g, &order));
        assert_eq!(induced_cycle_in_range(&g, 4, 30).unwrap(), None);
    }
    let c4 = Graph::cycle(4);
    assert!(!is_perfect_elimination_order(&c4, &[0, 1, 2, 3]));
}

#[test]
fn planted_examples() {
    let (g, c) = planted_subdivision(3, &uniform_lengths(3, 3), 0, 0.0, 4).unwrap();
    assert_eq!(g.n(), 9);
    assert_eq!(g.edge_count(), 9);
    assert!((0..9).all(|v| g.degree(v) == 2));
    assert!(verify_subdivision(&g, &c).is_valid());

    let (g, c) = planted_subdivision(4, &uniform_lengths(4, 4), 20, 0.3, 11).unwrap();
    assert_eq!(g.n(), 4 + 6 * 3 + 20);
    assert!(verify_subdivision(&g, &c).is_valid());

    let lengths = BTreeMap::from([((0, 1), 3), ((0, 2), 5), ((1, 2), 9)]);
    let (g, c) = planted_subdivision(3, &lengths, 0, 0.0, 2).unwrap();
    assert_eq!(g.n(), 17);
    assert_eq!(c.lengths(), vec![3, 5, 9]);
    assert!(c.max_len >= 9);
    assert!(verify_subdivision(&g, &c).is_valid());

    assert!(matches!(planted_subdivision(2, &uniform_lengths(2, 3), 0, 0.0, 0), Err(GenError::SmallT(2))));
    assert!(matches!(
        planted_subdivision(3, &uniform_lengths(3, 2), 0, 0.0, 0),
        Err(GenError::ShortPath(0, 1, 2))
    ));
    let mut partial = uniform_lengths(3, 3);
    partial.remove(&(1, 2));
    assert!(matches!(planted_subdivision(3, &partial, 0, 0.0, 0), Err(GenError::MissingPair(1, 2))));
    partial.insert((1, 3), 3);
    assert!(matches!(planted_subdivision(3, &partial, 0, 0.0, 0), Err(GenError::UnknownPair(1, 3))));
}

proptest! {
    #[test]
    fn gnp_is_deterministic(n in 0usize..60, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gnp(n, p, seed).unwrap();
        prop_assert_eq!(&g, &gnp(n, p, seed).unwrap());
        prop_assert_eq!(g.n(), n);
    }

    #[test]
    fn chordal_order_is_perfect(n in 1usize..60, seed in any::<u64>()) {
        let (g, order) = chordal(n, seed);
        prop_assert_eq!(g.n(), n);
        let mut sorted = order.clone();
        sorted.sort();
        prop_assert_eq!(sorted, (0..n).collect::<Vec<_>>());
        prop_assert!(is_perfect_elimination_order(&g, &order));
    }

    #[test]
    fn planted_certificates_verify(t in 3usize..=6, len in 3usize..=7, noise in 0usize..30, p in 0.0f64..0.5, seed in any::<u64>()) {
        let (g, c) = planted_subdivision(t, &uniform_lengths(t, len), noise, p, seed).unwrap();
        prop_assert_eq!(g.n(), t + t * (t - 1) / 2 * (len - 1) + noise);
        prop_assert!(verify_subdivision(&g, &c).is_valid());
    }

    #[test]
    fn star_system_instances_respect_semi_sparsity(sizes in proptest::collection::vec(1usize..30, 1..6), semi in 0.0f64..0.5, seed in any::<u64>()) {
        let (g, sys) = star_system_instance(&sizes, semi, seed);
        prop_assert!(sys.violations(&g).is_empty(), "{:?}", sys.violations(&g));
        prop_assert!(sys.semi_sparsity(&g) <= semi + 1e-12);
        prop_assert_eq!(sys.len(), sizes.len());
    }

    #[test]
    fn clique_bound_is_an_upper_bound(n in 1usize..=14, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gnp(n, p, seed).unwrap();
        let b = clique_upper_bound(&g);
        prop_assert!(b >= clique_number(&g));
        prop_assert!(b <= g.max_degree_all() + 1);
    }
}
