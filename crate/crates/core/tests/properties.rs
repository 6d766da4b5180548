//! Property-based invariants on randomized small graphs, each checked against
//! an independent brute-force oracle.

use proptest::prelude::*;

use molirr_core::indices::{albertson_irr, degree_variance, t_index, total_irr};
use molirr_core::spectral::lambda1_power;
use molirr_core::{Graph, Rational};

/// O(n²) pairwise total irregularity, independent of the degree-count path.
fn brute_force_total_irr(g: &Graph) -> u64 {
    let degs: Vec<i64> = (0..g.n()).map(|v| g.degree(v) as i64).collect();
    let mut sum = 0u64;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            sum += (degs[u] - degs[v]).unsigned_abs();
        }
    }
    sum
}

/// Variance via the second closed form, `Σᵢ nᵢ(i − 2m/n)² / n`.
fn variance_second_form(g: &Graph) -> Rational {
    let ds = g.degree_sequence().unwrap();
    let mean = ds.mean_degree;
    let mut acc = Rational::new(0, 1);
    for (&d, &count) in &ds.counts {
        let dev = Rational::new(d as i128, 1) - mean;
        acc += dev * dev * Rational::new(count as i128, 1);
    }
    acc / Rational::new(ds.n as i128, 1)
}

/// Arbitrary simple graph on up to `max_n` vertices.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

/// Arbitrary connected graph: a random spanning path plus random extra edges.
fn arb_connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (proptest::collection::vec(any::<bool>(), pairs), Just(n)).prop_map(move |(mask, n)| {
            let mut edges: Vec<(u32, u32)> = (0..n as u32 - 1).map(|v| (v, v + 1)).collect();
            let mut idx = 0;
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if mask[idx] && v > u + 1 {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn handshake_and_symmetry(g in arb_graph(24)) {
        let degree_sum: usize = (0..g.n()).map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.m());
        for v in 0..g.n() {
            for &u in g.neighbors(v) {
                prop_assert!(g.neighbors(u as usize).contains(&(v as u32)));
                prop_assert_ne!(u as usize, v);
            }
        }
    }

    #[test]
    fn total_irr_matches_brute_force(g in arb_graph(24)) {
        let ds = g.degree_sequence().unwrap();
        prop_assert_eq!(total_irr(&ds), brute_force_total_irr(&g));
    }

    #[test]
    fn variance_forms_agree_exactly(g in arb_graph(24)) {
        let ds = g.degree_sequence().unwrap();
        prop_assert_eq!(degree_variance(&ds), variance_second_form(&g));
    }

    #[test]
    fn albertson_irr_is_imbalance_sum_over_edge_classes(g in arb_graph(24)) {
        let classes = molirr_core::generators::edge_classes(&g);
        let by_class: u64 = classes.iter().map(|(&(lo, hi), &c)| (hi - lo) as u64 * c).sum();
        prop_assert_eq!(albertson_irr(&g), by_class);
    }

    #[test]
    fn cartesian_product_counts_and_adjacency(a in arb_graph(6), b in arb_graph(6)) {
        let prod = a.cartesian_product(&b);
        prop_assert_eq!(prod.n(), a.n() * b.n());
        prop_assert_eq!(prod.m(), a.n() * b.m() + b.n() * a.m());
        // brute-force adjacency rule on all vertex pairs
        let nh = b.n();
        for x in 0..prod.n() {
            for y in x + 1..prod.n() {
                let (i, j) = (x / nh, x % nh);
                let (i2, j2) = (y / nh, y % nh);
                let expected = (i == i2 && b.neighbors(j).contains(&(j2 as u32)))
                    || (j == j2 && a.neighbors(i).contains(&(i2 as u32)));
                prop_assert_eq!(prod.neighbors(x).contains(&(y as u32)), expected);
            }
        }
    }

    #[test]
    fn mycielski_law_and_size(g in arb_connected_graph(12)) {
        let m = g.mycielski();
        prop_assert_eq!(m.n(), 2 * g.n() + 1);
        prop_assert_eq!(m.m(), 3 * g.m() + g.n());
        for v in 0..g.n() {
            prop_assert_eq!(m.degree(v), 2 * g.degree(v));
            prop_assert_eq!(m.degree(g.n() + v), g.degree(v) + 1);
        }
        prop_assert_eq!(m.degree(2 * g.n()), g.n());
    }

    #[test]
    fn regularity_equivalences_on_connected_graphs(g in arb_connected_graph(14)) {
        let ds = g.degree_sequence().unwrap();
        let regular = ds.counts.len() == 1;
        prop_assert_eq!(albertson_irr(&g) == 0, regular);
        prop_assert_eq!(total_irr(&ds) == 0, regular);
        prop_assert_eq!(degree_variance(&ds) == Rational::new(0, 1), regular);
        prop_assert_eq!(t_index(&ds) == 1, regular);
    }

    #[test]
    fn perron_sandwich_on_connected_graphs(g in arb_connected_graph(14)) {
        let ds = g.degree_sequence().unwrap();
        let r = lambda1_power(&g, 1e-10, 2_000_000).unwrap();
        let mean = 2.0 * g.m() as f64 / g.n() as f64;
        prop_assert!(r.lambda1 >= mean - 1e-8, "λ₁ {} below mean {}", r.lambda1, mean);
        prop_assert!(r.lambda1 <= ds.max_degree as f64 + 1e-8);
        prop_assert!(r.residual <= 1e-10 * r.lambda1.max(1.0));
    }

    #[test]
    fn lambda1_monotone_under_edge_addition(g in arb_connected_graph(10)) {
        // find a non-edge; skip complete inputs
        let mut extra = None;
        'outer: for u in 0..g.n() as u32 {
            for v in u + 1..g.n() as u32 {
                if !g.neighbors(u as usize).contains(&v) {
                    extra = Some((u, v));
                    break 'outer;
                }
            }
        }
        if let Some(e) = extra {
            let mut edges: Vec<(u32, u32)> = g.edges().collect();
            edges.push(e);
            let bigger = Graph::from_edges(g.n(), &edges).unwrap();
            let before = lambda1_power(&g, 1e-10, 2_000_000).unwrap().lambda1;
            let after = lambda1_power(&bigger, 1e-10, 2_000_000).unwrap().lambda1;
            prop_assert!(after >= before - 1e-8, "λ₁ dropped: {before} -> {after}");
        }
    }
}
