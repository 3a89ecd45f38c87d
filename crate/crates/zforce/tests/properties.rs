//! Randomized structural properties of the closure, the heuristics, the
//! generators and the graph container.

use proptest::prelude::*;
use zforce::generators::{deactivation_probabilities, gen_pa, gen_uniform, PaParams};
use zforce::graph::Graph;
use zforce::metrics::{diameter, DiameterMethod};
use zforce::vertex_cover::{exact_vertex_cover, is_vertex_cover, lm_vertex_cover};
use zforce::zero_forcing::{
    closure, exact_zero_forcing, is_forcing_set, lm_zero_forcing, LmMode,
};

/// Reference closure that scans vertices in descending id order and applies
/// one force per sweep — the slowest possible order. Confluence says the
/// fixed point must match the queue-based implementation.
fn closure_reverse_order(g: &Graph, initial: &[usize]) -> Vec<usize> {
    let mut black = vec![false; g.n_total()];
    for &v in initial {
        if g.is_alive(v) {
            black[v] = true;
        }
    }
    loop {
        let mut changed = false;
        let vertices: Vec<usize> = g.alive_vertices().collect();
        for &v in vertices.iter().rev() {
            if !black[v] {
                continue;
            }
            let whites: Vec<usize> = g.neighbors(v).filter(|&u| !black[u]).collect();
            if whites.len() == 1 {
                black[whites[0]] = true;
                changed = true;
                break; // one force per sweep
            }
        }
        if !changed {
            break;
        }
    }
    g.alive_vertices().filter(|&v| black[v]).collect()
}

prop_compose! {
    fn arbitrary_graph()(n in 2usize..=10, p in 0.0f64..=1.0, seed in any::<u64>()) -> Graph {
        gen_uniform(n, p, seed).expect("valid params")
    }
}

proptest! {
    #[test]
    fn closure_is_confluent(n in 2usize..=10, p in 0.0f64..=1.0, seed in any::<u64>(), mask in any::<u16>()) {
        let g = gen_uniform(n, p, seed).unwrap();
        let initial: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
        prop_assert_eq!(closure(&g, &initial), closure_reverse_order(&g, &initial));
    }

    #[test]
    fn closure_is_monotone(n in 2usize..=10, p in 0.0f64..=1.0, seed in any::<u64>(), mask in any::<u16>(), extra in any::<u16>()) {
        let g = gen_uniform(n, p, seed).unwrap();
        let small: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
        let big: Vec<usize> = (0..n).filter(|v| (mask | extra) & (1 << v) != 0).collect();
        let cl_small = closure(&g, &small);
        let cl_big = closure(&g, &big);
        prop_assert!(cl_small.iter().all(|v| cl_big.contains(v)));
    }

    #[test]
    fn forcing_supersets_stay_forcing(n in 2usize..=10, p in 0.0f64..=1.0, seed in any::<u64>(), extra in any::<u16>()) {
        let g = gen_uniform(n, p, seed).unwrap();
        let (_, witness) = exact_zero_forcing(&g).unwrap();
        let mut superset = witness;
        for v in (0..n).filter(|v| extra & (1 << v) != 0) {
            if !superset.contains(&v) {
                superset.push(v);
            }
        }
        prop_assert!(is_forcing_set(&g, &superset));
    }

    #[test]
    fn heuristics_are_valid_upper_bounds(n in 2usize..=10, p in 0.0f64..=1.0, seed in any::<u64>()) {
        let g = gen_uniform(n, p, seed).unwrap();
        let (z, _) = exact_zero_forcing(&g).unwrap();
        for mode in [LmMode::ClosureConsistent, LmMode::StrictLiteral] {
            let r = lm_zero_forcing(&g, mode);
            prop_assert!(is_forcing_set(&g, &r.zfs), "invalid forcing set in {mode:?}");
            prop_assert!(r.z_lm >= z);
            prop_assert!(r.delta_z <= r.z_lm);
        }
        let (v, _) = exact_vertex_cover(&g).unwrap();
        let c = lm_vertex_cover(&g);
        prop_assert!(is_vertex_cover(&g, &c.cover));
        prop_assert!(c.v_lm >= v);
    }

    #[test]
    fn edge_list_round_trips(g in arbitrary_graph()) {
        let text = g.to_edge_list();
        let back = Graph::from_edge_list(&text).unwrap();
        prop_assert_eq!(text, back.to_edge_list());
    }

    #[test]
    fn pa_degree_floor_and_handshake(n in 4usize..=60, m in 1usize..=3, a in 0.05f64..4.0, seed in any::<u64>()) {
        prop_assume!(n > m);
        let g = gen_pa(&PaParams { n, m, a }, seed).unwrap();
        let degree_sum: usize = g.alive_vertices().map(|v| g.degree(v)).sum();
        prop_assert_eq!(degree_sum, 2 * g.edge_count());
        prop_assert!(g.alive_vertices().all(|v| g.degree(v) >= m));
    }

    #[test]
    fn deactivation_probs_always_normalize(degs in prop::collection::vec(2usize..50, 1..12), a in 0.05f64..4.0) {
        let m = 2usize;
        let probs = deactivation_probabilities(&degs, m, a).unwrap();
        let sum: f64 = probs.iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-12);
    }

    #[test]
    fn two_sweep_never_exceeds_exact(n in 2usize..=14, p in 0.05f64..=0.6, seed in any::<u64>()) {
        let g = gen_uniform(n, p, seed).unwrap();
        let lo = diameter(&g, DiameterMethod::TwoSweep).unwrap();
        let hi = diameter(&g, DiameterMethod::Exact).unwrap();
        prop_assert!(lo.diameter <= hi.diameter);
        prop_assert_eq!(lo.component_count, hi.component_count);
    }
}
