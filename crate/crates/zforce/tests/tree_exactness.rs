//! The leaf rules are supposed to be exact on forests: no maximum-degree
//! fallbacks, and heuristic sizes equal to the brute-force optimum for both
//! zero forcing (closure-consistent mode) and vertex cover. This suite
//! checks that on every labeled tree up to 8 vertices (via exhaustive
//! Prüfer enumeration) and on a large random sample of 9..=14 vertex trees.

use zforce::generators::{gen_random_tree, tree_from_prufer};
use zforce::graph::Graph;
use zforce::vertex_cover::{exact_vertex_cover, is_vertex_cover, lm_vertex_cover};
use zforce::zero_forcing::{exact_zero_forcing, is_forcing_set, lm_zero_forcing, LmMode};

fn assert_exact_on_tree(g: &Graph, label: &dyn Fn() -> String) {
    let (z_exact, _) = exact_zero_forcing(g).expect("within cap");
    let zf = lm_zero_forcing(g, LmMode::ClosureConsistent);
    assert!(
        is_forcing_set(g, &zf.zfs),
        "{}: emitted set is not forcing",
        label()
    );
    assert_eq!(
        zf.z_lm,
        z_exact,
        "{}: z_lm {} != exact {}",
        label(),
        zf.z_lm,
        z_exact
    );
    assert_eq!(zf.delta_z, 0, "{}: fallback fired on a tree", label());

    let (v_exact, _) = exact_vertex_cover(g).expect("within cap");
    let vc = lm_vertex_cover(g);
    assert!(
        is_vertex_cover(g, &vc.cover),
        "{}: emitted set is not a cover",
        label()
    );
    assert_eq!(
        vc.v_lm,
        v_exact,
        "{}: v_lm {} != exact {}",
        label(),
        vc.v_lm,
        v_exact
    );
    assert_eq!(vc.delta_v, 0, "{}: cover fallback fired on a tree", label());
}

#[test]
fn every_labeled_tree_up_to_8_vertices() {
    for n in 2..=8usize {
        let len = n - 2;
        let mut seq = vec![0usize; len];
        loop {
            let g = tree_from_prufer(&seq).unwrap();
            assert_exact_on_tree(&g, &|| format!("n={n}, prufer={seq:?}"));
            // odometer increment over base-n sequences
            let mut i = 0;
            while i < len {
                seq[i] += 1;
                if seq[i] < n {
                    break;
                }
                seq[i] = 0;
                i += 1;
            }
            if len == 0 || i == len {
                break;
            }
        }
    }
}

#[test]
fn random_trees_up_to_14_vertices() {
    for seed in 0..1500u64 {
        let n = 9 + (seed as usize) % 6;
        let g = gen_random_tree(n, 0xF0E1_D2C3 ^ seed).unwrap();
        assert_exact_on_tree(&g, &|| format!("n={n}, seed={seed}"));
    }
}

#[test]
fn strict_mode_stays_valid_on_trees() {
    for seed in 0..300u64 {
        let n = 4 + (seed as usize) % 11;
        let g = gen_random_tree(n, 0xABCD ^ seed).unwrap();
        let (z_exact, _) = exact_zero_forcing(&g).unwrap();
        let r = lm_zero_forcing(&g, LmMode::StrictLiteral);
        assert!(
            is_forcing_set(&g, &r.zfs),
            "seed {seed}: strict-literal set is not forcing"
        );
        assert!(
            r.z_lm >= z_exact,
            "seed {seed}: heuristic beat the exact optimum"
        );
    }
}
