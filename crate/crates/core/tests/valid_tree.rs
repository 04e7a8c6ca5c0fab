use iterbound::graph::TannerGraph;
use iterbound::oracle::gf2::{local_system, min_weight_root_one};
use iterbound::oracle::valid_tree::*;

fn is_codeword(g: &TannerGraph, tree: &ValidTree, l: usize) -> bool {
    let sys = local_system(g, tree.root, l);
    sys.rows.iter().all(|row| row.iter().filter(|&&i| tree.variables.contains(&sys.variables[i])).count() % 2 == 0)
}

#[test]
fn tree_like_regular_weight_four() {
    let checks = vec![vec![0, 1, 2, 3], vec![0, 4, 5, 6], vec![0, 7, 8, 9]];
    let g = TannerGraph::from_check_lists(10, checks).unwrap();
    let tree = valid_tree_search(&g, 0, 1).unwrap();
    assert_eq!(tree.weight(), 4);
    assert_eq!(tree.checks.len(), 3);
    assert!(is_codeword(&g, &tree, 1));
}

#[test]
fn degree_one_check_blocks_the_tree() {
    let g = TannerGraph::from_check_lists(3, vec![vec![0], vec![0, 1, 2]]).unwrap();
    assert_eq!(valid_tree_search(&g, 0, 1), None);
}

#[test]
fn height_zero_is_the_root() {
    let g = TannerGraph::from_check_lists(3, vec![vec![0, 1, 2]]).unwrap();
    let tree = valid_tree_search(&g, 1, 0).unwrap();
    assert_eq!(tree.variables, vec![1]);
}

#[test]
fn oracle_never_exceeds_tree_weight() {
    let spec = iterbound::graph::EnsembleSpec::regular(24, 3, 4).unwrap();
    let mut found = 0;
    for seed in 0..20 {
        let g = iterbound::graph::sample_graph(&spec, seed).unwrap();
        for v in 0..g.n_vars() {
            for l in 1..=2 {
                if let Some(tree) = valid_tree_search(&g, v, l) {
                    found += 1;
                    assert!(is_codeword(&g, &tree, l));
                    let m = min_weight_root_one(&local_system(&g, v, l)).unwrap().unwrap();
                    assert!(m.weight <= tree.weight());
                }
            }
        }
    }
    assert!(found > 0);
}
