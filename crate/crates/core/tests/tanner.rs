use iterbound::graph::tanner::*;

mod common;

use common::fig1_like;

#[test]
fn adjacency_is_mirrored() {
    let g = fig1_like();
    assert_eq!(g.n_vars(), 4);
    assert_eq!(g.n_checks(), 3);
    assert_eq!(g.edge_count(), 8);
    assert_eq!(g.var_neighbors(0), &[0, 2]);
    assert_eq!(g.var_neighbors(3), &[0, 2]);
}

#[test]
fn parallel_edges_and_bad_indices_are_rejected() {
    assert!(TannerGraph::from_check_lists(3, vec![vec![0, 0, 1]]).is_err());
    assert!(TannerGraph::from_check_lists(3, vec![vec![0, 3]]).is_err());
    assert!(TannerGraph::from_var_lists(1, vec![vec![0], vec![0, 0]]).is_err());
}

#[test]
fn distances() {
    let path = TannerGraph::from_check_lists(3, vec![vec![0, 1]]).unwrap();
    assert_eq!(path.distance(0, 0), Some(0));
    assert_eq!(path.distance(0, 1), Some(2));
    assert_eq!(path.distance(0, 2), None);
    let g = fig1_like();
    assert_eq!(g.distance(0, 2), Some(2));
    let d = g.distances_from_var(0, None);
    assert_eq!(d.to_check(1), Some(3));
}

#[test]
fn girth_of_small_graphs() {
    // v0 and v3 share two checks: a 4-cycle.
    assert_eq!(fig1_like().girth(), Some(4));
    let path = TannerGraph::from_check_lists(3, vec![vec![0, 1], vec![1, 2]]).unwrap();
    assert_eq!(path.girth(), None);
    // 6-cycle v0-c0-v1-c1-v2-c2-v0.
    let hexagon = TannerGraph::from_check_lists(3, vec![vec![0, 1], vec![1, 2], vec![2, 0]]).unwrap();
    assert_eq!(hexagon.girth(), Some(6));
}
