use iterbound::graph::TannerGraph;

/// The length-4 example: H = [[1,1,0,1],[0,1,1,0],[1,0,1,1]]-style graph
/// with v1 on checks c1 and c3.
pub fn fig1_like() -> TannerGraph {
    TannerGraph::from_check_lists(4, vec![vec![0, 1, 3], vec![1, 2], vec![0, 2, 3]]).unwrap()
}
