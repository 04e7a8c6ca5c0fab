use iterbound::graph::alist::*;
use iterbound::graph::TannerGraph;
use iterbound::Error;

const TWO_VARS_ONE_CHECK: &str = "2 1\n1 2\n1 1\n2\n1\n1\n1 2\n";

#[test]
fn parses_minimal_fixture() {
    let g = parse_alist(TWO_VARS_ONE_CHECK).unwrap();
    assert_eq!(g.n_vars(), 2);
    assert_eq!(g.n_checks(), 1);
    assert_eq!(g.edge_count(), 2);
    assert_eq!(g.check_neighbors(0), &[0, 1]);
}

#[test]
fn out_of_range_index_is_reported_with_line() {
    let text = "4 2\n2 4\n1 1 1 1\n2 2\n1\n1\n2\n2\n1 2 0 0\n3 5 0 0\n";
    match parse_alist(text).unwrap_err() {
        Error::Parse { line, message } => {
            assert_eq!(line, 10);
            assert!(message.contains("out of range"), "{message}");
        }
        other => panic!("unexpected error {other}"),
    }
}

#[test]
fn rejects_malformed_files() {
    assert!(parse_alist("2\n").is_err());
    assert!(parse_alist("2 1\n1 2\n1 1\n2\n1\n1\n").is_err());
    // Repeated index in a check list.
    assert!(parse_alist("2 1\n1 2\n1 1\n2\n1\n1\n1 1\n").is_err());
    // Check list disagrees with variable lists.
    assert!(parse_alist("3 1\n1 2\n1 1 0\n2\n1\n1\n0\n1 3\n").is_err());
    assert!(parse_alist("2 1\n1 2\n1 1\n2\n1\nx\n1 2\n").is_err());
}

#[test]
fn round_trip_through_text() {
    let g = TannerGraph::from_check_lists(5, vec![vec![0, 1, 4], vec![1, 2], vec![3, 4, 0]]).unwrap();
    let back = parse_alist(&to_alist(&g)).unwrap();
    assert_eq!(back, g);
}

#[test]
fn save_and_load_through_a_file() {
    let g = iterbound::graph::peg_construct(24, &[3; 24], 12).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("peg.alist");
    save_alist(&g, &path).unwrap();
    assert_eq!(load_alist(&path).unwrap(), g);
    assert!(matches!(load_alist(dir.path().join("missing.alist")), Err(Error::Io(_))));
}
