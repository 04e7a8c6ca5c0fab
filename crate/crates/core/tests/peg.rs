use iterbound::graph::peg::*;

#[test]
fn degree_one_variables_form_a_perfect_matching() {
    let g = peg_construct(4, &[1, 1, 1, 1], 4).unwrap();
    assert!((0..4).all(|c| g.check_degree(c) == 1));
    assert_eq!(g.girth(), None);
}

#[test]
fn small_regular_construction() {
    let g = peg_construct(400, &[3; 400], 300).unwrap();
    assert!((0..400).all(|v| g.var_degree(v) == 3));
    assert!((0..300).all(|c| g.check_degree(c) == 4));
    assert!(g.girth().unwrap() >= 8);
}

#[test]
fn deterministic() {
    assert_eq!(peg_construct(60, &[3; 60], 45).unwrap(), peg_construct(60, &[3; 60], 45).unwrap());
}

#[test]
fn infeasible_inputs() {
    assert!(peg_construct(3, &[3, 3], 4).is_err());
    assert!(peg_construct(2, &[5, 1], 4).is_err());
    assert!(peg_construct(2, &[1, 1], 0).is_err());
}
