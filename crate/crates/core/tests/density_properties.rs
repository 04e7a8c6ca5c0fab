use iterbound::density::de_bec;
use iterbound::graph::{DegreeDistribution, Perspective};
use proptest::prelude::*;

fn reg(d: usize) -> DegreeDistribution {
    DegreeDistribution::regular(Perspective::Node, d).unwrap()
}

fn bg2_like() -> (DegreeDistribution, DegreeDistribution) {
    (
        DegreeDistribution::edge([(2, 0.38354), (3, 0.04237), (4, 0.57409)]).unwrap(),
        DegreeDistribution::edge([(5, 0.24123), (6, 0.75877)]).unwrap(),
    )
}

proptest! {
    #[test]
    fn bec_trace_is_non_increasing(eps in 0.0f64..=1.0, which in 0usize..3) {
        let (l, r) = match which {
            0 => (reg(3), reg(6)),
            1 => (reg(3), reg(4)),
            _ => bg2_like(),
        };
        let t = de_bec(&l, &r, eps, 60).unwrap();
        for w in t.message_error.windows(2).chain(t.ber.windows(2)) {
            prop_assert!(w[1] <= w[0] + 1e-15, "{} then {}", w[0], w[1]);
        }
    }

    #[test]
    fn regular_path_matches_hand_recursion(eps in 0.0f64..=1.0, j in 2usize..6, k in 3usize..9) {
        let t = de_bec(&reg(j), &reg(k), eps, 25).unwrap();
        let mut x = eps;
        for step in 1..=25 {
            let y = 1.0 - (1.0 - x).powi(k as i32 - 1);
            let ber = eps * y.powi(j as i32);
            x = eps * y.powi(j as i32 - 1);
            prop_assert!((t.message_error[step] - x).abs() <= 1e-15 * x.max(1e-300) + 1e-300);
            prop_assert!((t.ber[step] - ber).abs() <= 1e-15 * ber.max(1e-300) + 1e-300);
        }
    }
}

/// Largest erasure probability for which the fixed point is 0, by bisection.
fn threshold(l: &DegreeDistribution, r: &DegreeDistribution) -> f64 {
    let (mut lo, mut hi) = (0.0, 1.0);
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if *de_bec(l, r, mid, 5000).unwrap().message_error.last().unwrap() < 1e-12 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

#[test]
fn threshold_separates_convergence() {
    for (l, r) in [(reg(3), reg(6)), (reg(3), reg(4)), bg2_like()] {
        let th = threshold(&l, &r);
        let below = de_bec(&l, &r, th - 0.05, 3000).unwrap();
        let above = de_bec(&l, &r, (th + 0.05).min(1.0), 3000).unwrap();
        assert!(*below.message_error.last().unwrap() < 1e-12);
        assert!(*above.message_error.last().unwrap() > 0.05);
    }
    // Known (3,6) value.
    assert!((threshold(&reg(3), &reg(6)) - 0.4294).abs() < 1e-3);
}
