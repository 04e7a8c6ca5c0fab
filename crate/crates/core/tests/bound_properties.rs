use iterbound::channel::ChannelModel;
use iterbound::density::de_bec;
use iterbound::graph::{DegreeDistribution, Perspective};
use iterbound::regular::{
    ber_lower_from_weight, chernoff_q_lb, closed_form_lower, gamma, weight_ub_regular, RegularParams,
};
use iterbound::scalar::q_function;

#[test]
fn chernoff_bound_is_below_q() {
    for i in 0..=10_000 {
        let x = 10.0 * i as f64 / 10_000.0;
        let lb: f64 = chernoff_q_lb(x).unwrap();
        assert!(lb <= q_function(x), "x = {x}: {lb} > {}", q_function(x));
    }
}

#[test]
fn gamma_is_strictly_decreasing() {
    let mut prev = f64::INFINITY;
    for i in 1..10_000 {
        let p = i as f64 / 10_000.0;
        let g = gamma(p).unwrap();
        assert!(g < prev, "p = {p}");
        prev = g;
    }
    let mut prev = f64::INFINITY;
    for e in (1..300).rev() {
        let g = gamma(10f64.powi(-e)).unwrap();
        assert!(g < prev);
        prev = g;
    }
}

#[test]
fn weight_bound_is_monotone_and_capped() {
    for j in [3, 4, 5] {
        for k in [4, 6, 8] {
            for n in [1_000, 2_000, 5_000, 10_000, 20_000, 50_000, 100_000] {
                if (n * j) % k != 0 {
                    continue;
                }
                let mut prev = 0.0;
                for l in 0..=30 {
                    let w = weight_ub_regular(&RegularParams::new(j, k, n, l, 0.99).unwrap()).unwrap().w;
                    assert!(w >= prev, "(J, K, N, l) = ({j}, {k}, {n}, {l})");
                    assert!(w <= n as f64);
                    prev = w;
                }
                assert_eq!(prev, n as f64);
            }
        }
    }
}

#[test]
fn ber_lower_bound_decreases_in_weight() {
    let channels =
        [ChannelModel::bec(0.6).unwrap(), ChannelModel::bsc(0.05).unwrap(), ChannelModel::biawgn(0.8).unwrap()];
    for ch in channels {
        let mut prev = f64::INFINITY;
        for w in 1..=60 {
            let p = ber_lower_from_weight(&ch, w as f64).unwrap();
            assert!(p < prev, "{} w = {w}", ch.name());
            prev = p;
        }
    }
}

#[test]
fn closed_form_lies_below_density_evolution() {
    let reg = |d| DegreeDistribution::regular(Perspective::Node, d).unwrap();
    let ch = ChannelModel::bec(0.6).unwrap();
    let de = de_bec(&reg(3), &reg(4), 0.6, 4).unwrap();
    for l in 1..=4 {
        let lower = closed_form_lower(&ch, &RegularParams::new(3, 4, 5400, l, 0.99).unwrap()).unwrap();
        assert!(lower.p_lower <= de.ber[l], "l = {l}");
    }
}
