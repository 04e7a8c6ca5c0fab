use approx::assert_relative_eq;
use iterbound::channel::ChannelModel;
use iterbound::graph::{DegreeDistribution, EnsembleSpec};
use iterbound::recursion::*;
use iterbound::regular::{closed_form_lower, RegularParams};
use iterbound::Error;

fn reg(d: usize) -> DegreeDistribution {
    DegreeDistribution::node([(d, 1.0)]).unwrap()
}

#[test]
fn hand_unrolled_fixture() {
    let trace = recursion_run(&reg(3), &reg(4), 1000, 2, 1.0_f64).unwrap();
    assert!(!trace.general);
    assert_relative_eq!(trace.steps[0].p_tilde_odd, 0.999, epsilon = 1e-15);
    assert_relative_eq!(trace.steps[0].p, 0.997_002_999, epsilon = 1e-15);
    assert_relative_eq!(trace.steps[1].p_tilde_even.unwrap(), 0.998_001, epsilon = 1e-15);
    assert_relative_eq!(trace.steps[1].p_tilde_odd, 0.998_001, epsilon = 1e-15);
    assert_relative_eq!(trace.steps[1].p, 0.994_014_980_014_994_1, epsilon = 1e-15);
    assert_relative_eq!(trace.w_ub, 8.964_083_874_125_839, epsilon = 1e-9);
}

#[test]
fn l1_values() {
    assert_relative_eq!(
        l1_threshold(&reg(3), &reg(4), 5400, 1.0_f64).unwrap(),
        2.542_057_750_884_029,
        max_relative = 1e-12
    );
    let l = DegreeDistribution::node([(2, 0.4286), (3, 0.5714)]).unwrap();
    let r = DegreeDistribution::node([(8, 0.5), (10, 0.5)]).unwrap();
    assert_relative_eq!(l1_threshold(&l, &r, 3500, 0.99_f64).unwrap(), 1.606_559_414_074_546_7, max_relative = 1e-12);
    assert!(l1_threshold(&reg(1), &reg(4), 100, 0.5_f64).is_err());
}

#[test]
fn tail_matches_product_of_p() {
    let l = DegreeDistribution::node([(2, 0.5), (3, 0.5)]).unwrap();
    let tail = tail_distribution::<f64>(&l, &reg(6), 5000, 8).unwrap();
    let steps = cavity_chain::<f64>(&l, &reg(6), 5000, 4, true);
    assert_eq!(tail.excluding_root[0], 1.0);
    assert_eq!(tail.excluding_root[1], 1.0);
    let mut prod = 1.0;
    for t in 1..=4 {
        prod *= steps[t - 1].p;
        assert_eq!(tail.excluding_root[2 * t], prod);
        if 2 * t < 8 {
            assert_eq!(tail.excluding_root[2 * t + 1], prod);
        }
    }
    assert_relative_eq!(tail.including_root[0], 1.0 - 1.0 / 5000.0, epsilon = 1e-15);
}

#[test]
fn empirical_tail_regular_distance_two() {
    let spec = EnsembleSpec::regular(1000, 3, 4).unwrap();
    let tail = empirical_tail::<f64>(&spec, 2, 4, 50, 7).unwrap();
    let se = tail.std_error.as_ref().unwrap();
    assert_eq!(tail.excluding_root[0], 1.0);
    let expected = 1.0 - 9.0 / 999.0;
    assert!((tail.excluding_root[2] - expected).abs() <= 3.0 * se[2] + 1e-12);
    assert_eq!(tail, empirical_tail::<f64>(&spec, 2, 4, 50, 7).unwrap());
}

#[test]
fn maxdeg_relaxation_delegates() {
    let ch = ChannelModel::bec(0.1_f64).unwrap();
    let l = DegreeDistribution::node([(2, 0.4286), (3, 0.5714)]).unwrap();
    let r = DegreeDistribution::node([(8, 0.5), (10, 0.5)]).unwrap();
    let relaxed = maxdeg_relaxation(&ch, &l, &r, 3500, 2, 0.99).unwrap();
    let direct = closed_form_lower(&ch, &RegularParams::new(3, 10, 3500, 2, 0.99).unwrap()).unwrap();
    assert_eq!(relaxed, direct);
    assert!(matches!(maxdeg_relaxation(&ch, &reg(2), &reg(4), 100, 1, 0.99), Err(Error::NotApplicable(_))));
}
