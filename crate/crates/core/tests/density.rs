use approx::assert_relative_eq;
use iterbound::density::*;
use iterbound::graph::DegreeDistribution;
use iterbound::scalar::q_function;

fn reg(d: usize) -> DegreeDistribution {
    DegreeDistribution::node([(d, 1.0)]).unwrap()
}

#[test]
fn bec_examples() {
    let zero = de_bec(&reg(3), &reg(6), 0.0_f64, 10).unwrap();
    assert!(zero.message_error.iter().chain(&zero.ber).all(|&x| x == 0.0));
    let t = de_bec(&reg(3), &reg(6), 0.4_f64, 1).unwrap();
    assert_relative_eq!(t.message_error[1], 0.4 * (1.0 - 0.6_f64.powi(5)).powi(2), epsilon = 1e-15);
    assert_relative_eq!(t.message_error[1], 0.340_210_647_04, epsilon = 1e-10);
    let below = de_bec(&reg(3), &reg(6), 0.3_f64, 50).unwrap();
    assert!(below.message_error[50] < 1e-6);
}

#[test]
fn bec_34_ber_at_06() {
    let t = de_bec(&reg(3), &reg(4), 0.6_f64, 3).unwrap();
    assert_eq!(t.ber[0], 0.6);
    assert_relative_eq!(t.ber[1], 0.6 * (1.0 - 0.4_f64.powi(3)).powi(3), epsilon = 1e-15);
    assert_relative_eq!(t.ber[1], 0.492_015_513_6, epsilon = 1e-10);
}

#[test]
fn phi_is_continuous_and_inverts() {
    let below = (-0.4527 * PHI_SWITCH.powf(0.86) + 0.0218).exp();
    let above =
        (std::f64::consts::PI / PHI_SWITCH).sqrt() * (-PHI_SWITCH / 4.0).exp() * (1.0 - 10.0 / (7.0 * PHI_SWITCH));
    assert_relative_eq!(below, above, max_relative = 1e-12);
    assert_relative_eq!(below, 0.011_514_322_819_004_807, max_relative = 1e-12);
    assert_eq!(phi(0.0_f64), 1.0);
    for x in [0.5_f64, 3.0, 10.0, 14.0, 20.0, 60.0] {
        assert_relative_eq!(phi_inv(phi(x)), x, max_relative = 1e-9);
    }
}

#[test]
fn ga_starts_at_channel_ber() {
    let t = ga_awgn(&reg(3), &reg(4), 2.0_f64, 5).unwrap();
    assert_relative_eq!(t.ber[0], q_function(1.0 / 2f64.sqrt()), epsilon = 1e-15);
    assert_eq!(t.ber.len(), 6);
}
