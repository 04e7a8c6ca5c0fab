use approx::assert_relative_eq;
use iterbound::channel::*;

#[test]
fn bec_extremes() {
    let word = [0u8, 1, 0, 1];
    let clean = ChannelModel::bec(0.0_f64).unwrap().transmit(&word, 3);
    assert_eq!(clean, vec![f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY]);
    let erased = ChannelModel::bec(1.0_f64).unwrap().transmit(&word, 3);
    assert!(erased.iter().all(|&x| x == 0.0));
}

#[test]
fn bsc_llr_magnitude() {
    assert_relative_eq!(ChannelModel::<f64>::bsc_llr(0.1), 9f64.ln(), epsilon = 1e-15);
    assert_relative_eq!(9f64.ln(), 2.197_224_577_336_219_6, epsilon = 1e-15);
    let llr = ChannelModel::bsc(0.1_f64).unwrap().transmit(&[0; 200], 9);
    assert!(llr.iter().all(|&x| (x.abs() - 9f64.ln()).abs() < 1e-12));
    assert!(llr.iter().any(|&x| x < 0.0));
}

#[test]
fn awgn_llr_statistics() {
    let sigma2 = 0.5_f64;
    let llr = ChannelModel::biawgn(sigma2).unwrap().transmit(&vec![0; 100_000], 1);
    let mean = llr.iter().sum::<f64>() / llr.len() as f64;
    // LLR mean is 2/sigma2 for the all-zero word.
    assert!((mean - 4.0).abs() < 0.05, "mean {mean}");
}

#[test]
fn transmit_is_deterministic() {
    let ch = ChannelModel::biawgn(1.0_f32).unwrap();
    assert_eq!(ch.transmit(&[0, 1, 1, 0, 1], 77), ch.transmit(&[0, 1, 1, 0, 1], 77));
}

#[test]
fn parameter_ranges() {
    assert!(ChannelModel::bec(1.2_f64).is_err());
    assert!(ChannelModel::bsc(0.5_f64).is_err());
    assert!(ChannelModel::biawgn(0.0_f64).is_err());
}

#[test]
fn sigma2_conversion() {
    assert_relative_eq!(eb_n0_to_sigma2(0.0_f64, 0.5).unwrap(), 1.0, epsilon = 1e-15);
    assert_relative_eq!(eb_n0_to_sigma2(-0.3_f64, 0.25).unwrap(), 2.143_038_610_475_213, max_relative = 1e-12);
    assert_relative_eq!(eb_n0_to_sigma2(5.2_f64, 5.0 / 7.0).unwrap(), 0.211_396_620_4, max_relative = 1e-9);
    assert!(eb_n0_to_sigma2(0.0_f64, 1.0).is_err());
}

#[test]
fn json_form_is_tagged() {
    let ch: ChannelModel = serde_json::from_str(r#"{"kind":"bec","epsilon":0.6}"#).unwrap();
    assert_eq!(ch, ChannelModel::Bec { epsilon: 0.6 });
}
