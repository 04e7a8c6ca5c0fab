use iterbound::channel::ChannelModel;
use iterbound_cli::config::*;

#[test]
fn errors_name_the_field() {
    let err = ExperimentConfig::from_json(r#"{"kind":"bounds","seed":1,"ensemble":{"n_vars":"x"}}"#).unwrap_err();
    assert!(err.to_string().contains("ensemble.n_vars"), "{err}");
    let err = ExperimentConfig::from_json(r#"{"kind":"bounds"}"#).unwrap_err();
    assert!(err.to_string().contains("seed"), "{err}");
}

#[test]
fn channel_with_eb_n0() {
    let ch = ChannelConfig::Biawgn { sigma2: None, eb_n0_db: Some(0.0) };
    let (model, conv) = ch.resolve(Some(0.5)).unwrap();
    assert_eq!(model, ChannelModel::Biawgn { sigma2: 1.0 });
    assert_eq!(conv.unwrap().rate, 0.5);
    assert!(ch.resolve(None).is_err());
}

#[test]
fn edge_perspective_ensemble() {
    let cfg: EnsembleConfig = serde_json::from_str(
        r#"{"n_vars":20000,"lambda":{"2":0.38354,"3":0.04237,"4":0.57409},"rho":{"5":0.24123,"6":0.75877}}"#,
    )
    .unwrap();
    let spec = cfg.to_spec().unwrap();
    assert_eq!(spec.var_dist().max_degree(), 4);
}
