use iterbound::graph::degree::DegreeDistribution;
use iterbound::graph::sample::*;
use iterbound::graph::{DegreeSequences, EnsembleSpec};
use iterbound::rng::rng_from_seed;
use iterbound::Error;
use proptest::prelude::*;

#[test]
fn small_regular_sample_has_exact_degrees() {
    let spec = EnsembleSpec::regular(8, 3, 4).unwrap();
    let g = sample_graph(&spec, 11).unwrap();
    assert_eq!(g.n_vars(), 8);
    assert_eq!(g.n_checks(), 6);
    assert_eq!(g.edge_count(), 24);
    assert!((0..8).all(|v| g.var_degree(v) == 3));
    assert!((0..6).all(|c| g.check_degree(c) == 4));
}

#[test]
fn sampling_is_deterministic_per_seed() {
    let spec = EnsembleSpec::regular(60, 3, 6).unwrap();
    assert_eq!(sample_graph(&spec, 5).unwrap(), sample_graph(&spec, 5).unwrap());
    assert_ne!(sample_graph(&spec, 5).unwrap(), sample_graph(&spec, 6).unwrap());
}

#[test]
fn first_attempt_success_rate_is_positive() {
    let spec = EnsembleSpec::regular(900, 3, 4).unwrap();
    let first = (0..200).filter(|&s| sample_graph_with_stats(&spec, s).unwrap().attempts == 1).count();
    // Roughly exp(-3) of matchings are simple for (3,4).
    assert!(first > 0, "no simple first matchings in 200 draws");
}

#[test]
fn impossible_spec_reports_attempts() {
    // Two variables of degree 2 and a single degree-4 check: always parallel.
    let seq = DegreeSequences { var_degrees: vec![2, 2], check_degrees: vec![4] };
    let err = sample_configuration(&seq, &mut rng_from_seed(1), 50).unwrap_err();
    assert!(matches!(err, Error::SamplingFailure { attempts: 50, .. }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn degree_counts_match_realized_sequences(n in 20usize..200, seed in any::<u64>()) {
        let spec = EnsembleSpec::new(
            n * 4,
            DegreeDistribution::node([(2, 0.5), (3, 0.25), (5, 0.25)]).unwrap(),
            DegreeDistribution::node([(6, 0.5), (7, 0.5)]).unwrap(),
        );
        let Ok(spec) = spec else { return Ok(()); };
        let seq = spec.degree_sequences().unwrap();
        let g = sample_graph(&spec, seed).unwrap();
        let mut var_deg: Vec<usize> = (0..g.n_vars()).map(|v| g.var_degree(v)).collect();
        let mut check_deg: Vec<usize> = (0..g.n_checks()).map(|c| g.check_degree(c)).collect();
        var_deg.sort_unstable();
        check_deg.sort_unstable();
        prop_assert_eq!(var_deg, seq.var_degrees.clone());
        prop_assert_eq!(check_deg, seq.check_degrees.clone());
        prop_assert_eq!(g.edge_count(), seq.edge_count());
    }
}
