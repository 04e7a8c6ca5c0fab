use approx::assert_abs_diff_eq;
use iterbound::ber::{estimate_ber_curve, BerTarget};
use iterbound::bp::{c2v_update, marginals, v2c_update, BpState, EdgeLayout};
use iterbound::channel::ChannelModel;
use iterbound::graph::{peg_construct, sample_graph, EnsembleSpec, TannerGraph};
use iterbound::rng::rng_from_seed;
use proptest::prelude::*;

fn small_code() -> TannerGraph {
    peg_construct(16, &[3; 16], 8).unwrap()
}

/// All codewords of `g`, by brute force over `2^N` words.
fn codewords(g: &TannerGraph) -> Vec<Vec<u8>> {
    let n = g.n_vars();
    (0u32..1 << n)
        .filter(|&w| {
            (0..g.n_checks()).all(|c| g.check_neighbors(c).iter().filter(|&&v| w >> v & 1 == 1).count() % 2 == 0)
        })
        .map(|w| (0..n).map(|v| (w >> v & 1) as u8).collect())
        .collect()
}

/// 2 for a wrong decision, 1 for a tie, 0 otherwise.
fn half_errors(marginal: &[f64], word: &[u8]) -> Vec<u8> {
    marginal
        .iter()
        .zip(word)
        .map(|(&m, &b)| {
            if m == 0.0 {
                1
            } else if (m < 0.0) != (b == 1) {
                2
            } else {
                0
            }
        })
        .collect()
}

fn run(layout: &EdgeLayout, llr: &[f64], iterations: usize) -> Vec<f64> {
    let mut state = BpState::new(layout);
    let mut out = vec![0.0; llr.len()];
    for _ in 0..iterations {
        v2c_update(&mut state, layout, llr);
        c2v_update(&mut state, layout);
    }
    marginals(&state, layout, llr, &mut out);
    out
}

#[test]
fn channel_symmetry_on_small_codes() {
    let g = small_code();
    let words = codewords(&g);
    assert!(words.len() >= 4, "code has {} codewords", words.len());
    let layout = EdgeLayout::new(&g);
    let channels = [ChannelModel::bsc(0.08).unwrap(), ChannelModel::biawgn(0.8).unwrap()];
    for ch in channels {
        for (i, word) in words.iter().enumerate().skip(1).take(12) {
            for trial in 0..20u64 {
                let mut rng = rng_from_seed(1000 * i as u64 + trial);
                let zero_llr: Vec<f64> = (0..g.n_vars()).map(|_| ch.sample_llr(0, &mut rng)).collect();
                // Same noise realization seen through codeword `word`.
                let word_llr: Vec<f64> =
                    zero_llr.iter().zip(word).map(|(&x, &b)| if b == 1 { -x } else { x }).collect();
                for l in [0, 1, 3, 6] {
                    let a = half_errors(&run(&layout, &zero_llr, l), &vec![0; g.n_vars()]);
                    let b = half_errors(&run(&layout, &word_llr, l), word);
                    assert_eq!(a, b, "{} word {i} trial {trial} l {l}", ch.name());
                }
            }
        }
    }
}

#[test]
fn extrinsic_consistency() {
    let spec = EnsembleSpec::regular(60, 3, 6).unwrap();
    let g = sample_graph(&spec, 3).unwrap();
    let layout = EdgeLayout::new(&g);
    let ch = ChannelModel::biawgn(0.7).unwrap();
    let mut rng = rng_from_seed(9);
    let llr: Vec<f64> = (0..g.n_vars()).map(|_| ch.sample_llr(0, &mut rng)).collect();
    let mut state = BpState::new(&layout);
    let mut m = vec![0.0; g.n_vars()];
    for _ in 0..5 {
        v2c_update(&mut state, &layout, &llr);
        c2v_update(&mut state, &layout);
        marginals(&state, &layout, &llr, &mut m);
        // The next v2c pass reads these c2v messages.
        let mut next = state.clone();
        v2c_update(&mut next, &layout, &llr);
        for v in 0..g.n_vars() {
            for &e in layout.var_edges(v) {
                if m[v].is_finite() && state.c2v[e].is_finite() {
                    assert_abs_diff_eq!(m[v] - state.c2v[e], next.v2c[e], epsilon = 1e-9);
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn bec_erasures_never_grow(seed in any::<u64>(), eps in 0.05f64..0.95) {
        let spec = EnsembleSpec::regular(48, 3, 6).unwrap();
        let g = sample_graph(&spec, seed).unwrap();
        let layout = EdgeLayout::new(&g);
        let ch = ChannelModel::bec(eps).unwrap();
        let mut rng = rng_from_seed(seed ^ 0x55);
        let llr: Vec<f64> = (0..g.n_vars()).map(|_| ch.sample_llr(0, &mut rng)).collect();
        let mut state = BpState::new(&layout);
        let erased = |xs: &[f64]| xs.iter().map(|&x| x == 0.0).collect::<Vec<_>>();
        let mut prev_v2c: Option<Vec<bool>> = None;
        let mut prev_c2v: Option<Vec<bool>> = None;
        for _ in 0..12 {
            v2c_update(&mut state, &layout, &llr);
            c2v_update(&mut state, &layout);
            let (v, c) = (erased(&state.v2c), erased(&state.c2v));
            if let (Some(pv), Some(pc)) = (&prev_v2c, &prev_c2v) {
                prop_assert!(v.iter().zip(pv).all(|(&now, &before)| !now || before));
                prop_assert!(c.iter().zip(pc).all(|(&now, &before)| !now || before));
            }
            prop_assert!(state.v2c.iter().chain(&state.c2v).all(|&x| x >= 0.0));
            prev_v2c = Some(v);
            prev_c2v = Some(c);
        }
    }
}

#[test]
fn ber_is_bitwise_identical_across_worker_counts() {
    let g = peg_construct(96, &[3; 96], 48).unwrap();
    let spec = EnsembleSpec::regular(96, 3, 6).unwrap();
    let ch = ChannelModel::<f64>::biawgn(0.9).unwrap();
    let run_with = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| {
            let fixed = estimate_ber_curve(BerTarget::Graph(&g), &ch, 6, 300, 42).unwrap();
            let ens =
                estimate_ber_curve(BerTarget::Ensemble { spec: &spec, trials_per_graph: 3 }, &ch, 6, 90, 42).unwrap();
            (fixed, ens)
        })
    };
    let (a, b) = run_with(1);
    for threads in [2, 4, 7] {
        let (c, d) = run_with(threads);
        for (x, y) in a.iter().zip(&c).chain(b.iter().zip(&d)) {
            assert_eq!(x.half_errors, y.half_errors);
            assert_eq!(x.ber.to_bits(), y.ber.to_bits());
            assert_eq!(x.std_error.to_bits(), y.std_error.to_bits());
        }
    }
}
