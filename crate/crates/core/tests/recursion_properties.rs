use iterbound::graph::{DegreeDistribution, Perspective};
use iterbound::recursion::{recursion_run, tail_distribution};
use iterbound::regular::max_counts;
use proptest::prelude::*;

fn distribution(max_degree: usize) -> impl Strategy<Value = DegreeDistribution> {
    prop::collection::btree_map(2..=max_degree, 0.01f64..1.0, 1..4).prop_map(|m| {
        let total: f64 = m.values().sum();
        DegreeDistribution::node(m.into_iter().map(|(d, f)| (d, f / total))).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn recursion_values_stay_in_unit_interval(
        l_dist in distribution(8),
        r_dist in distribution(12),
        n in 2usize..200_000,
        l in 1usize..=100,
    ) {
        let trace = recursion_run::<f64>(&l_dist, &r_dist, n, l, 0.99);
        // Degenerate supports make the l1 threshold undefined.
        prop_assume!(trace.is_ok());
        let trace = trace.unwrap();
        for s in &trace.steps {
            for x in [s.p_tilde_odd, s.p].into_iter().chain(s.p_tilde_even) {
                prop_assert!((0.0..=1.0).contains(&x), "{x}");
            }
        }
        prop_assert!(trace.w_ub >= 0.0 && trace.w_ub <= n as f64);
        let tail = tail_distribution::<f64>(&l_dist, &r_dist, n, 2 * l).unwrap();
        prop_assert!(tail.excluding_root.iter().chain(&tail.including_root).all(|x| (0.0..=1.0).contains(x)));
    }

    #[test]
    fn weight_bound_grows_with_l(l_dist in distribution(6), r_dist in distribution(10), n in 100usize..100_000) {
        let mut prev = 0.0;
        for l in 1..=40 {
            let Ok(t) = recursion_run::<f64>(&l_dist, &r_dist, n, l, 0.99) else { return Ok(()) };
            prop_assert!(t.w_ub + 1e-9 * n as f64 >= prev, "l = {l}: {} < {prev}", t.w_ub);
            prop_assert!(t.w_ub <= n as f64);
            prev = t.w_ub;
        }
    }
}

#[test]
fn regular_recursion_tracks_tree_counts() {
    let reg = |d| DegreeDistribution::regular(Perspective::Node, d).unwrap();
    let mut checked = 0;
    for (j, k) in [(3, 4), (3, 6), (4, 8), (5, 10)] {
        for n in [10_000, 100_000, 1_000_000] {
            for l in 1..=3 {
                let t = recursion_run::<f64>(&reg(j), &reg(k), n, l, 0.99).unwrap();
                if !t.general {
                    continue;
                }
                let n_star = max_counts(j, k, 2 * l).unwrap().0 as f64;
                // A tree larger than the graph cannot be matched.
                if n_star > n as f64 {
                    continue;
                }
                let ratio = t.w_ub / n_star;
                assert!((0.5..=1.0).contains(&ratio), "(J, K, N, l) = ({j}, {k}, {n}, {l}): ratio {ratio}");
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}
