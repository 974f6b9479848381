//! Property tests for the measure-theoretic and serialization invariants.

use proptest::prelude::*;

use repliboost::harness::wilson_interval;
use repliboost_core::domain::{FiniteDistribution, Sample, SampleSource};
use repliboost_core::hypothesis::{Hypothesis, MajorityVote};
use repliboost_core::measure::{density, reweighted_distribution, tv_distance};
use repliboost_core::sampling::rejection_sample;
use repliboost_core::tape::RandomTape;

fn weights() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.01f64..10.0, 1..20)
}

proptest! {
    #[test]
    fn reweighted_distribution_is_normalized_and_smooth(
        w in weights(),
        seed in 0u64..1000,
    ) {
        let dist = FiniteDistribution::from_weights(&w).unwrap();
        let n = dist.len();
        let mut stream = RandomTape::new(seed).child("mu", 0).stream();
        let mu_vals: Vec<f64> = (0..n).map(|_| stream.next_f64().max(1e-3)).collect();
        let mu = |x: usize| mu_vals[x];
        let d = density(mu, &dist);
        let dm = reweighted_distribution(mu, &dist).unwrap();
        let sum: f64 = dm.probs().iter().sum();
        prop_assert!((sum - 1.0).abs() < 1e-9);
        // Smoothness: D_mu(x) <= D(x)/d(mu) pointwise, since mu <= 1.
        for x in 0..n {
            prop_assert!(dm.prob(x) <= dist.prob(x) / d + 1e-12);
        }
    }

    #[test]
    fn tv_distance_is_a_bounded_symmetric_metric(
        (w1, w2) in (1usize..20).prop_flat_map(|n| (
            prop::collection::vec(0.01f64..10.0, n),
            prop::collection::vec(0.01f64..10.0, n),
        )),
    ) {
        let p = FiniteDistribution::from_weights(&w1).unwrap();
        let q = FiniteDistribution::from_weights(&w2).unwrap();
        let d_pq = tv_distance(&p, &q).unwrap();
        let d_qp = tv_distance(&q, &p).unwrap();
        prop_assert!((0.0..=1.0).contains(&d_pq));
        prop_assert!((d_pq - d_qp).abs() < 1e-15);
        prop_assert_eq!(tv_distance(&p, &p).unwrap(), 0.0);
    }

    #[test]
    fn hypothesis_serialization_round_trips_bit_exactly(
        feature in 0usize..4,
        bits in any::<u32>(),
        polarity in prop::sample::select(vec![-1i8, 1]),
    ) {
        // Thresholds come from finite grids, so any finite f64 must survive.
        let threshold = bits as f64 / u32::MAX as f64;
        let h = Hypothesis::Stump { feature, threshold, polarity };
        let vote = MajorityVote::new(vec![h.clone(), Hypothesis::Constant { sign: polarity }]);
        let text = serde_json::to_string(&vote).unwrap();
        let back: MajorityVote = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, vote);
    }

    #[test]
    fn fresh_requests_consume_disjoint_increasing_ranges(
        items in prop::collection::vec(0usize..50, 1..100),
        takes in prop::collection::vec(1usize..10, 1..10),
    ) {
        let mut pool = Sample::new(items.clone());
        let mut cursor = 0;
        for take in takes {
            match pool.fresh(take) {
                Ok(got) => {
                    prop_assert_eq!(&got[..], &items[cursor..cursor + take]);
                    cursor += take;
                    prop_assert_eq!(pool.consumed(), cursor);
                }
                Err(_) => {
                    prop_assert!(cursor + take > items.len());
                    break;
                }
            }
        }
    }

    #[test]
    fn accept_all_rejection_is_the_identity_prefix(
        items in prop::collection::vec(0usize..8, 1..80),
        target in 1usize..40,
        seed in 0u64..100,
    ) {
        prop_assume!(target <= items.len());
        let mut pool = Sample::new(items.clone());
        let mut coins = RandomTape::new(seed).child("coins", 0).stream();
        let got = rejection_sample(&mut pool, target, |_| 1.0, &mut coins).unwrap();
        prop_assert_eq!(&got[..], &items[..target]);
    }

    #[test]
    fn partial_acceptance_preserves_input_order(
        items in prop::collection::vec(0usize..8, 30..120),
        seed in 0u64..100,
        n in 8usize..=8,
    ) {
        let mu_vals: Vec<f64> = (0..n).map(|x| 0.3 + 0.7 * x as f64 / n as f64).collect();
        let mut pool = Sample::new(items.clone());
        let mut coins = RandomTape::new(seed).child("coins", 0).stream();
        if let Ok(got) = rejection_sample(&mut pool, 5, |x| mu_vals[x], &mut coins) {
            // Accepted ids appear as a subsequence of the input.
            let mut it = items.iter();
            for g in &got {
                prop_assert!(it.any(|i| i == g));
            }
        }
    }

    #[test]
    fn wilson_interval_brackets_the_point_estimate(
        successes in 0usize..200,
        extra in 0usize..200,
    ) {
        let trials = successes + extra;
        prop_assume!(trials > 0);
        let (lo, hi) = wilson_interval(successes, trials);
        let p = successes as f64 / trials as f64;
        prop_assert!((0.0..=1.0).contains(&lo));
        prop_assert!((0.0..=1.0).contains(&hi));
        prop_assert!(lo <= p + 1e-12 && p <= hi + 1e-12);
    }

    #[test]
    fn measure_density_is_monotone_in_the_measure(
        w in weights(),
        seed in 0u64..1000,
    ) {
        let dist = FiniteDistribution::from_weights(&w).unwrap();
        let n = dist.len();
        let mut stream = RandomTape::new(seed).child("mu", 0).stream();
        let mu_vals: Vec<f64> = (0..n).map(|_| stream.next_f64()).collect();
        let d1 = density(|x| mu_vals[x], &dist);
        let d2 = density(|x| (mu_vals[x] * 0.5).min(mu_vals[x]), &dist);
        prop_assert!(d2 <= d1 + 1e-15);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&d1));
    }
}
