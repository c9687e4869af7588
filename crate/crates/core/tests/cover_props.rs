mod support;

use addcomp_core::cover::{block_cover, translate_count_lower_bound, translate_count_upper_bound};
use addcomp_core::{Error, Interval, NatSet};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn block_cover_never_fails(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let (a, m, n, l_end) = support::block_instance(&mut rng, 1500);
        let res = block_cover(&a, m, n, l_end, true);
        prop_assert!(res.is_ok(), "seed {}: {:?}", seed, res.err());
        let res = res.unwrap();
        prop_assert_eq!(res.u, a.restrict(Interval::closed(1, m as i64)).max().unwrap());
        let witnesses = res.witnesses.as_ref().unwrap();
        prop_assert_eq!(witnesses.len(), l_end - n);
        for (i, &(t, x, v)) in witnesses.iter().enumerate() {
            prop_assert_eq!(t, n + 1 + i);
            prop_assert!(a.contains(x) && !a.contains(v));
            prop_assert!(v > m && v <= l_end && x + v == t);
            // smallest a wins
            prop_assert!((1..x).all(|y| !(a.contains(y) && res.candidates.contains(t - y))));
        }
    }

    #[test]
    fn proof_trace_steps_hold(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let (a, m, n, l_end) = support::block_instance(&mut rng, 800);
        let res = block_cover(&a, m, n, l_end, false).unwrap();
        let trace = res.proof_trace(&a);
        for step in &trace.steps {
            prop_assert!(step.u_y.len() > trace.upper_count);
            prop_assert!(step.u_y.iter().all(|&v| v > m && v <= l_end));
            let v = step.v.expect("pigeonhole leaves a non-member");
            let b = step.b.unwrap();
            prop_assert!(step.u_y.contains(&v) && !a.contains(v) && a.contains(b));
            prop_assert_eq!(trace.u + step.y, b + v);
        }
    }

    #[test]
    fn lower_count_bound_holds(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let (a_set, b_set, a, b) = support::window_count_instance(&mut rng, 600);
        for n in 1..=a_set.horizon() {
            let (lhs, rhs) = translate_count_lower_bound(&a_set, &b_set, a, b, n).unwrap();
            prop_assert!(lhs as i64 >= rhs, "n = {}: {} < {}", n, lhs, rhs);
        }
    }

    #[test]
    fn full_window_count_is_tight(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let (a_set, _, a, b) = support::window_count_instance(&mut rng, 600);
        let full = NatSet::from_interval(Interval::open_closed(a as i64, b as i64), a_set.horizon());
        for n in 1..=a_set.horizon() {
            let (lhs, rhs) = translate_count_lower_bound(&a_set, &full, a, b, n).unwrap();
            prop_assert_eq!(lhs as i64, rhs);
        }
    }

    #[test]
    fn upper_count_bound_holds(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let (a_set, b_set, _, _) = support::window_count_instance(&mut rng, 300);
        let h = a_set.horizon();
        let r_set = support::random_subset(&mut rng, 0, h, 0.3, h);
        let worst = b_set
            .iter()
            .map(|x| r_set.iter().filter(|&t| t > x && a_set.contains(t - x)).count())
            .max()
            .unwrap_or(0);
        let (total, bound) = translate_count_upper_bound(&a_set, &b_set, &r_set, worst).unwrap();
        prop_assert!(total <= bound);
        if worst > 0 {
            let err = translate_count_upper_bound(&a_set, &b_set, &r_set, worst - 1).unwrap_err();
            let is_hypothesis_error = matches!(err, Error::HypothesisViolated { .. });
            prop_assert!(is_hypothesis_error);
        }
    }
}
