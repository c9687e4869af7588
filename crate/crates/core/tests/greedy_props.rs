mod support;

use addcomp_core::greedy::{
    bound_two_term_exact, choose_q0, greedy_cover, greedy_cover_full_scan, greedy_thin,
};
use addcomp_core::oracle::minimal_cover;
use addcomp_core::{sumset, NatSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

/// Gain of the step that first covered each target of `(m, m+n]`, replayed
/// from the chosen translates alone.
fn first_cover_gains(a: &NatSet, chosen: &[usize], m: usize, n: usize) -> Vec<usize> {
    let mut gain_of = vec![0usize; n];
    let mut done = vec![false; n];
    for &x in chosen {
        let fresh: Vec<usize> = (0..n)
            .filter(|&i| !done[i] && m + 1 + i > x && a.contains(m + 1 + i - x))
            .collect();
        for &i in &fresh {
            done[i] = true;
            gain_of[i] = fresh.len();
        }
    }
    assert!(done.iter().all(|&d| d));
    gain_of
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn lazy_matches_full_scan(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let case = support::thin_instance(&mut rng);
        let lazy = greedy_cover(&case.a, &case.b, case.m, case.n).unwrap();
        let full = greedy_cover_full_scan(&case.a, &case.b, case.m, case.n).unwrap();
        prop_assert_eq!(lazy, full);
    }

    #[test]
    fn thinning_invariants(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let case = support::thin_instance(&mut rng);
        let inst = case.instance();
        let (s, trace) = greedy_thin(&inst).unwrap();
        let (m, n) = (case.m, case.n);

        prop_assert!(s.is_subset(&case.b));
        prop_assert_eq!(s.len(), trace.chosen.len());
        let reach = sumset(&case.a, &s, case.a.horizon());
        prop_assert!((m + 1..=m + n).all(|t| reach.contains(t)));

        prop_assert!(trace.gains.windows(2).all(|w| w[0] >= w[1]));
        let best_single = case
            .b
            .iter()
            .map(|x| (m + 1..=m + n).filter(|&t| t > x && case.a.contains(t - x)).count())
            .max()
            .unwrap();
        prop_assert_eq!(trace.q, best_single);
        prop_assert_eq!(trace.k.iter().map(|(j, c)| j * c).sum::<usize>(), n);
        prop_assert_eq!(trace.covered_total, n);

        let d = inst.denominator();
        prop_assert!(d >= 3);
        prop_assert_eq!(trace.d, d);
        let gain_of = first_cover_gains(&case.a, &trace.chosen, m, n);
        let h = trace.h_sizes();
        for (x, &size) in h.iter().enumerate() {
            prop_assert_eq!(size, gain_of.iter().filter(|&&g| g <= x).count());
            prop_assert!(size as i64 * d <= (x * case.b.len()) as i64);
        }

        let q0 = choose_q0(d).q0;
        let bound = bound_two_term_exact(case.b.len(), d, n, q0).unwrap();
        prop_assert!(BigRational::from_integer(BigInt::from(s.len())) <= bound);
        prop_assert!(trace.within_two_term_bound().unwrap());
        prop_assert!(s.len() as f64 <= trace.bound_closed_form + 1e-9);
    }

    #[test]
    fn optimum_never_beats_greedy_from_below(seed in any::<u64>()) {
        let mut rng = support::rng(seed);
        let (a, b, m, n) = support::tiny_instance(&mut rng, 14);
        let run = greedy_cover(&a, &b, m, n).unwrap();
        let (opt, size) = minimal_cover(&a, &b, m, n).unwrap();
        prop_assert!(size <= run.chosen.len());
        prop_assert!(opt.is_subset(&b));
        let reach = sumset(&a, &opt, a.horizon());
        prop_assert!((m + 1..=m + n).all(|t| reach.contains(t)));
    }
}

#[test]
fn greedy_can_be_strictly_worse() {
    let a = NatSet::from_sorted(64, &[1, 4, 6, 9, 13, 15, 16, 17, 23, 24]).unwrap();
    let b = NatSet::from_sorted(64, &[1, 2, 3, 4, 5, 9, 10]).unwrap();
    let run = greedy_cover(&a, &b, 7, 4).unwrap();
    let (opt, size) = minimal_cover(&a, &b, 7, 4).unwrap();
    assert_eq!(run.chosen.len(), 3);
    assert_eq!(size, 2);
    assert_eq!(opt.len(), 2);
}
