use addcomp_core::builder::{build_complement, verify_cover, ComplementBuild};
use addcomp_core::{Interval, NatSet, SequenceSpec};

const HORIZON: usize = 1_000_000;

fn build(spec: &str, hint: Option<f64>) -> ComplementBuild {
    let spec = SequenceSpec::parse(spec, HORIZON).unwrap();
    build_complement(&spec, hint).unwrap()
}

fn check_invariants(name: &str, b: &ComplementBuild) {
    assert!(b.is_disjoint(), "{name}: B meets A");
    assert!(b.coverage.ok, "{name}: missing {:?}", &b.coverage.missing[..b.coverage.missing.len().min(5)]);
    assert_eq!(b.coverage.lo, b.threshold);
    assert_eq!(b.threshold, 2 << b.analysis.gamma);

    let again = verify_cover(&b.a, &b.b, b.coverage.lo, b.coverage.hi);
    assert!(again.ok && again.missing.is_empty());

    let mut union = NatSet::empty(b.horizon);
    for block in &b.blocks {
        let range = Interval::open_closed(block.base as i64, 4 * block.base as i64);
        assert_eq!(block.set.count_in(range), block.set.len(), "{name}: block {} leaks", block.exponent);
        assert_eq!(block.size, block.set.len());
        if block.fallback {
            assert!(block.within_bound.is_none());
        } else {
            assert_eq!(block.within_bound, Some(true), "{name}: block {} too large", block.exponent);
            assert!(block.size as f64 <= block.bound_two_term + 1e-9);
        }
        union = union.union(&block.set);
    }
    assert_eq!(union, b.b);

    let tail: Vec<f64> = b
        .density
        .samples
        .iter()
        .filter(|s| s.n > b.threshold)
        .map(|s| s.ratio)
        .collect();
    if b.blocks.len() >= 8 {
        assert!(tail[tail.len() - 1] <= tail[3], "{name}: density grew {tail:?}");
    }
}

#[test]
fn families_at_one_million() {
    for (spec, hint) in [
        ("powers:2", None),
        ("powers:3", None),
        ("fib", None),
        ("geometric:c=3,alpha=1.5", None),
        ("explicit:1,10,100,1000,10000,100000,1000000", Some(10.0)),
    ] {
        let b = build(spec, hint);
        check_invariants(spec, &b);
    }
}

#[test]
fn explicit_decades_parameters() {
    let b = build("explicit:1,10,100,1000,10000,100000,1000000", Some(10.0));
    let an = &b.analysis;
    assert_eq!((an.n0, an.r, an.p, an.gamma, an.threshold), (1, 1, 101, 8, 512));
    assert_eq!((b.coverage.lo, b.coverage.hi), (512, 1 << 18));
    assert!(verify_cover(&b.a, &b.b, 512, 1 << 19).ok);
}

#[test]
fn output_does_not_depend_on_thread_count() {
    let spec = SequenceSpec::parse("fib", 1 << 18).unwrap();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| build_complement(&spec, None).unwrap())
    };
    let one = run(1);
    let many = run(4);
    assert_eq!(one.b, many.b);
    assert_eq!(one.b.digest(), many.b.digest());
    assert_eq!(one.coverage, many.coverage);
    let sizes = |b: &ComplementBuild| b.blocks.iter().map(|r| (r.exponent, r.size)).collect::<Vec<_>>();
    assert_eq!(sizes(&one), sizes(&many));
}
