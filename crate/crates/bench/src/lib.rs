//! Deterministic inputs for the kernel benchmarks.

use addcomp_core::{NatSet, SequenceSpec};

/// `{x ≤ horizon : x ≡ offset (mod step)}`.
pub fn progression(horizon: usize, step: usize, offset: usize) -> NatSet {
    NatSet::from_clipped(horizon, (offset..=horizon).step_by(step).map(|x| x as i64))
}

/// A thin multiplicative pattern mixed with a sparse progression, so sumsets
/// are neither trivially full nor trivially empty.
pub fn mixed(horizon: usize) -> NatSet {
    let powers = SequenceSpec::parse("powers:3", horizon)
        .and_then(|s| s.generate())
        .expect("powers generate");
    powers.union(&progression(horizon, 97, 5))
}
