//! Seeded random instance generators shared by the property suites and the
//! acceptance harness.
#![allow(dead_code)]

use addcomp_core::{Interval, NatSet};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Each element of `(lo, hi]` independently with probability `density`.
pub fn random_subset(rng: &mut ChaCha8Rng, lo: usize, hi: usize, density: f64, horizon: usize) -> NatSet {
    NatSet::from_clipped(
        horizon,
        (lo + 1..=hi).filter(|_| rng.gen_bool(density)).map(|x| x as i64),
    )
}

/// Exactly `k` distinct elements of `(lo, hi]`.
pub fn sized_subset(rng: &mut ChaCha8Rng, lo: usize, hi: usize, k: usize) -> Vec<usize> {
    let mut out: Vec<usize> = sample(rng, hi - lo, k).into_iter().map(|i| lo + 1 + i).collect();
    out.sort_unstable();
    out
}

pub fn union_of(horizon: usize, parts: &[&[usize]]) -> NatSet {
    NatSet::from_clipped(horizon, parts.iter().flat_map(|p| p.iter().map(|&x| x as i64)))
}

/// `(A, m, n, L)` with `n >= 2m`, `L > n`, `|A ∩ [1, m]| > |A ∩ (m, L]|`,
/// horizon at most `max_horizon`.
pub fn block_instance(rng: &mut ChaCha8Rng, max_horizon: usize) -> (NatSet, usize, usize, usize) {
    let horizon = rng.gen_range(8..=max_horizon);
    let m = rng.gen_range(1..=(horizon - 2) / 3);
    let n = rng.gen_range(2 * m..horizon);
    let l_end = rng.gen_range(n + 1..=horizon);
    let low_density: f64 = rng.gen_range(0.02..1.0);
    let k1 = ((m as f64 * low_density).round() as usize).clamp(1, m);
    let k2 = rng.gen_range(0..k1).min(l_end - m);
    let low = sized_subset(rng, 0, m, k1);
    let mid = sized_subset(rng, m, l_end, k2);
    let tail_density: f64 = rng.gen_range(0.0..0.6);
    let tail = random_subset(rng, l_end, horizon, tail_density, horizon).to_vec();
    (union_of(horizon, &[&low, &mid, &tail]), m, n, l_end)
}

/// `(A, B, a, b)` with `B ⊆ (a, b]` at horizon at most `max_horizon`.
pub fn window_count_instance(rng: &mut ChaCha8Rng, max_horizon: usize) -> (NatSet, NatSet, usize, usize) {
    let horizon = rng.gen_range(10..=max_horizon);
    let a_density: f64 = rng.gen_range(0.01..0.9);
    let a_set = random_subset(rng, 0, horizon, a_density, horizon);
    let a = rng.gen_range(0..=horizon / 2);
    let b = rng.gen_range(a + 1..=(a + 200).min(horizon));
    let b_density: f64 = rng.gen_range(0.05..1.0);
    let b_set = random_subset(rng, a, b, b_density, horizon);
    (a_set, b_set, a, b)
}

/// A thinning instance with `D >= 3`, owned.
#[derive(Debug, Clone)]
pub struct ThinCase {
    pub a: NatSet,
    pub b: NatSet,
    pub m: usize,
    pub n: usize,
    pub x1: usize,
    pub x2: usize,
}

impl ThinCase {
    pub fn instance(&self) -> addcomp_core::GreedyInstance<'_> {
        addcomp_core::GreedyInstance {
            a: &self.a,
            b: &self.b,
            m: self.m,
            n: self.n,
            x1: self.x1,
            x2: self.x2,
        }
    }
}

pub fn thin_instance(rng: &mut ChaCha8Rng) -> ThinCase {
    let x1 = rng.gen_range(0..=30);
    let k = rng.gen_range(5..=80);
    let m = x1 + k;
    let n = rng.gen_range(1..=200);
    let x2 = m + n + rng.gen_range(0..=50);
    let horizon = x2 + 10;

    let c = rng.gen_range(4..k);
    let low = sized_subset(rng, 0, k - 1, c);
    let extra_density: f64 = rng.gen_range(0.0..0.5);
    let extra = random_subset(rng, k - 1, horizon, extra_density, horizon).to_vec();
    let a = union_of(horizon, &[&low, &extra]);

    let e = rng.gen_range(0..=c - 3).min(x2 - x1 - 1);
    let dropped = sized_subset(rng, x1, x2, e);
    let b = NatSet::from_interval(Interval::open_closed(x1 as i64, x2 as i64), horizon)
        .difference(&union_of(horizon, &[&dropped]));
    ThinCase { a, b, m, n, x1, x2 }
}

/// `(A, B, m, n)` with `|B| <= max_b` and `(m, m+n] ⊆ A + B`.
pub fn tiny_instance(rng: &mut ChaCha8Rng, max_b: usize) -> (NatSet, NatSet, usize, usize) {
    let horizon = 64;
    loop {
        let a_density: f64 = rng.gen_range(0.1..0.6);
        let a = random_subset(rng, 0, 24, a_density, horizon);
        if a.is_empty() {
            continue;
        }
        let m = rng.gen_range(0..=16);
        let n = rng.gen_range(2..=16);
        let pool = m + n - 1;
        let size = rng.gen_range(1..=max_b.min(pool));
        let b = union_of(horizon, &[&sized_subset(rng, 0, pool, size)]);
        let reach = addcomp_core::sumset(&a, &b, horizon);
        if (m + 1..=m + n).all(|t| reach.contains(t)) {
            return (a, b, m, n);
        }
    }
}
