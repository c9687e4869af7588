//! Greedy thinning of a translate cover.
//!
//! Given `A` and candidates `B` whose translates `A + b` cover the window
//! `(m, m+n]`, pick translates one at a time, always the one covering the most
//! still-uncovered targets (ties to the smallest element), until the window is
//! covered. The trace records every marginal gain so the size bound
//! `|S| <= (|B|/D)·H(q0) + n/q0` can be checked exactly.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::cover::block_cover;
use crate::error::{Error, Result};
use crate::natset::{Interval, NatSet};

/// A thinning problem: `B ⊆ (x1, x2]` with translates covering `(m, m+n]`.
#[derive(Debug, Clone, Copy)]
pub struct GreedyInstance<'a> {
    pub a: &'a NatSet,
    pub b: &'a NatSet,
    pub m: usize,
    pub n: usize,
    pub x1: usize,
    pub x2: usize,
}

impl GreedyInstance<'_> {
    /// `D = |A ∩ [1, m − x1)| − (x2 − x1 − |B|)`.
    pub fn denominator(&self) -> i64 {
        let low = self
            .a
            .count_in(Interval::closed_open(1, self.m as i64 - self.x1 as i64));
        let missing = self.x2 as i64 - self.x1 as i64 - self.b.len() as i64;
        low as i64 - missing
    }

    fn check(&self) -> Result<()> {
        let window = Interval::open_closed(self.x1 as i64, self.x2 as i64);
        if self.b.is_empty() || self.b.count_in(window) != self.b.len() {
            return Err(Error::precondition(format!(
                "B non-empty and B ⊆ ({}, {}]",
                self.x1, self.x2
            )));
        }
        if self.m + self.n > self.x2 {
            return Err(Error::precondition(format!(
                "m + n <= x2 ({} > {})",
                self.m + self.n,
                self.x2
            )));
        }
        let d = self.denominator();
        if d <= 0 {
            return Err(Error::precondition(format!(
                "|A ∩ [1, m − x1)| > x2 − x1 − |B| (D = {d})"
            )));
        }
        Ok(())
    }
}

/// Selected translates and their marginal gains, in selection order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyRun {
    pub chosen: Vec<usize>,
    pub gains: Vec<usize>,
}

/// Full bookkeeping of one thinning.
#[derive(Debug, Clone, Serialize)]
pub struct GreedyTrace {
    pub chosen: Vec<usize>,
    pub gains: Vec<usize>,
    /// Gain of the first step, `|f(b_1)|`.
    pub q: usize,
    /// `K_j`: number of steps whose gain was exactly `j`.
    pub k: BTreeMap<usize, usize>,
    pub d: i64,
    pub q0: usize,
    /// `D < 3`, where `⌊D / ln D⌋` is useless.
    pub degenerate: bool,
    /// Thinning was skipped and the whole candidate set kept.
    pub fallback: bool,
    pub covered_total: usize,
    pub candidate_count: usize,
    pub window: usize,
    /// `(|B|/D)·H(q0) + n/q0`
    pub bound_two_term: f64,
    /// `(|B|/D)·(1 + ln q0) + n/q0`, using `H(j) <= 1 + ln j`.
    pub bound_closed_form: f64,
}

impl GreedyTrace {
    fn new(run: GreedyRun, candidate_count: usize, window: usize, d: i64) -> Result<Self> {
        let choice = choose_q0(d);
        let mut k = BTreeMap::new();
        for &g in &run.gains {
            *k.entry(g).or_insert(0) += 1;
        }
        Ok(Self {
            q: run.gains.first().copied().unwrap_or(0),
            covered_total: run.gains.iter().sum(),
            bound_two_term: bound_two_term(candidate_count, d, window, choice.q0)?,
            bound_closed_form: bound_closed_form(candidate_count, d, window, choice.q0),
            chosen: run.chosen,
            gains: run.gains,
            k,
            d,
            q0: choice.q0,
            degenerate: choice.degenerate,
            fallback: false,
            candidate_count,
            window,
        })
    }

    /// `|H(x)|` for `x = 0..=q`: targets first covered at a step of gain at most `x`.
    pub fn h_sizes(&self) -> Vec<usize> {
        let mut acc = 0;
        (0..=self.q)
            .map(|x| {
                acc += x * self.k.get(&x).copied().unwrap_or(0);
                acc
            })
            .collect()
    }

    /// Exact check of `|S| <= (|B|/D)·H(q0) + n/q0` for the chosen set.
    pub fn within_two_term_bound(&self) -> Result<bool> {
        let bound = bound_two_term_exact(self.candidate_count, self.d, self.window, self.q0)?;
        Ok(BigRational::from_integer(BigInt::from(self.chosen.len())) <= bound)
    }
}

/// Targets of a translate inside `(m, m+n]`.
struct Window<'a> {
    elements: &'a [usize],
    m: usize,
    n: usize,
}

impl Window<'_> {
    /// Indices `t − m − 1` of `(A + b) ∩ (m, m+n]`.
    fn hits(&self, b: usize) -> impl Iterator<Item = usize> + '_ {
        let lo = (self.m + 1).saturating_sub(b);
        let hi = (self.m + self.n).saturating_sub(b);
        let start = self.elements.partition_point(|&x| x < lo);
        let end = self.elements.partition_point(|&x| x <= hi);
        self.elements[start..end.max(start)]
            .iter()
            .map(move |&x| x + b - self.m - 1)
    }

    fn gain(&self, b: usize, open: &[bool]) -> usize {
        self.hits(b).filter(|&i| open[i]).count()
    }
}

fn prepare<'a>(
    a: &NatSet,
    elements: &'a [usize],
    b: &NatSet,
    m: usize,
    n: usize,
) -> Result<(Window<'a>, Vec<bool>)> {
    if m + n > a.horizon() {
        return Err(Error::precondition(format!(
            "m + n <= horizon ({} > {})",
            m + n,
            a.horizon()
        )));
    }
    let window = Window { elements, m, n };
    let mut reached = vec![false; n];
    for x in b.iter() {
        window.hits(x).for_each(|i| reached[i] = true);
    }
    if let Some(i) = reached.iter().position(|&r| !r) {
        return Err(Error::precondition(format!(
            "initial cover (m, m+n] ⊆ ∪(A + b): {} uncovered",
            m + 1 + i
        )));
    }
    Ok((window, vec![true; n]))
}

/// Greedy cover of `(m, m+n]` by translates `A + b`, `b ∈ B`.
///
/// Gains only shrink as targets get covered, so a max-heap of stale gains
/// keyed by `(gain, smallest b)` finds the exact argmax with one recount per
/// pop. Matches [`greedy_cover_full_scan`] step for step.
pub fn greedy_cover(a: &NatSet, b: &NatSet, m: usize, n: usize) -> Result<GreedyRun> {
    let elements = a.to_vec();
    let (window, mut open) = prepare(a, &elements, b, m, n)?;
    let mut heap: BinaryHeap<(usize, Reverse<usize>)> = b
        .iter()
        .map(|x| (window.gain(x, &open), Reverse(x)))
        .filter(|&(g, _)| g > 0)
        .collect();

    let mut remaining = n;
    let mut run = GreedyRun {
        chosen: Vec::new(),
        gains: Vec::new(),
    };
    while remaining > 0 {
        let (stale, Reverse(x)) = heap.pop().expect("initial cover guarantees progress");
        let gain = window.gain(x, &open);
        if gain == stale {
            window.hits(x).for_each(|i| open[i] = false);
            remaining -= gain;
            run.chosen.push(x);
            run.gains.push(gain);
        } else if gain > 0 {
            heap.push((gain, Reverse(x)));
        }
    }
    Ok(run)
}

/// Reference greedy: recounts every remaining candidate at every step.
pub fn greedy_cover_full_scan(a: &NatSet, b: &NatSet, m: usize, n: usize) -> Result<GreedyRun> {
    let elements = a.to_vec();
    let (window, mut open) = prepare(a, &elements, b, m, n)?;
    let mut left: Vec<usize> = b.to_vec();
    let mut remaining = n;
    let mut run = GreedyRun {
        chosen: Vec::new(),
        gains: Vec::new(),
    };
    while remaining > 0 {
        let mut best = (0usize, usize::MAX, 0usize);
        for (pos, &x) in left.iter().enumerate() {
            let g = window.gain(x, &open);
            if g > best.0 {
                best = (g, pos, x);
            }
        }
        let (gain, pos, x) = best;
        assert!(gain > 0, "initial cover guarantees progress");
        window.hits(x).for_each(|i| open[i] = false);
        left.remove(pos);
        remaining -= gain;
        run.chosen.push(x);
        run.gains.push(gain);
    }
    Ok(run)
}

/// Thins `B` to `S` with `(m, m+n] ⊆ A + S` and records the trace.
pub fn greedy_thin(inst: &GreedyInstance<'_>) -> Result<(NatSet, GreedyTrace)> {
    inst.check()?;
    let run = greedy_cover(inst.a, inst.b, inst.m, inst.n)?;
    let s = NatSet::from_clipped(inst.b.horizon(), run.chosen.iter().map(|&x| x as i64));
    let trace = GreedyTrace::new(run, inst.b.len(), inst.n, inst.denominator())?;
    Ok((s, trace))
}

/// `q0` for a denominator `D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Q0Choice {
    pub q0: usize,
    pub degenerate: bool,
}

/// `⌊D / ln D⌋` for `D >= 3`, otherwise 1 flagged degenerate.
pub fn choose_q0(d: i64) -> Q0Choice {
    if d >= 3 {
        let d = d as f64;
        Q0Choice {
            q0: (d / d.ln()).floor() as usize,
            degenerate: false,
        }
    } else {
        Q0Choice {
            q0: 1,
            degenerate: true,
        }
    }
}

/// `H(k) = 1 + 1/2 + … + 1/k` as an exact rational.
pub fn harmonic(k: usize) -> BigRational {
    let mut sum = BigRational::zero();
    for j in 1..=k {
        sum += BigRational::new(BigInt::from(1), BigInt::from(j));
    }
    sum
}

/// `(|B|/D)·H(q0) + n/q0`, exactly.
pub fn bound_two_term_exact(b_len: usize, d: i64, n: usize, q0: usize) -> Result<BigRational> {
    if q0 == 0 {
        return Err(Error::InvalidInput("q0 must be at least 1".into()));
    }
    if d <= 0 {
        return Err(Error::InvalidInput(format!("D must be positive, got {d}")));
    }
    let ratio = BigRational::new(BigInt::from(b_len), BigInt::from(d));
    Ok(ratio * harmonic(q0) + BigRational::new(BigInt::from(n), BigInt::from(q0)))
}

pub fn bound_two_term(b_len: usize, d: i64, n: usize, q0: usize) -> Result<f64> {
    let exact = bound_two_term_exact(b_len, d, n, q0)?;
    Ok(exact.to_f64().unwrap_or(f64::INFINITY))
}

/// `(|B|/D)·(1 + ln q0) + n/q0`.
pub fn bound_closed_form(b_len: usize, d: i64, n: usize, q0: usize) -> f64 {
    let q0 = q0.max(1) as f64;
    b_len as f64 / d as f64 * (1.0 + q0.ln()) + n as f64 / q0
}

/// Thins the block `(q, 4q] ∖ A` so its translates still cover `(2q, 4q]`.
///
/// Requires `|A ∩ [1, q)| > |A ∩ (q, 4q]|` and `4q <= horizon`; the initial
/// cover is established by [`block_cover`]. When `D < 3` the block is kept
/// whole and the trace is marked as a fallback.
pub fn thin_block(a: &NatSet, q: usize) -> Result<(NatSet, GreedyTrace)> {
    if q == 0 {
        return Err(Error::precondition("q >= 1"));
    }
    if 4 * q > a.horizon() {
        return Err(Error::precondition(format!(
            "4q <= horizon ({} > {})",
            4 * q,
            a.horizon()
        )));
    }
    let lower = a.count_in(Interval::closed_open(1, q as i64));
    let upper = a.count_in(Interval::open_closed(q as i64, 4 * q as i64));
    if lower <= upper {
        return Err(Error::precondition(format!(
            "|A ∩ [1, q)| > |A ∩ (q, 4q]| ({lower} <= {upper})"
        )));
    }
    let block = block_cover(a, q, 2 * q, 4 * q, false)?;
    let b = block.candidates.with_horizon(a.horizon());
    let inst = GreedyInstance {
        a,
        b: &b,
        m: 2 * q,
        n: 2 * q,
        x1: q,
        x2: 4 * q,
    };
    let d = inst.denominator();
    debug_assert_eq!(d, lower as i64 - upper as i64);
    if choose_q0(d).degenerate {
        let run = GreedyRun {
            chosen: Vec::new(),
            gains: Vec::new(),
        };
        let mut trace = GreedyTrace::new(run, b.len(), 2 * q, d)?;
        trace.fallback = true;
        return Ok((b, trace));
    }
    greedy_thin(&inst)
}
