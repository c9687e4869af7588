//! Finite sets of natural numbers truncated at a horizon.
//!
//! A [`NatSet`] is a dense indicator over `[1, horizon]`. Every operation is
//! exact on that window and drops whatever falls outside it. Sums are the one
//! place where truncation needs care: a representation `n = x + y` with
//! `n <= horizon` always has `x, y < n`, so truncating the summands loses
//! nothing below the horizon.

mod bits;
pub mod io;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

use bits::{shifted_word, word_count, WORD};

/// Shifter count above which sumset work is split across the rayon pool.
const PAR_SHIFTERS: usize = 512;
/// Word chunk size for the parallel uncovered-point scan.
const PAR_WINDOW_WORDS: usize = 2048;

/// Which endpoints of an interval are included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bounds {
    /// `(lo, hi)`
    Open,
    /// `[lo, hi]`
    Closed,
    /// `(lo, hi]`
    OpenClosed,
    /// `[lo, hi)`
    ClosedOpen,
}

/// An integer interval with possibly negative or empty bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
    pub bounds: Bounds,
}

impl Interval {
    pub const fn new(lo: i64, hi: i64, bounds: Bounds) -> Self {
        Self { lo, hi, bounds }
    }

    pub const fn open(lo: i64, hi: i64) -> Self {
        Self::new(lo, hi, Bounds::Open)
    }

    pub const fn closed(lo: i64, hi: i64) -> Self {
        Self::new(lo, hi, Bounds::Closed)
    }

    /// `(lo, hi]`
    pub const fn open_closed(lo: i64, hi: i64) -> Self {
        Self::new(lo, hi, Bounds::OpenClosed)
    }

    /// `[lo, hi)`
    pub const fn closed_open(lo: i64, hi: i64) -> Self {
        Self::new(lo, hi, Bounds::ClosedOpen)
    }

    /// Inclusive integer endpoints, or `None` when the interval is empty.
    pub fn inclusive(&self) -> Option<(i64, i64)> {
        let (first, last) = match self.bounds {
            Bounds::Open => (self.lo.checked_add(1)?, self.hi.checked_sub(1)?),
            Bounds::Closed => (self.lo, self.hi),
            Bounds::OpenClosed => (self.lo.checked_add(1)?, self.hi),
            Bounds::ClosedOpen => (self.lo, self.hi.checked_sub(1)?),
        };
        (first <= last).then_some((first, last))
    }

    /// Inclusive endpoints clipped to `[1, horizon]`.
    pub fn clip(&self, horizon: usize) -> Option<(usize, usize)> {
        let (first, last) = self.inclusive()?;
        let first = first.max(1);
        let last = last.min(horizon as i64);
        (first <= last).then_some((first as usize, last as usize))
    }
}

/// Exact finite set of naturals in `[1, horizon]`.
///
/// Bit `e` of the backing words is element `e`; bit 0 and every bit above the
/// horizon stay clear, so derived equality compares horizon and membership.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NatSet {
    horizon: usize,
    words: Vec<u64>,
}

impl NatSet {
    /// The empty set with the given horizon.
    ///
    /// # Panics
    ///
    /// Panics if `horizon` is zero.
    pub fn empty(horizon: usize) -> Self {
        assert!(horizon >= 1, "horizon must be at least 1");
        Self {
            horizon,
            words: vec![0; word_count(horizon)],
        }
    }

    /// `[1, horizon]`.
    pub fn full(horizon: usize) -> Self {
        Self::from_interval(Interval::closed(1, horizon as i64), horizon)
    }

    pub fn from_interval(interval: Interval, horizon: usize) -> Self {
        let mut set = Self::empty(horizon);
        if let Some((first, last)) = interval.clip(horizon) {
            set.fill_range(first, last);
        }
        set
    }

    /// Builds a set from a strictly increasing list of elements in `[1, horizon]`.
    pub fn from_sorted(horizon: usize, elements: &[usize]) -> Result<Self> {
        let mut set = Self::empty(horizon);
        let mut prev = 0usize;
        for &e in elements {
            if e <= prev {
                return Err(Error::InvalidInput(format!(
                    "elements must be strictly increasing positive integers, got {e} after {prev}"
                )));
            }
            if e > horizon {
                return Err(Error::InvalidInput(format!(
                    "element {e} exceeds horizon {horizon}"
                )));
            }
            set.insert(e);
            prev = e;
        }
        Ok(set)
    }

    /// Builds a set from arbitrary integers, dropping anything outside `[1, horizon]`.
    pub fn from_clipped<I>(horizon: usize, elements: I) -> Self
    where
        I: IntoIterator<Item = i64>,
    {
        let mut set = Self::empty(horizon);
        for e in elements {
            if e >= 1 && e <= horizon as i64 {
                set.insert(e as usize);
            }
        }
        set
    }

    pub fn horizon(&self) -> usize {
        self.horizon
    }

    pub fn contains(&self, e: usize) -> bool {
        e >= 1 && e <= self.horizon && self.words[e / WORD] >> (e % WORD) & 1 == 1
    }

    pub fn contains_int(&self, e: i64) -> bool {
        e >= 1 && self.contains(e as usize)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn max(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `|A ∩ [1, n]|`.
    pub fn count_upto(&self, n: usize) -> usize {
        let n = n.min(self.horizon);
        let full = (n + 1) / WORD;
        let mut count: usize = self.words[..full]
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum();
        let rem = (n + 1) % WORD;
        if rem > 0 {
            count += (self.words[full] & ((1u64 << rem) - 1)).count_ones() as usize;
        }
        count
    }

    /// `|A ∩ interval|`.
    pub fn count_in(&self, interval: Interval) -> usize {
        match interval.clip(self.horizon) {
            Some((first, last)) => self.count_upto(last) - self.count_upto(first - 1),
            None => 0,
        }
    }

    /// The elements of this set inside `interval`, keeping the horizon.
    pub fn restrict(&self, interval: Interval) -> NatSet {
        self.intersection(&NatSet::from_interval(interval, self.horizon))
    }

    /// `[1, horizon] ∖ self`.
    pub fn complement(&self) -> NatSet {
        let mut out = NatSet::full(self.horizon);
        out.words
            .iter_mut()
            .zip(&self.words)
            .for_each(|(o, w)| *o &= !w);
        out
    }

    /// Same membership truncated or padded to a new horizon.
    pub fn with_horizon(&self, horizon: usize) -> NatSet {
        let mut out = NatSet::empty(horizon);
        let n = out.words.len().min(self.words.len());
        out.words[..n].copy_from_slice(&self.words[..n]);
        out.mask_tail();
        out
    }

    /// Union; the result keeps `self`'s horizon.
    pub fn union(&self, other: &NatSet) -> NatSet {
        self.zip_words(other, |a, b| a | b)
    }

    /// Intersection; the result keeps `self`'s horizon.
    pub fn intersection(&self, other: &NatSet) -> NatSet {
        self.zip_words(other, |a, b| a & b)
    }

    /// `self ∖ other`; the result keeps `self`'s horizon.
    pub fn difference(&self, other: &NatSet) -> NatSet {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &NatSet) -> bool {
        self.words.iter().enumerate().all(|(i, &w)| {
            let o = other.words.get(i).copied().unwrap_or(0);
            w & !o == 0
        })
    }

    pub fn is_disjoint(&self, other: &NatSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    /// `B + u`, clipped to `[1, horizon]`.
    pub fn translate(&self, u: i64, horizon: usize) -> NatSet {
        NatSet::from_clipped(horizon, self.iter().map(|y| y as i64 + u))
    }

    /// `u − B`, clipped to `[1, horizon]`.
    pub fn reflect(&self, u: i64, horizon: usize) -> NatSet {
        NatSet::from_clipped(horizon, self.iter().map(|y| u - y as i64))
    }

    /// Hex SHA-256 of the canonical set file text.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        for e in self.iter() {
            hasher.update(e.to_string().as_bytes());
            hasher.update(b"\n");
        }
        hex::encode(hasher.finalize())
    }

    /// Exact counts `|A ∩ [1, n]|` at each sample point.
    ///
    /// Sample points must be strictly increasing and lie in `[1, horizon]`.
    /// The upper and lower estimates are the extreme ratios over the later
    /// half of the samples.
    pub fn density_profile(&self, points: &[usize]) -> Result<DensityProfile> {
        if points.is_empty() {
            return Err(Error::InvalidInput("no density sample points".into()));
        }
        let mut prev = 0usize;
        for &n in points {
            if n <= prev {
                return Err(Error::InvalidInput(format!(
                    "sample points must be strictly increasing and positive, got {n} after {prev}"
                )));
            }
            if n > self.horizon {
                return Err(Error::InvalidInput(format!(
                    "sample point {n} exceeds horizon {}",
                    self.horizon
                )));
            }
            prev = n;
        }

        let mut samples = Vec::with_capacity(points.len());
        let mut count = 0usize;
        let mut last = 0usize;
        for &n in points {
            count += self.count_in(Interval::open_closed(last as i64, n as i64));
            last = n;
            samples.push(DensitySample {
                n,
                count,
                ratio: count as f64 / n as f64,
            });
        }
        let tail = &samples[samples.len() / 2..];
        let upper_estimate = tail.iter().map(|s| s.ratio).fold(f64::MIN, f64::max);
        let lower_estimate = tail.iter().map(|s| s.ratio).fold(f64::MAX, f64::min);
        Ok(DensityProfile {
            samples,
            upper_estimate,
            lower_estimate,
        })
    }

    pub(crate) fn insert(&mut self, e: usize) {
        debug_assert!(e >= 1 && e <= self.horizon);
        self.words[e / WORD] |= 1u64 << (e % WORD);
    }

    fn fill_range(&mut self, first: usize, last: usize) {
        let mut e = first;
        while e <= last {
            if e.is_multiple_of(WORD) && e + WORD - 1 <= last {
                self.words[e / WORD] = u64::MAX;
                e += WORD;
            } else {
                self.insert(e);
                e += 1;
            }
        }
        self.mask_tail();
    }

    fn zip_words(&self, other: &NatSet, op: impl Fn(u64, u64) -> u64) -> NatSet {
        let mut out = self.clone();
        for (i, w) in out.words.iter_mut().enumerate() {
            *w = op(*w, other.words.get(i).copied().unwrap_or(0));
        }
        out.mask_tail();
        out
    }

    fn mask_tail(&mut self) {
        bits::mask_tail(&mut self.words, self.horizon);
    }
}

impl fmt::Debug for NatSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const SHOWN: usize = 16;
        write!(f, "NatSet[1..={}]{{", self.horizon)?;
        for (i, e) in self.iter().take(SHOWN + 1).enumerate() {
            if i == SHOWN {
                write!(f, ", … ({} total)", self.len())?;
                break;
            }
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl<'a> IntoIterator for &'a NatSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// `{x + y : x ∈ A, y ∈ B, x + y ≤ horizon}`.
///
/// Shifts the larger operand by every element of the smaller one and ORs the
/// results together, word at a time.
pub fn sumset(a: &NatSet, b: &NatSet, horizon: usize) -> NatSet {
    let (shifters, base) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let len = word_count(horizon);
    let shifts: Vec<usize> = shifters.iter().take_while(|&s| s < horizon).collect();

    let accumulate = |acc: &mut Vec<u64>, s: usize| {
        let top = len.min(base.words.len() + s / WORD + 1);
        for (i, w) in acc.iter_mut().enumerate().take(top).skip(s / WORD) {
            *w |= shifted_word(&base.words, i, s);
        }
    };

    let mut words = if shifts.len() >= PAR_SHIFTERS {
        shifts
            .par_chunks(PAR_SHIFTERS / 4)
            .map(|chunk| {
                let mut acc = vec![0u64; len];
                chunk.iter().for_each(|&s| accumulate(&mut acc, s));
                acc
            })
            .reduce(
                || vec![0u64; len],
                |mut x, y| {
                    x.iter_mut().zip(&y).for_each(|(a, b)| *a |= b);
                    x
                },
            )
    } else {
        let mut acc = vec![0u64; len];
        shifts.iter().for_each(|&s| accumulate(&mut acc, s));
        acc
    };
    bits::mask_tail(&mut words, horizon);
    NatSet { horizon, words }
}

/// Points of `(lo, hi]` that are **not** of the form `x + y` with `x ∈ A`, `y ∈ B`.
///
/// The result has horizon `max(hi, 1)`. The scan stops shifting as soon as
/// the window is fully covered, so dense covers cost only a few passes.
pub fn uncovered(a: &NatSet, b: &NatSet, lo: usize, hi: usize) -> NatSet {
    let horizon = hi.max(1);
    let mut target = NatSet::from_interval(Interval::open_closed(lo as i64, hi as i64), horizon);
    let (shifters, base) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let shifts: Vec<usize> = shifters.iter().take_while(|&s| s < hi).collect();
    let first_word = (lo + 1) / WORD;

    let scan = |offset: usize, chunk: &mut [u64]| {
        let (mut start, mut end) = (0usize, chunk.len());
        for &s in &shifts {
            while start < end && chunk[start] == 0 {
                start += 1;
            }
            while end > start && chunk[end - 1] == 0 {
                end -= 1;
            }
            if start == end {
                break;
            }
            let from = start.max((s / WORD).saturating_sub(offset));
            for (j, w) in chunk.iter_mut().enumerate().take(end).skip(from) {
                *w &= !shifted_word(&base.words, offset + j, s);
            }
        }
    };

    let window = &mut target.words[first_word..];
    if window.len() > PAR_WINDOW_WORDS {
        window
            .par_chunks_mut(PAR_WINDOW_WORDS)
            .enumerate()
            .for_each(|(k, chunk)| scan(first_word + k * PAR_WINDOW_WORDS, chunk));
    } else {
        scan(first_word, window);
    }
    target
}

/// One sampled point of a density profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensitySample {
    pub n: usize,
    pub count: usize,
    pub ratio: f64,
}

/// Finite-horizon estimates of `|A ∩ [1, n]| / n`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityProfile {
    pub samples: Vec<DensitySample>,
    pub upper_estimate: f64,
    pub lower_estimate: f64,
}

/// Powers of two `2, 4, …` up to `horizon`.
pub fn dyadic_points(horizon: usize) -> Vec<usize> {
    std::iter::successors(Some(2usize), |&n| n.checked_mul(2))
        .take_while(|&n| n <= horizon)
        .collect()
}

/// Up to `count` geometrically spaced points in `[1, horizon]`, ending at `horizon`.
pub fn geometric_points(horizon: usize, count: usize) -> Vec<usize> {
    if count == 0 || horizon == 0 {
        return Vec::new();
    }
    if count == 1 {
        return vec![horizon];
    }
    let top = (horizon as f64).ln();
    let mut points: Vec<usize> = (0..count)
        .map(|k| {
            let x = (top * k as f64 / (count - 1) as f64).exp().round() as usize;
            x.clamp(1, horizon)
        })
        .collect();
    points.dedup();
    if points.last() != Some(&horizon) {
        points.push(horizon);
    }
    points
}
