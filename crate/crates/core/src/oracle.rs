//! Brute-force references used to cross-check the fast paths.

use crate::error::{Error, Result};
use crate::natset::{uncovered, NatSet};

/// Largest candidate set [`minimal_cover`] will search exhaustively.
pub const MINIMAL_COVER_CAP: usize = 22;

/// `{x + y ≤ horizon}` by a plain double loop over the elements.
pub fn sumset_reference(a: &NatSet, b: &NatSet, horizon: usize) -> NatSet {
    let xs = a.to_vec();
    let ys = b.to_vec();
    let mut hit = vec![false; horizon + 1];
    for &x in &xs {
        for &y in &ys {
            if x + y <= horizon {
                hit[x + y] = true;
            }
        }
    }
    NatSet::from_clipped(
        horizon,
        hit.iter()
            .enumerate()
            .filter(|(_, &h)| h)
            .map(|(i, _)| i as i64),
    )
}

/// A minimum-size `S ⊆ B` with `(m, m+n] ⊆ A + S`, lexicographically
/// smallest among minimum covers. Exhaustive; `|B|` is capped at
/// [`MINIMAL_COVER_CAP`].
pub fn minimal_cover(a: &NatSet, b: &NatSet, m: usize, n: usize) -> Result<(NatSet, usize)> {
    let candidates = b.to_vec();
    if candidates.len() > MINIMAL_COVER_CAP {
        return Err(Error::TooLarge {
            size: candidates.len(),
            cap: MINIMAL_COVER_CAP,
        });
    }
    let words = n.div_ceil(64);
    let masks: Vec<Vec<u64>> = candidates
        .iter()
        .map(|&s| {
            let mut mask = vec![0u64; words];
            for t in m + 1..=m + n {
                if t > s && a.contains(t - s) {
                    let i = t - m - 1;
                    mask[i / 64] |= 1 << (i % 64);
                }
            }
            mask
        })
        .collect();

    let mut all = vec![0u64; words];
    masks.iter().for_each(|mk| or_into(&mut all, mk));
    let uncovered_count = n - popcount(&all);
    if uncovered_count > 0 {
        return Err(Error::NoCover {
            uncovered: uncovered_count,
        });
    }

    let widest = masks.iter().map(|mk| popcount(mk)).max().unwrap_or(0);
    let mut picked = Vec::new();
    for size in 0..=candidates.len() {
        let mut search = Search {
            masks: &masks,
            n,
            widest,
            picked: &mut picked,
        };
        if search.run(0, size, &vec![0u64; words]) {
            let elements: Vec<usize> = picked.iter().map(|&i| candidates[i]).collect();
            let set = NatSet::from_sorted(b.horizon(), &elements)?;
            return Ok((set, size));
        }
    }
    unreachable!("the full candidate set covers the window")
}

struct Search<'a> {
    masks: &'a [Vec<u64>],
    n: usize,
    widest: usize,
    picked: &'a mut Vec<usize>,
}

impl Search<'_> {
    /// Depth-first over index combinations in lexicographic order.
    fn run(&mut self, from: usize, left: usize, covered: &[u64]) -> bool {
        let have = popcount(covered);
        if have == self.n {
            // Any cover reached with picks to spare would have been found at a
            // smaller size already.
            return left == 0;
        }
        if left == 0 || (self.n - have) > left * self.widest {
            return false;
        }
        for i in from..self.masks.len() {
            if self.masks.len() - i < left {
                break;
            }
            let mut next = covered.to_vec();
            or_into(&mut next, &self.masks[i]);
            self.picked.push(i);
            if self.run(i + 1, left - 1, &next) {
                return true;
            }
            self.picked.pop();
        }
        false
    }
}

fn or_into(dst: &mut [u64], src: &[u64]) {
    dst.iter_mut().zip(src).for_each(|(d, s)| *d |= s);
}

fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// `(lo, hi] ∖ (A + ([1, hi] ∖ A))`: points no complement of `A` inside
/// `ℕ ∖ A` can reach. Exact for every point in the range, since summands of
/// a point `<= hi` are themselves below `hi`.
pub fn gap_detector(a: &NatSet, lo: usize, hi: usize) -> NatSet {
    let horizon = hi.max(1);
    let a = a.with_horizon(horizon);
    let outside = a.complement();
    uncovered(&a, &outside, lo, hi)
}
