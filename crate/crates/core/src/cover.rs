//! Block covers `(n, L] ⊆ A + ((m, L] ∖ A)` and the two translate-counting
//! bounds used by the thinning argument.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::natset::{uncovered, Interval, NatSet};

/// Outcome of [`block_cover`].
#[derive(Debug, Clone)]
pub struct BlockCoverResult {
    pub m: usize,
    pub n: usize,
    /// Upper endpoint `L`, the integer part of `l·n`.
    pub l_end: usize,
    /// `max(A ∩ [1, m])`.
    pub u: usize,
    /// `(m, L] ∖ A`.
    pub candidates: NatSet,
    /// `(n, L]`.
    pub covered: NatSet,
    /// For each `t ∈ (n, L]`, the pair `(a, v)` with `a + v = t` and smallest `a`.
    pub witnesses: Option<Vec<(usize, usize, usize)>>,
}

impl BlockCoverResult {
    /// The argument's bookkeeping: for each `y ∈ X = {x ∈ (m, L] ∩ A : u + x ∈ (n, L]}`,
    /// the set `U_y = {u + y − a : a ∈ A ∩ [1, m]}` and a non-member `v ∈ U_y`
    /// giving `u + y = (u + y − v) + v`.
    pub fn proof_trace(&self, a: &NatSet) -> ProofTrace {
        let low: Vec<usize> = a.restrict(Interval::closed(1, self.m as i64)).to_vec();
        let (n, l_end, u) = (self.n, self.l_end, self.u);
        let steps = a
            .restrict(Interval::open_closed(self.m as i64, l_end as i64))
            .iter()
            .filter(|&x| u + x > n && u + x <= l_end)
            .map(|y| {
                let u_y: Vec<usize> = low.iter().map(|&x| u + y - x).collect();
                let v = u_y.iter().copied().find(|&v| !a.contains(v));
                ProofStep {
                    y,
                    v,
                    b: v.map(|v| u + y - v),
                    u_y,
                }
            })
            .collect();
        ProofTrace {
            u,
            upper_count: a.count_in(Interval::open_closed(self.m as i64, l_end as i64)),
            steps,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ProofTrace {
    pub u: usize,
    /// `|A ∩ (m, L]|`, which every `|U_y|` must exceed.
    pub upper_count: usize,
    pub steps: Vec<ProofStep>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ProofStep {
    pub y: usize,
    pub u_y: Vec<usize>,
    pub v: Option<usize>,
    pub b: Option<usize>,
}

/// Checks `(n, L] ⊆ A + ((m, L] ∖ A)` exactly.
///
/// Requires `n >= 2m`, `L > n`, `|A ∩ [1, m]| > |A ∩ (m, L]|` and
/// `horizon >= L`. When these hold the cover always succeeds, so
/// [`Error::CoverFailed`] indicates a bug.
pub fn block_cover(
    a: &NatSet,
    m: usize,
    n: usize,
    l_end: usize,
    with_witnesses: bool,
) -> Result<BlockCoverResult> {
    if m == 0 {
        return Err(Error::precondition("m >= 1"));
    }
    if n < 2 * m {
        return Err(Error::precondition(format!("n >= 2m (n = {n}, m = {m})")));
    }
    if l_end <= n {
        return Err(Error::precondition(format!("L > n (L = {l_end}, n = {n})")));
    }
    if a.horizon() < l_end {
        return Err(Error::precondition(format!(
            "horizon >= L (horizon = {}, L = {l_end})",
            a.horizon()
        )));
    }
    let lower = a.count_in(Interval::closed(1, m as i64));
    let upper = a.count_in(Interval::open_closed(m as i64, l_end as i64));
    if lower <= upper {
        return Err(Error::precondition(format!(
            "|A ∩ [1, m]| > |A ∩ (m, L]| ({lower} <= {upper})"
        )));
    }
    let u = a
        .restrict(Interval::closed(1, m as i64))
        .max()
        .ok_or_else(|| Error::precondition("A ∩ [1, m] non-empty"))?;

    let candidates = NatSet::from_interval(Interval::open_closed(m as i64, l_end as i64), l_end)
        .difference(&a.with_horizon(l_end));
    let a_window = a.with_horizon(l_end);
    let gaps = uncovered(&a_window, &candidates, n, l_end);
    if let Some(first) = gaps.min() {
        return Err(Error::CoverFailed {
            lo: n,
            hi: l_end,
            missing: gaps.len(),
            first,
        });
    }

    let witnesses = with_witnesses.then(|| {
        (n + 1..=l_end)
            .map(|t| {
                let a_elem = a_window
                    .iter()
                    .take_while(|&x| x < t)
                    .find(|&x| candidates.contains(t - x))
                    .expect("cover verified above");
                (t, a_elem, t - a_elem)
            })
            .collect()
    });

    Ok(BlockCoverResult {
        m,
        n,
        l_end,
        u,
        candidates,
        covered: NatSet::from_interval(Interval::open_closed(n as i64, l_end as i64), l_end),
        witnesses,
    })
}

/// Both sides of `Σ_{i∈B} 1_{A+i}(n) >= |A ∩ [n−b, n−a)| − |(a, b] ∖ B|`.
///
/// Returns `(lhs, rhs)` where `lhs = |A ∩ (n − B)|`.
pub fn translate_count_lower_bound(
    a_set: &NatSet,
    b_set: &NatSet,
    a: usize,
    b: usize,
    n: usize,
) -> Result<(usize, i64)> {
    let window = Interval::open_closed(a as i64, b as i64);
    if b_set.count_in(window) != b_set.len() {
        return Err(Error::precondition(format!("B ⊆ ({a}, {b}]")));
    }
    if n > a_set.horizon() {
        return Err(Error::precondition(format!(
            "n <= horizon (n = {n}, horizon = {})",
            a_set.horizon()
        )));
    }
    let lhs = b_set
        .iter()
        .filter(|&i| a_set.contains_int(n as i64 - i as i64))
        .count();
    let gap = b.saturating_sub(a) - b_set.len();
    let base = a_set.count_in(Interval::closed_open(n as i64 - b as i64, n as i64 - a as i64));
    Ok((lhs, base as i64 - gap as i64))
}

/// `(Σ_{x∈B} |(A + x) ∩ R|, r·|B|)`, after checking every translate meets `R`
/// in at most `r` points.
pub fn translate_count_upper_bound(
    a_set: &NatSet,
    b_set: &NatSet,
    r_set: &NatSet,
    r: usize,
) -> Result<(usize, usize)> {
    let mut total = 0usize;
    for x in b_set.iter() {
        let count = r_set
            .iter()
            .filter(|&t| t > x && a_set.contains(t - x))
            .count();
        if count > r {
            return Err(Error::HypothesisViolated { x, count, r });
        }
        total += count;
    }
    Ok((total, r * b_set.len()))
}
