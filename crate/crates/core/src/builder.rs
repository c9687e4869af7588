//! Dyadic block construction of a sparse complement `B ⊆ ℕ ∖ A`.
//!
//! For each exponent `i >= γ` with `2^(i+2)` inside the horizon, the block
//! `(2^i, 2^(i+2)] ∖ A` is thinned to `S_i` whose translates cover
//! `(2^(i+1), 2^(i+2)]`. The union of the `S_i` covers everything past
//! `2^(γ+1)` up to where the inputs are complete.

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::greedy::{thin_block, GreedyTrace};
use crate::natset::{dyadic_points, geometric_points, uncovered, DensityProfile, NatSet};
use crate::sequences::{block_population, RatioAnalysis, SequenceSpec};

#[derive(Debug, Clone, Serialize)]
pub struct BlockRecord {
    pub exponent: u32,
    /// `q = 2^exponent`; the block is `(q, 4q]`.
    pub base: usize,
    pub size: usize,
    pub d: i64,
    pub q0: usize,
    pub degenerate: bool,
    pub fallback: bool,
    pub bound_two_term: f64,
    /// `|S| <= bound_two_term`, checked exactly; `None` for fallback blocks.
    pub within_bound: Option<bool>,
    /// `|A ∩ (q, 4q]|`
    pub a_in_block: usize,
    /// `|A ∩ (q, 4q]| <= r`
    pub within_r: bool,
    #[serde(skip)]
    pub set: NatSet,
    #[serde(skip)]
    pub trace: GreedyTrace,
}

/// Exact claim that `(lo, hi] ⊆ A + B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverCertificate {
    pub lo: usize,
    pub hi: usize,
    pub ok: bool,
    pub missing: Vec<usize>,
    pub a_digest: String,
    pub b_digest: String,
}

#[derive(Debug, Clone)]
pub struct ComplementBuild {
    pub analysis: RatioAnalysis,
    pub horizon: usize,
    pub a: NatSet,
    pub blocks: Vec<BlockRecord>,
    pub b: NatSet,
    pub threshold: usize,
    pub coverage: CoverCertificate,
    pub density: DensityProfile,
}

impl ComplementBuild {
    pub fn is_disjoint(&self) -> bool {
        self.a.is_disjoint(&self.b)
    }

    /// Disjoint from `A` and covering the certified range.
    pub fn verified(&self) -> bool {
        self.is_disjoint() && self.coverage.ok
    }
}

/// `(lo, hi] ⊆ A + B`, checked point by point through the windowed sumset.
///
/// Both sets are read as finite sets truncated at `hi`.
pub fn verify_cover(a: &NatSet, b: &NatSet, lo: usize, hi: usize) -> CoverCertificate {
    let horizon = hi.max(1);
    let gaps = uncovered(&a.with_horizon(horizon), &b.with_horizon(horizon), lo, hi);
    let missing = gaps.to_vec();
    CoverCertificate {
        lo,
        hi,
        ok: missing.is_empty(),
        missing,
        a_digest: a.digest(),
        b_digest: b.digest(),
    }
}

/// Generates `A`, analyses it and assembles the block union.
pub fn build_complement(spec: &SequenceSpec, alpha_hint: Option<f64>) -> Result<ComplementBuild> {
    let a = spec.generate()?;
    let analysis = spec.analyze(alpha_hint)?;
    build_from_analysis(a, analysis)
}

/// Block construction for an already analysed `A`.
pub fn build_from_analysis(a: NatSet, analysis: RatioAnalysis) -> Result<ComplementBuild> {
    let horizon = a.horizon();
    let gamma = analysis.gamma;
    let needed = 1usize.checked_shl(gamma + 2).unwrap_or(usize::MAX);
    if needed > horizon {
        return Err(Error::HorizonTooSmall { horizon, needed });
    }

    let last = (gamma..usize::BITS - 2)
        .take_while(|&i| 4usize << i <= horizon)
        .last()
        .expect("first block fits");

    let r = analysis.r as usize;
    let blocks = (gamma..=last)
        .into_par_iter()
        .map(|i| {
            let q = 1usize << i;
            let (set, trace) = thin_block(&a, q).map_err(|e| Error::BlockPreconditionFailed {
                exponent: i,
                reason: e.to_string(),
            })?;
            let a_in_block = block_population(&a, q);
            let within_bound = if trace.fallback {
                None
            } else {
                Some(trace.within_two_term_bound()?)
            };
            Ok(BlockRecord {
                exponent: i,
                base: q,
                size: set.len(),
                d: trace.d,
                q0: trace.q0,
                degenerate: trace.degenerate,
                fallback: trace.fallback,
                bound_two_term: trace.bound_two_term,
                within_bound,
                a_in_block,
                within_r: a_in_block <= r,
                set,
                trace,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut b = NatSet::empty(horizon);
    for block in &blocks {
        b = b.union(&block.set);
    }

    let threshold = analysis.threshold;
    let hi = horizon.min(2usize << last);
    let coverage = verify_cover(&a, &b, threshold, hi);
    let density = b.density_profile(&dyadic_points(horizon))?;

    Ok(ComplementBuild {
        analysis,
        horizon,
        a,
        blocks,
        b,
        threshold,
        coverage,
        density,
    })
}

/// Partial averages `(1/t)·Σ_{i<=t} ln(x_i)/x_i` at up to `sample_count`
/// geometrically spaced `t`.
pub fn density_zero_diagnostic<T>(x: &[T], sample_count: usize) -> Vec<(usize, f64)>
where
    T: ToPrimitive,
{
    let points = geometric_points(x.len(), sample_count);
    let mut out = Vec::with_capacity(points.len());
    let mut sum = 0.0f64;
    let mut t = 0usize;
    for p in points {
        while t < p {
            let v = x[t].to_f64().unwrap_or(f64::INFINITY);
            sum += v.ln() / v;
            t += 1;
        }
        out.push((t, sum / t as f64));
    }
    out
}
