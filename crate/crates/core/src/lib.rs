//! Sparse additive complements of a set `A ⊆ ℕ` drawn from `ℕ ∖ A`.
//!
//! The crate builds a set `B` disjoint from `A` whose sumset `A + B` covers
//! every natural past a computable threshold, for sequences whose consecutive
//! ratios stay bounded away from 1. Everything is exact on a finite horizon:
//!
//! - [`natset`]: dense sets on `[1, N]`, sumsets, counting, density samples;
//! - [`sequences`]: sequence families and the ratio analysis fixing `γ`;
//! - [`cover`]: block covers `(n, L] ⊆ A + ((m, L] ∖ A)` and counting bounds;
//! - [`greedy`]: greedy thinning of a block with its size bound;
//! - [`builder`]: the dyadic union, coverage certificates, density profile;
//! - [`oracle`]: brute-force references for differential tests.

pub mod builder;
pub mod cover;
pub mod error;
pub mod greedy;
pub mod natset;
pub mod oracle;
pub mod sequences;

pub use builder::{build_complement, verify_cover, ComplementBuild, CoverCertificate};
pub use error::{Error, Result};
pub use greedy::{GreedyInstance, GreedyTrace};
pub use natset::{sumset, Bounds, DensityProfile, Interval, NatSet};
pub use sequences::{Family, RatioAnalysis, SequenceSpec};

/// Version string embedded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
