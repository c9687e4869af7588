use std::path::Path;
use std::str::FromStr;

use addcomp_core::natset::io::read_set;
use addcomp_core::{Family, NatSet, SequenceSpec};
use anyhow::{bail, Context, Result};

/// A half-open-left range `(lo, hi]` written `lo..hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected lo..hi, got {s:?}"))?;
        let lo: usize = lo.trim().parse().map_err(|_| format!("bad lower end {lo:?}"))?;
        let hi: usize = hi.trim().parse().map_err(|_| format!("bad upper end {hi:?}"))?;
        if hi < lo {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Range { lo, hi })
    }
}

/// Reads `arg` as a set file when such a file exists and the argument is not
/// a `family:` spec, otherwise as a sequence spec generated up to `horizon`.
pub fn load_set(arg: &str, horizon: Option<usize>) -> Result<NatSet> {
    if !arg.contains(':') && Path::new(arg).is_file() {
        let set = read_set(arg, None)?;
        return Ok(match horizon {
            Some(h) => set.with_horizon(h),
            None => set,
        });
    }
    let family = Family::from_str(arg)?;
    let Some(horizon) = horizon else {
        bail!("--horizon is required for sequence spec {arg:?}");
    };
    let set = SequenceSpec::new(family, horizon)
        .generate()
        .with_context(|| format!("generating {arg}"))?;
    Ok(set)
}
