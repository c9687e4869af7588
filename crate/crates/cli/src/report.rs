//! JSON and CSV emitters. Field order in the structs is the key order on disk.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use addcomp_core::builder::BlockRecord;
use addcomp_core::natset::DensitySample;
use addcomp_core::{ComplementBuild, GreedyTrace};
use anyhow::{Context, Result};
use serde::Serialize;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Missing elements listed before falling back to a count.
pub const MISSING_SHOWN: usize = 20;

#[derive(Debug, Serialize)]
pub struct Parameters {
    pub n0: usize,
    pub alpha: f64,
    pub alpha_exact: String,
    pub r: u32,
    pub p: usize,
    pub gamma: u32,
    pub threshold: usize,
    pub certified: bool,
}

#[derive(Debug, Serialize)]
pub struct Coverage {
    pub lo: usize,
    pub hi: usize,
    pub ok: bool,
    pub missing_count: usize,
    pub missing: Vec<usize>,
    pub a_digest: String,
    pub b_digest: String,
}

#[derive(Debug, Serialize)]
pub struct Complement {
    pub size: usize,
    pub disjoint: bool,
    pub digest: String,
}

#[derive(Debug, Serialize)]
pub struct Estimates {
    pub upper: f64,
    pub lower: f64,
}

#[derive(Debug, Serialize)]
pub struct BuildReport<'a> {
    pub tool_version: &'static str,
    pub spec: &'a str,
    pub horizon: usize,
    pub alpha_hint: Option<f64>,
    pub parameters: Parameters,
    pub blocks: &'a [BlockRecord],
    pub coverage: Coverage,
    pub density_samples: &'a [DensitySample],
    pub density_estimates: Estimates,
    pub complement: Complement,
}

impl<'a> BuildReport<'a> {
    pub fn new(spec: &'a str, alpha_hint: Option<f64>, build: &'a ComplementBuild) -> Self {
        let an = &build.analysis;
        let cov = &build.coverage;
        BuildReport {
            tool_version: TOOL_VERSION,
            spec,
            horizon: build.horizon,
            alpha_hint,
            parameters: Parameters {
                n0: an.n0,
                alpha: an.alpha,
                alpha_exact: format!("{}/{}", an.alpha_exact.num, an.alpha_exact.den),
                r: an.r,
                p: an.p,
                gamma: an.gamma,
                threshold: an.threshold,
                certified: an.certified,
            },
            blocks: &build.blocks,
            coverage: Coverage {
                lo: cov.lo,
                hi: cov.hi,
                ok: cov.ok,
                missing_count: cov.missing.len(),
                missing: cov.missing.iter().copied().take(MISSING_SHOWN).collect(),
                a_digest: cov.a_digest.clone(),
                b_digest: cov.b_digest.clone(),
            },
            density_samples: &build.density.samples,
            density_estimates: Estimates {
                upper: build.density.upper_estimate,
                lower: build.density.lower_estimate,
            },
            complement: Complement {
                size: build.b.len(),
                disjoint: build.is_disjoint(),
                digest: build.b.digest(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ThinInstance {
    pub m: usize,
    pub n: usize,
    pub x1: usize,
    pub x2: usize,
    pub q: Option<usize>,
}

#[derive(Debug, Serialize)]
pub struct ThinReport<'a> {
    pub tool_version: &'static str,
    pub spec: &'a str,
    pub horizon: usize,
    pub instance: ThinInstance,
    pub size: usize,
    pub within_bound: Option<bool>,
    pub trace: &'a GreedyTrace,
}

#[derive(Debug, Serialize)]
pub struct DensityReport<'a> {
    pub tool_version: &'static str,
    pub source: &'a str,
    pub horizon: usize,
    pub size: usize,
    pub density_samples: &'a [DensitySample],
    pub density_estimates: Estimates,
}

#[derive(Debug, Serialize)]
pub struct CoverSummary {
    pub size: usize,
    pub chosen: Vec<usize>,
}

#[derive(Debug, Serialize)]
pub struct OracleReport<'a> {
    pub tool_version: &'static str,
    pub a: &'a str,
    pub m: usize,
    pub n: usize,
    pub candidates: usize,
    pub greedy: CoverSummary,
    pub gains: Vec<usize>,
    pub optimum: CoverSummary,
}

/// Opens `path` for writing, or stdout when absent or `-`.
pub fn sink(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) if p != Path::new("-") => {
            let file = File::create(p).with_context(|| format!("creating {}", p.display()))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        _ => Ok(Box::new(BufWriter::new(io::stdout().lock()))),
    }
}

pub fn write_json<T: Serialize>(value: &T, path: Option<&Path>) -> Result<()> {
    let mut out = sink(path)?;
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    out.flush()?;
    Ok(())
}

/// `n,count,ratio` rows.
pub fn write_density_csv(samples: &[DensitySample], path: Option<&Path>) -> Result<()> {
    let mut w = csv::Writer::from_writer(sink(path)?);
    for s in samples {
        w.serialize(s)?;
    }
    w.flush()?;
    Ok(())
}
