mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use addcomp_core::greedy::{thin_block, greedy_cover, greedy_thin};
use addcomp_core::natset::io::{read_set, write_set, write_set_file};
use addcomp_core::natset::{dyadic_points, geometric_points};
use addcomp_core::oracle::{gap_detector, minimal_cover};
use addcomp_core::{build_complement, verify_cover, GreedyInstance, SequenceSpec};
use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand};

use input::{load_set, Range};
use report::{
    write_density_csv, write_json, BuildReport, CoverSummary, DensityReport, Estimates,
    OracleReport, ThinInstance, ThinReport, MISSING_SHOWN, TOOL_VERSION,
};

/// Sparse additive complements on a finite horizon.
///
/// Exit status: 0 verified, 1 verification failed, 2 invalid input or an
/// unsatisfied ratio condition.
#[derive(Debug, Parser)]
#[command(name = "addcomp", version)]
struct Cli {
    /// Worker threads; 0 uses every core. Never changes output.
    #[arg(long, global = true, env = "ADDCOMP_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write a sequence family's members up to the horizon as a set file.
    Generate {
        spec: String,
        #[arg(long)]
        horizon: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and certify a complement B for A.
    Build(BuildArgs),
    /// Check (lo, hi] ⊆ A + B.
    Verify {
        /// Set file or sequence spec.
        a: String,
        /// Set file.
        b: PathBuf,
        #[arg(long)]
        range: Range,
    },
    /// Greedily thin a translate cover.
    Thin(ThinArgs),
    /// Sample |S ∩ [1, n]| / n.
    Density {
        /// Set file or sequence spec.
        source: String,
        #[arg(long)]
        horizon: Option<usize>,
        /// Geometrically spaced samples instead of powers of two.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Points of (lo, hi] that no B ⊆ ℕ ∖ A can reach.
    Gap {
        a: String,
        #[arg(long)]
        range: Range,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Greedy cover against the exhaustive minimum on a small instance.
    Oracle {
        a: String,
        #[arg(long = "b-file")]
        b_file: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        horizon: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct BuildArgs {
    spec: String,
    #[arg(long, default_value_t = 1 << 20)]
    horizon: usize,
    /// Ratio hint, rounded to its shortest decimal form.
    #[arg(long)]
    alpha: Option<f64>,
    /// Where to write B.
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON report path; stdout when omitted.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ThinArgs {
    a: String,
    #[arg(long)]
    horizon: Option<usize>,
    /// Thin the block (q, 4q] ∖ A over (2q, 4q].
    #[arg(long, conflicts_with_all = ["m", "n", "x1", "x2", "b_file"])]
    q: Option<usize>,
    #[arg(long, requires_all = ["n", "x1", "x2", "b_file"])]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    x1: Option<usize>,
    #[arg(long)]
    x2: Option<usize>,
    #[arg(long = "b-file")]
    b_file: Option<PathBuf>,
    /// Where to write S.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    report: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            match err.downcast_ref::<addcomp_core::Error>() {
                Some(e) => eprintln!("error[{}]: {e}", e.kind()),
                None => eprintln!("error: {err:#}"),
            }
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Generate { spec, horizon, out } => {
            let set = SequenceSpec::parse(&spec, horizon)?.generate()?;
            match out {
                Some(path) => write_set_file(&set, path)?,
                None => write_set(&set, std::io::stdout().lock())?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Build(args) => build(args),
        Command::Verify { a, b, range } => verify(&a, &b, range),
        Command::Thin(args) => thin(args),
        Command::Density {
            source,
            horizon,
            samples,
            report,
            csv,
        } => {
            let set = load_set(&source, horizon)?;
            let h = set.horizon();
            let points = match samples {
                Some(k) => geometric_points(h, k),
                None => dyadic_points(h),
            };
            let profile = set.density_profile(&points)?;
            if let Some(path) = csv.as_deref() {
                write_density_csv(&profile.samples, Some(path))?;
            }
            let out = DensityReport {
                tool_version: TOOL_VERSION,
                source: &source,
                horizon: h,
                size: set.len(),
                density_samples: &profile.samples,
                density_estimates: Estimates {
                    upper: profile.upper_estimate,
                    lower: profile.lower_estimate,
                },
            };
            write_json(&out, report.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gap { a, range, out } => {
            let a_set = load_set(&a, Some(range.hi.max(1)))?;
            let gap = gap_detector(&a_set, range.lo, range.hi);
            if let Some(path) = out {
                write_set_file(&gap, path)?;
            }
            println!("gap in ({}, {}]: {} point(s)", range.lo, range.hi, gap.len());
            print_some(&gap.to_vec());
            println!("exact inside the range; says nothing about larger n");
            Ok(if gap.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Oracle {
            a,
            b_file,
            m,
            n,
            horizon,
        } => {
            let a_set = load_set(&a, Some(horizon.unwrap_or(m + n).max(m + n)))?;
            let b_set = read_set(&b_file, None)?;
            let run = greedy_cover(&a_set, &b_set, m, n)?;
            let (opt, size) = minimal_cover(&a_set, &b_set, m, n)?;
            let out = OracleReport {
                tool_version: TOOL_VERSION,
                a: &a,
                m,
                n,
                candidates: b_set.len(),
                greedy: CoverSummary {
                    size: run.chosen.len(),
                    chosen: run.chosen,
                },
                gains: run.gains,
                optimum: CoverSummary {
                    size,
                    chosen: opt.to_vec(),
                },
            };
            write_json(&out, None)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn build(args: BuildArgs) -> Result<ExitCode> {
    let spec = SequenceSpec::parse(&args.spec, args.horizon)?;
    let build = build_complement(&spec, args.alpha)?;
    if let Some(path) = &args.out {
        write_set_file(&build.b, path)?;
    }
    if let Some(path) = args.csv.as_deref() {
        write_density_csv(&build.density.samples, Some(path))?;
    }
    write_json(&BuildReport::new(&args.spec, args.alpha, &build), args.report.as_deref())?;

    let an = &build.analysis;
    let cov = &build.coverage;
    eprintln!(
        "gamma={} threshold={} blocks={} |B|={} coverage ({}, {}] {}",
        an.gamma,
        an.threshold,
        build.blocks.len(),
        build.b.len(),
        cov.lo,
        cov.hi,
        if cov.ok { "ok" } else { "FAILED" }
    );
    if !build.is_disjoint() {
        eprintln!("B meets A");
    }
    Ok(if build.verified() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn verify(a: &str, b: &Path, range: Range) -> Result<ExitCode> {
    let horizon = range.hi.max(1);
    let a_set = load_set(a, Some(horizon))?;
    let b_set = read_set(b, None)?;
    let cert = verify_cover(&a_set, &b_set, range.lo, range.hi);
    if cert.ok {
        println!("ok: ({}, {}] ⊆ A + B", range.lo, range.hi);
        return Ok(ExitCode::SUCCESS);
    }
    println!(
        "missing {} point(s) of ({}, {}]",
        cert.missing.len(),
        range.lo,
        range.hi
    );
    print_some(&cert.missing);
    Ok(ExitCode::from(1))
}

fn thin(args: ThinArgs) -> Result<ExitCode> {
    let (set, trace, horizon, instance) = if let Some(q) = args.q {
        let horizon = args.horizon.unwrap_or(4 * q);
        let a = load_set(&args.a, Some(horizon))?;
        let (s, trace) = thin_block(&a, q)?;
        let inst = ThinInstance {
            m: 2 * q,
            n: 2 * q,
            x1: q,
            x2: 4 * q,
            q: Some(q),
        };
        (s, trace, horizon, inst)
    } else {
        let (Some(m), Some(n), Some(x1), Some(x2), Some(b_file)) =
            (args.m, args.n, args.x1, args.x2, args.b_file.as_ref())
        else {
            bail!("thin needs either --q or all of --m --n --x1 --x2 --b-file");
        };
        let horizon = args.horizon.unwrap_or(x2).max(m + n);
        let a = load_set(&args.a, Some(horizon))?;
        let b = read_set(b_file, None)?.with_horizon(horizon);
        let (s, trace) = greedy_thin(&GreedyInstance {
            a: &a,
            b: &b,
            m,
            n,
            x1,
            x2,
        })?;
        (s, trace, horizon, ThinInstance { m, n, x1, x2, q: None })
    };
    if let Some(path) = &args.out {
        write_set_file(&set, path)?;
    }
    let within_bound = if trace.fallback {
        None
    } else {
        Some(trace.within_two_term_bound()?)
    };
    let out = ThinReport {
        tool_version: TOOL_VERSION,
        spec: &args.a,
        horizon,
        instance,
        size: set.len(),
        within_bound,
        trace: &trace,
    };
    write_json(&out, args.report.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

fn print_some(xs: &[usize]) {
    let shown: Vec<String> = xs.iter().take(MISSING_SHOWN).map(|x| x.to_string()).collect();
    if !shown.is_empty() {
        println!("  {}", shown.join(" "));
    }
    if xs.len() > MISSING_SHOWN {
        println!("  ... and {} more", xs.len() - MISSING_SHOWN);
    }
}
