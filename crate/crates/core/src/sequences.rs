//! Sequence families for the set `A` and the ratio analysis that fixes the
//! block-construction parameters.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::natset::{io, Interval, NatSet};

/// A rule producing a strictly increasing sequence of naturals.
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Explicit(Vec<usize>),
    /// `1, k, k², …`
    Powers(u64),
    /// `⌊c·αⁱ⌋` for `i = 0, 1, …`, zeros and repeats dropped.
    Geometric { c: f64, alpha: f64 },
    /// `1, 2, 3, 5, 8, …` (the repeated 1 dropped).
    Fibonacci,
    Primes,
    Composites,
    Squares,
}

impl Family {
    /// Families whose ratio condition holds analytically rather than only on
    /// the generated prefix.
    pub fn is_certified(&self) -> bool {
        matches!(self, Family::Powers(_) | Family::Geometric { .. })
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Family::Powers(k) if k < 2 => Err(Error::InvalidInput(format!(
                "powers base must be at least 2, got {k}"
            ))),
            Family::Geometric { c, alpha } => {
                if !(c.is_finite() && c > 0.0) {
                    return Err(Error::InvalidInput(format!(
                        "geometric c must be positive, got {c}"
                    )));
                }
                if !(alpha.is_finite() && alpha > 1.0) {
                    return Err(Error::InvalidInput(format!(
                        "geometric alpha must exceed 1, got {alpha}"
                    )));
                }
                Ok(())
            }
            Family::Explicit(ref xs) => {
                if let Some(w) = xs.windows(2).find(|w| w[1] <= w[0]) {
                    return Err(Error::InvalidInput(format!(
                        "explicit sequence not strictly increasing at {} -> {}",
                        w[0], w[1]
                    )));
                }
                if xs.first() == Some(&0) {
                    return Err(Error::InvalidInput("explicit sequence contains 0".into()));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Explicit(xs) => write!(f, "explicit[{}]", xs.len()),
            Family::Powers(k) => write!(f, "powers:{k}"),
            Family::Geometric { c, alpha } => write!(f, "geometric:c={c},alpha={alpha}"),
            Family::Fibonacci => f.write_str("fib"),
            Family::Primes => f.write_str("primes"),
            Family::Composites => f.write_str("composites"),
            Family::Squares => f.write_str("squares"),
        }
    }
}

/// Parses `powers:2`, `geometric:c=3,alpha=1.5`, `primes`, `composites`,
/// `fib`, `squares`, `explicit:1,10,100` and `file:PATH`.
///
/// `file:` reads the set file eagerly.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let bad = |msg: &str| Error::InvalidInput(format!("sequence spec {s:?}: {msg}"));
        let family = match (head, arg) {
            ("powers", Some(k)) => {
                Family::Powers(k.trim().parse().map_err(|_| bad("base must be an integer"))?)
            }
            ("geometric", Some(params)) => {
                let (mut c, mut alpha) = (None, None);
                for kv in params.split(',') {
                    let (key, value) = kv.split_once('=').ok_or_else(|| bad("expected key=value"))?;
                    let value: f64 = value.trim().parse().map_err(|_| bad("non-numeric value"))?;
                    match key.trim() {
                        "c" => c = Some(value),
                        "alpha" => alpha = Some(value),
                        other => return Err(bad(&format!("unknown parameter {other}"))),
                    }
                }
                Family::Geometric {
                    c: c.ok_or_else(|| bad("missing c"))?,
                    alpha: alpha.ok_or_else(|| bad("missing alpha"))?,
                }
            }
            ("explicit", Some(list)) => {
                let xs = list
                    .split(',')
                    .filter(|t| !t.trim().is_empty())
                    .map(|t| t.trim().parse::<usize>())
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| bad("explicit elements must be natural numbers"))?;
                Family::Explicit(xs)
            }
            ("file", Some(path)) => Family::Explicit(io::read_elements(path)?),
            ("fib" | "fibonacci", None) => Family::Fibonacci,
            ("primes", None) => Family::Primes,
            ("composites", None) => Family::Composites,
            ("squares", None) => Family::Squares,
            _ => return Err(bad("unknown family")),
        };
        family.validate()?;
        Ok(family)
    }
}

/// A family together with the horizon it is generated up to.
#[derive(Debug, Clone, PartialEq)]
pub struct SequenceSpec {
    pub family: Family,
    pub horizon: usize,
}

impl SequenceSpec {
    pub fn new(family: Family, horizon: usize) -> Self {
        Self { family, horizon }
    }

    pub fn parse(s: &str, horizon: usize) -> Result<Self> {
        Ok(Self::new(s.parse()?, horizon))
    }

    /// The family's members in `[1, horizon]`.
    pub fn generate(&self) -> Result<NatSet> {
        if self.horizon == 0 {
            return Err(Error::InvalidInput("horizon must be at least 1".into()));
        }
        self.family.validate()?;
        let n = self.horizon;
        let set = match self.family {
            Family::Explicit(ref xs) => {
                let within: Vec<usize> = xs.iter().copied().take_while(|&x| x <= n).collect();
                NatSet::from_sorted(n, &within)?
            }
            Family::Powers(k) => {
                let k = k as u128;
                let powers = std::iter::successors(Some(1u128), |&x| x.checked_mul(k))
                    .take_while(|&x| x <= n as u128)
                    .map(|x| x as i64);
                NatSet::from_clipped(n, powers)
            }
            Family::Geometric { c, alpha } => {
                let mut values = Vec::new();
                let mut x = c;
                while x < (n as f64) + 1.0 {
                    values.push(x.floor() as i64);
                    x *= alpha;
                }
                NatSet::from_clipped(n, values)
            }
            Family::Fibonacci => {
                let fib = std::iter::successors(Some((1u128, 2u128)), |&(a, b)| Some((b, a + b)))
                    .map(|(a, _)| a)
                    .take_while(|&a| a <= n as u128)
                    .map(|a| a as i64);
                NatSet::from_clipped(n, fib)
            }
            Family::Primes => primes_upto(n),
            Family::Composites => {
                let mut non_composite = primes_upto(n);
                non_composite.insert(1);
                non_composite.complement()
            }
            Family::Squares => {
                NatSet::from_clipped(n, (1i64..).map(|k| k * k).take_while(|&s| s <= n as i64))
            }
        };
        Ok(set)
    }

    /// Generates the sequence and runs [`analyze_ratio`], marking the result
    /// certified for families with an analytic ratio bound.
    pub fn analyze(&self, alpha_hint: Option<f64>) -> Result<RatioAnalysis> {
        let seq = self.generate()?.to_vec();
        let mut analysis = analyze_ratio(&seq, alpha_hint)?;
        analysis.certified = self.family.is_certified();
        Ok(analysis)
    }
}

/// Primes in `[1, horizon]` by a sieve of Eratosthenes over odd numbers.
pub fn primes_upto(horizon: usize) -> NatSet {
    // composite[i] marks 2i + 1
    let half = horizon / 2 + 1;
    let mut composite = vec![false; half];
    let mut i = 1;
    while (2 * i + 1) * (2 * i + 1) <= horizon {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = p * p / 2;
            while j < half {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    let odd_primes = (1..half)
        .filter(|&i| !composite[i])
        .map(|i| (2 * i + 1) as i64);
    NatSet::from_clipped(horizon, std::iter::once(2).chain(odd_primes))
}

/// An exact positive rational used for the growth factor α.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub const fn new(num: u64, den: u64) -> Self {
        Self { num, den }
    }

    /// Exact value of the shortest decimal that round-trips to `x`.
    pub fn from_f64(x: f64) -> Result<Self> {
        if !x.is_finite() || x <= 0.0 {
            return Err(Error::InvalidInput(format!("ratio must be positive, got {x}")));
        }
        let text = format!("{x}");
        let (int, frac) = text.split_once('.').unwrap_or((&text, ""));
        let digits = format!("{int}{frac}");
        let too_precise = || Error::InvalidInput(format!("ratio {x} has too many digits"));
        if frac.len() > 18 {
            return Err(too_precise());
        }
        let num: u64 = digits.parse().map_err(|_| too_precise())?;
        let den = 10u64.pow(frac.len() as u32);
        let g = gcd(num, den);
        Ok(Self::new(num / g, den / g))
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// `next >= self · prev`, exactly.
    pub fn dominates(self, prev: usize, next: usize) -> bool {
        next as u128 * self.den as u128 >= prev as u128 * self.num as u128
    }

    /// Smallest `r >= 1` with `selfʳ >= 4`; `None` if `self <= 1`.
    pub fn steps_to_quadruple(self) -> Option<u32> {
        if self.num <= self.den {
            return None;
        }
        let (num, den) = (BigUint::from(self.num), BigUint::from(self.den));
        let reaches = |r: u32| num.pow(r) >= BigUint::from(4u32) * den.pow(r);
        let estimate = (4f64.ln() / self.to_f64().ln()).ceil().max(1.0) as u32;
        let mut r = estimate.saturating_sub(2).max(1);
        while !reaches(r) {
            r += 1;
        }
        while r > 1 && reaches(r - 1) {
            r -= 1;
        }
        Some(r)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Candidate growth factors, largest first.
pub const ALPHA_GRID: [Ratio; 5] = [
    Ratio::new(2, 1),
    Ratio::new(3, 2),
    Ratio::new(5, 4),
    Ratio::new(11, 10),
    Ratio::new(21, 20),
];

/// Parameters of the dyadic block construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioAnalysis {
    /// 1-based index from which `a_{n+1} >= α·a_n` holds.
    pub n0: usize,
    pub alpha: f64,
    pub alpha_exact: Ratio,
    /// Smallest `r` with `αʳ >= 4`.
    pub r: u32,
    /// `1 + max(a_{n0}, a_{2r+1})`.
    pub p: usize,
    /// `2 + ⌊log₂ p⌋`, the first block exponent.
    pub gamma: u32,
    /// `2^(gamma+1)`, the first point the block union covers.
    pub threshold: usize,
    pub certified: bool,
}

impl RatioAnalysis {
    /// Re-checks `a_{n+1} >= α·a_n` for every index `n >= n0` in `seq`.
    pub fn holds_on(&self, seq: &[usize]) -> bool {
        seq.windows(2)
            .skip(self.n0 - 1)
            .all(|w| self.alpha_exact.dominates(w[0], w[1]))
    }
}

/// Minimal 1-based `n0` with `a_{n+1} >= α·a_n` for all `n0 <= n < len`.
///
/// The last ratio must hold; an empty tail does not count as a witness.
fn minimal_tail_index(seq: &[usize], alpha: Ratio) -> Option<usize> {
    let pairs = seq.len().checked_sub(1)?;
    if pairs == 0 || !alpha.dominates(seq[pairs - 1], seq[pairs]) {
        return None;
    }
    let mut n0 = pairs;
    while n0 > 1 && alpha.dominates(seq[n0 - 2], seq[n0 - 1]) {
        n0 -= 1;
    }
    Some(n0)
}

/// Finds `(n0, α)` witnessing the ratio condition on a finite increasing
/// sequence and derives `r`, `p`, `γ` and the coverage threshold.
///
/// With a hint, that α is checked and used. Otherwise the largest value of
/// [`ALPHA_GRID`] with a valid tail wins. The result is never marked
/// certified; see [`SequenceSpec::analyze`].
pub fn analyze_ratio(seq: &[usize], alpha_hint: Option<f64>) -> Result<RatioAnalysis> {
    if let Some(w) = seq.windows(2).find(|w| w[1] <= w[0]) {
        return Err(Error::InvalidInput(format!(
            "sequence not strictly increasing at {} -> {}",
            w[0], w[1]
        )));
    }
    if seq.first() == Some(&0) {
        return Err(Error::InvalidInput("sequence contains 0".into()));
    }

    let (alpha, n0) = match alpha_hint {
        Some(hint) => {
            if hint.is_nan() || hint <= 1.0 {
                return Err(Error::InvalidInput(format!(
                    "alpha hint must exceed 1, got {hint}"
                )));
            }
            let alpha = Ratio::from_f64(hint)?;
            let n0 = minimal_tail_index(seq, alpha).ok_or_else(|| {
                Error::RatioNotSatisfied(format!(
                    "a_(n+1) >= {alpha}·a_n fails at the end of the {}-element prefix",
                    seq.len()
                ))
            })?;
            (alpha, n0)
        }
        None => ALPHA_GRID
            .iter()
            .find_map(|&alpha| minimal_tail_index(seq, alpha).map(|n0| (alpha, n0)))
            .ok_or_else(|| {
                Error::RatioNotSatisfied(format!(
                    "no grid alpha admits a tail index on the {}-element prefix",
                    seq.len()
                ))
            })?,
    };

    let r = alpha
        .steps_to_quadruple()
        .expect("alpha > 1 was established above");
    let needed = 2 * r as usize + 2;
    if seq.len() < needed {
        return Err(Error::IndexOutOfRange {
            index: needed,
            available: seq.len(),
        });
    }
    let p = 1 + seq[n0 - 1].max(seq[2 * r as usize]);
    let gamma = 2 + p.ilog2();
    let threshold = 1usize
        .checked_shl(gamma + 1)
        .ok_or_else(|| Error::InvalidInput(format!("threshold 2^{} overflows", gamma + 1)))?;

    Ok(RatioAnalysis {
        n0,
        alpha: alpha.to_f64(),
        alpha_exact: alpha,
        r,
        p,
        gamma,
        threshold,
        certified: false,
    })
}

/// `|A ∩ (x, 4x]|`, the per-block count bounded by `r` once `x >= p`.
pub fn block_population(a: &NatSet, x: usize) -> usize {
    a.count_in(Interval::open_closed(x as i64, 4 * x as i64))
}
