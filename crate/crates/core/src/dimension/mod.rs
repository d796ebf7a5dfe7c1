//! Upper and lower bounds on the Hausdorff dimension of Gauss–Cantor sets
//! from the contraction rates of the `n`-th step intervals.

use std::fmt;
use std::io::Write;

use num_bigint::BigInt;
use num_traits::{FromPrimitive, Pow};
use rayon::prelude::*;

use crate::arith::{parse_decimal, truncate_decimal, Rational};
use crate::error::{Error, Result};
use crate::words::{parse_compact, FiniteWord};

mod interval;

pub use interval::Interval;

/// Largest number of step intervals `interval_scales` will enumerate.
pub const DEFAULT_COST_GUARD: u64 = 1 << 20;
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A finite alphabet of words; the set of continued fractions built by
/// concatenating them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussCantorSpec {
    alphabet: Vec<FiniteWord>,
}

impl GaussCantorSpec {
    pub fn new(alphabet: Vec<FiniteWord>) -> Result<Self> {
        if alphabet.len() < 2 {
            return Err(Error::Invalid("an alphabet needs at least two words".into()));
        }
        for (i, a) in alphabet.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::EmptyWord);
            }
            for (j, b) in alphabet.iter().enumerate() {
                if i != j && a.digits().starts_with(b.digits()) {
                    return Err(Error::Invalid(format!("`{a}` begins with `{b}`")));
                }
            }
        }
        Ok(GaussCantorSpec { alphabet })
    }

    /// Parses `"1_2;2_2"`: compact words separated by `;`.
    pub fn parse(text: &str) -> Result<Self> {
        let words = text
            .split(';')
            .map(|w| parse_compact(w.trim()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(words)
    }

    pub fn alphabet(&self) -> &[FiniteWord] {
        &self.alphabet
    }
}

impl fmt::Display for GaussCantorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.alphabet.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

/// Contraction rates of one step interval: the smallest and largest
/// derivative of the expanding map across it, both enclosed.
#[derive(Clone, Debug, PartialEq)]
pub struct ScalePair {
    pub word: FiniteWord,
    pub lambda_min: Interval,
    pub lambda_max: Interval,
}

/// `∏ [0; d_i, …, d_m, over(tail)]^{-2}` over every digit of `digits`.
fn tail_product(digits: &[u32], tail: u32) -> Interval {
    let mut y = Interval::periodic_tail(tail);
    let mut product = Interval::point(1.0);
    for &d in digits.iter().rev() {
        y = (Interval::point(d as f64) + y).recip();
        product = product * y;
    }
    (product * product).recip()
}

fn word_at(spec: &GaussCantorSpec, mut index: u64, depth: usize) -> FiniteWord {
    let m = spec.alphabet.len() as u64;
    let mut blocks = vec![0usize; depth];
    for slot in blocks.iter_mut().rev() {
        *slot = (index % m) as usize;
        index /= m;
    }
    let digits: Vec<u32> = blocks
        .iter()
        .flat_map(|&b| spec.alphabet[b].digits().iter().copied())
        .collect();
    FiniteWord::new(digits).expect("alphabet digits")
}

pub fn interval_scales(spec: &GaussCantorSpec, depth: usize) -> Result<Vec<ScalePair>> {
    interval_scales_guarded(spec, depth, DEFAULT_COST_GUARD)
}

/// One `ScalePair` per word of `alphabet^depth`, in lexicographic order of
/// alphabet indices. The two extreme tails `over(1)` and `over(2)` give the
/// derivative at the ends of the interval.
pub fn interval_scales_guarded(spec: &GaussCantorSpec, depth: usize, guard: u64) -> Result<Vec<ScalePair>> {
    if depth == 0 {
        return Err(Error::Invalid("depth must be positive".into()));
    }
    let count = (spec.alphabet.len() as u64)
        .checked_pow(depth as u32)
        .filter(|&c| c <= guard)
        .ok_or_else(|| Error::Invalid(format!("alphabet^{depth} exceeds the cost guard of {guard} intervals")))?;
    Ok((0..count)
        .into_par_iter()
        .map(|i| {
            let word = word_at(spec, i, depth);
            let ones = tail_product(word.digits(), 1);
            let twos = tail_product(word.digits(), 2);
            ScalePair {
                lambda_min: ones.min(&twos),
                lambda_max: ones.max(&twos),
                word,
            }
        })
        .collect())
}

/// Writes `word,lambda_min_lo,lambda_min_hi,lambda_max_lo,lambda_max_hi`.
pub fn write_scales_csv<W: Write>(scales: &[ScalePair], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let io = |e: csv::Error| Error::Invalid(format!("csv: {e}"));
    w.write_record(["word", "lambda_min_lo", "lambda_min_hi", "lambda_max_lo", "lambda_max_hi"])
        .map_err(io)?;
    for s in scales {
        let digits: String = s.word.digits().iter().map(|d| d.to_string()).collect();
        w.write_record([
            digits,
            format!("{:e}", s.lambda_min.lo),
            format!("{:e}", s.lambda_min.hi),
            format!("{:e}", s.lambda_max.lo),
            format!("{:e}", s.lambda_max.hi),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::Invalid(format!("csv: {e}")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExponentMode {
    /// Lower bound on the dimension, from the largest derivatives.
    Alpha,
    /// Upper bound on the dimension, from the smallest derivatives.
    Beta,
}

/// `lo ≤ s* ≤ hi` for the root `s*` of `Σ scale^{−s} = 1`, with the
/// enclosed sums at both ends as certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct ExponentBracket {
    pub mode: ExponentMode,
    pub lo: f64,
    pub hi: f64,
    /// Encloses `Σ scale^{−lo}`; its lower end is at least 1.
    pub sum_at_lo: Interval,
    /// Encloses `Σ scale^{−hi}`; its upper end is at most 1.
    pub sum_at_hi: Interval,
}

impl ExponentBracket {
    /// The end that is safe for the mode: `lo` for a lower bound, `hi` for an upper one.
    pub fn value(&self) -> f64 {
        match self.mode {
            ExponentMode::Alpha => self.lo,
            ExponentMode::Beta => self.hi,
        }
    }

    pub fn certificate_holds(&self) -> bool {
        self.lo <= self.hi && self.sum_at_lo.lo >= 1.0 && self.sum_at_hi.hi <= 1.0
    }

    /// `lo` rounded down to `digits` places.
    pub fn lower_decimal(&self, digits: usize) -> String {
        truncate_decimal(&exact(self.lo), digits)
    }

    /// `hi` rounded up to `digits` places.
    pub fn upper_decimal(&self, digits: usize) -> String {
        let x = exact(self.hi);
        let down = truncate_decimal(&x, digits);
        let floor = parse_decimal(&down).expect("own output");
        if floor == x {
            return down;
        }
        let step = Rational::new(1.into(), BigInt::from(10).pow(digits as u32));
        truncate_decimal(&(floor + step), digits)
    }

    /// The safe end, rounded toward safety.
    pub fn decimal(&self, digits: usize) -> String {
        match self.mode {
            ExponentMode::Alpha => self.lower_decimal(digits),
            ExponentMode::Beta => self.upper_decimal(digits),
        }
    }
}

fn exact(x: f64) -> Rational {
    Rational::from_f64(x).expect("finite exponent")
}

fn power_sum(scales: &[Interval], s: f64) -> Interval {
    // fixed order keeps the sum reproducible
    scales
        .iter()
        .fold(Interval::point(0.0), |acc, x| acc + x.inverse_power(s))
}

/// Bisection on `[0, 1]` for `Σ scale^{−s} = 1` until the bracket is
/// narrower than `tol`.
pub fn solve_exponent(scales: &[Interval], mode: ExponentMode, tol: f64) -> Result<ExponentBracket> {
    if !(tol > 0.0) {
        return Err(Error::Invalid("tolerance must be positive".into()));
    }
    if scales.is_empty() {
        return Err(Error::Invalid("no scales".into()));
    }
    if let Some(bad) = scales.iter().find(|x| !(x.lo > 1.0)) {
        return Err(Error::Invalid(format!("scale {} is not a contraction rate", bad.lo)));
    }
    let count = Interval::point(scales.len() as f64);
    if scales.len() == 1 {
        return Ok(ExponentBracket {
            mode,
            lo: 0.0,
            hi: 0.0,
            sum_at_lo: count,
            sum_at_hi: count,
        });
    }
    let mut lo = 0.0;
    let mut hi = 1.0;
    let mut sum_lo = count;
    let mut sum_hi = power_sum(scales, 1.0);
    if sum_hi.hi > 1.0 {
        return Err(Error::Invalid("exponent is not below 1".into()));
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let sum = power_sum(scales, mid);
        if sum.lo >= 1.0 {
            lo = mid;
            sum_lo = sum;
        } else if sum.hi <= 1.0 {
            hi = mid;
            sum_hi = sum;
        } else {
            return Err(Error::Invalid(format!(
                "floating enclosures too wide to reach tolerance {tol:e} (bracket {lo}..{hi})"
            )));
        }
    }
    Ok(ExponentBracket {
        mode,
        lo,
        hi,
        sum_at_lo: sum_lo,
        sum_at_hi: sum_hi,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct DimensionBounds {
    pub depth: usize,
    pub intervals: usize,
    /// Lower bound: roots of `Σ Λ^{−s} = 1`.
    pub alpha: ExponentBracket,
    /// Upper bound: roots of `Σ λ^{−s} = 1`.
    pub beta: ExponentBracket,
}

pub fn hd_bounds(spec: &GaussCantorSpec, depth: usize, tol: f64) -> Result<DimensionBounds> {
    let scales = interval_scales(spec, depth)?;
    bounds_from_scales(&scales, depth, tol)
}

pub fn bounds_from_scales(scales: &[ScalePair], depth: usize, tol: f64) -> Result<DimensionBounds> {
    for s in scales {
        if s.lambda_min.lo > s.lambda_max.hi {
            return Err(Error::Invalid(format!("min and max scales swapped at {}", s.word)));
        }
    }
    let largest: Vec<Interval> = scales.iter().map(|s| s.lambda_max).collect();
    let smallest: Vec<Interval> = scales.iter().map(|s| s.lambda_min).collect();
    let alpha = solve_exponent(&largest, ExponentMode::Alpha, tol)?;
    let beta = solve_exponent(&smallest, ExponentMode::Beta, tol)?;
    if alpha.lo > beta.hi {
        return Err(Error::Invalid(format!("lower bound {} exceeds upper bound {}", alpha.lo, beta.hi)));
    }
    Ok(DimensionBounds {
        depth,
        intervals: scales.len(),
        alpha,
        beta,
    })
}

#[cfg(test)]
mod tests;
