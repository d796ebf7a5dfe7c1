use std::fmt;

use crate::arith::{Enclosure, Rational, SurdSum};
use crate::error::{Error, Result};
use crate::words::{check_binary_alphabet, parse_marked, FiniteWord, OneSidedWord};

use super::eval_periodic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Min,
    Max,
}

impl Direction {
    pub fn opposite(self) -> Self {
        match self {
            Direction::Min => Direction::Max,
            Direction::Max => Direction::Min,
        }
    }
}

/// Digit in {1,2} that pushes a continued fraction toward `dir` when placed
/// at partial-quotient index `index` (the integer part is index 0).
pub fn preferred_digit(index: usize, dir: Direction) -> u32 {
    match (index % 2 == 0, dir) {
        (true, Direction::Max) | (false, Direction::Min) => 2,
        _ => 1,
    }
}

/// Tail in {1,2}^N starting at partial-quotient index `prefix_length` that
/// extremizes the continued fraction for every fixed prefix.
pub fn extremal_tail(prefix_length: usize, dir: Direction) -> OneSidedWord {
    OneSidedWord::from_parts(
        Vec::new(),
        vec![
            preferred_digit(prefix_length, dir),
            preferred_digit(prefix_length + 1, dir),
        ],
    )
}

/// Partial assignment of digits on a contiguous range of positions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    start: i64,
    cells: Vec<Option<u32>>,
}

impl Window {
    pub fn new(start: i64, len: usize) -> Self {
        Window {
            start,
            cells: vec![None; len],
        }
    }

    pub fn from_digits(start: i64, digits: &[u32]) -> Result<Self> {
        check_binary_alphabet(digits)?;
        Ok(Window {
            start,
            cells: digits.iter().map(|&d| Some(d)).collect(),
        })
    }

    /// Compact word with a `*` marking position 0; unmarked words start at 0.
    pub fn from_marked(text: &str) -> Result<Self> {
        let (word, mark) = parse_marked(text)?;
        Self::from_digits(-(mark.unwrap_or(0) as i64), word.digits())
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// One past the last position.
    pub fn end(&self) -> i64 {
        self.start + self.cells.len() as i64
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, pos: i64) -> bool {
        pos >= self.start && pos < self.end()
    }

    pub fn get(&self, pos: i64) -> Option<u32> {
        if self.contains(pos) {
            self.cells[(pos - self.start) as usize]
        } else {
            None
        }
    }

    pub fn set(&mut self, pos: i64, digit: Option<u32>) -> Result<()> {
        if let Some(d) = digit {
            check_binary_alphabet(&[d])?;
        }
        if !self.contains(pos) {
            return Err(Error::Invalid(format!(
                "position {pos} outside window [{}, {})",
                self.start,
                self.end()
            )));
        }
        self.cells[(pos - self.start) as usize] = digit;
        Ok(())
    }

    /// Grows the range so that it covers `pos`, leaving new cells free.
    pub fn extend_to(&mut self, pos: i64) {
        if pos < self.start {
            let extra = (self.start - pos) as usize;
            let mut cells = vec![None; extra];
            cells.append(&mut self.cells);
            self.cells = cells;
            self.start = pos;
        } else if pos >= self.end() {
            let extra = (pos - self.end() + 1) as usize;
            self.cells.extend(std::iter::repeat(None).take(extra));
        }
    }

    pub fn assigned_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_some()).count()
    }

    pub fn free_positions(&self) -> impl Iterator<Item = i64> + '_ {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(move |(i, _)| self.start + i as i64)
    }

    /// The digits if every cell is assigned.
    pub fn to_word(&self) -> Option<FiniteWord> {
        let digits: Option<Vec<u32>> = self.cells.iter().copied().collect();
        digits.and_then(|d| FiniteWord::new(d).ok())
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.start, self.end() - 1)?;
        for c in &self.cells {
            match c {
                Some(d) => write!(f, " {d}")?,
                None => write!(f, " ?")?,
            }
        }
        Ok(())
    }
}

/// `center + [0; forward] + [0; backward]` with its exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaExpression {
    pub center: u32,
    pub forward: OneSidedWord,
    pub backward: OneSidedWord,
    pub value: SurdSum,
}

impl LambdaExpression {
    pub fn new(center: u32, forward: OneSidedWord, backward: OneSidedWord) -> Self {
        let fwd = eval_periodic(center as i64, &forward);
        let bwd = eval_periodic(0, &backward);
        let value = match fwd.try_add(&bwd) {
            Ok(v) => SurdSum::from(v),
            Err(_) => SurdSum::pair(fwd, bwd),
        };
        LambdaExpression {
            center,
            forward,
            backward,
            value,
        }
    }
}

impl fmt::Display for LambdaExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}; {}] + [0; {}]", self.center, self.forward, self.backward)
    }
}

/// Certified range of `λ_j` over all bi-infinite {1,2}-sequences agreeing
/// with a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaBounds {
    pub position: i64,
    pub lower: LambdaExpression,
    pub upper: LambdaExpression,
}

impl LambdaBounds {
    pub fn enclosure(&self, width: &Rational) -> Enclosure {
        let lo = crate::arith::enclose(&self.lower.value, width);
        let hi = crate::arith::enclose(&self.upper.value, width);
        Enclosure::new(lo.lo, hi.hi)
    }
}

/// Center digit and the explicit digits on each side of the extremal
/// completion; the sides continue with `extremal_tail(len + 1, dir)`.
fn completion_digits(window: &Window, j: i64, dir: Direction) -> (u32, Vec<u32>, Vec<u32>) {
    let center = window.get(j).unwrap_or(match dir {
        Direction::Min => 1,
        Direction::Max => 2,
    });
    // [0; a_{j+1}, a_{j+2}, …]: partial quotient i sits at position j + i
    let side = |step: i64, reach: i64| -> Vec<u32> {
        (1..=reach)
            .map(|i| {
                window
                    .get(j + step * i)
                    .unwrap_or_else(|| preferred_digit(i as usize, dir))
            })
            .collect()
    };
    (
        center,
        side(1, (window.end() - j - 1).max(0)),
        side(-1, (j - window.start()).max(0)),
    )
}

fn completion(window: &Window, j: i64, dir: Direction) -> LambdaExpression {
    let (center, fwd, bwd) = completion_digits(window, j, dir);
    let with_tail = |explicit: Vec<u32>| {
        let tail = extremal_tail(explicit.len() + 1, dir);
        OneSidedWord::from_parts(explicit, tail.period().to_vec())
    };
    LambdaExpression::new(center, with_tail(fwd), with_tail(bwd))
}

fn approx_side(explicit: &[u32], dir: Direction) -> f64 {
    let root3 = 3f64.sqrt();
    let mut x = match preferred_digit(explicit.len() + 1, dir) {
        1 => root3 - 1.0,
        _ => (root3 - 1.0) / 2.0,
    };
    for &d in explicit.iter().rev() {
        x = 1.0 / (d as f64 + x);
    }
    x
}

/// Floating-point values of the two extremal completions of `λ_j`.
///
/// Each continued-fraction step is a contraction on (0, 1) with rounding
/// error below 2⁻⁵², so the result is within `1e-13` of the exact bounds for
/// windows of a few hundred digits.
pub fn approx_lambda_bounds(window: &Window, j: i64) -> (f64, f64) {
    let value = |dir| {
        let (center, fwd, bwd) = completion_digits(window, j, dir);
        center as f64 + approx_side(&fwd, dir) + approx_side(&bwd, dir)
    };
    (value(Direction::Min), value(Direction::Max))
}

/// Exact extremes of `λ_j` consistent with the window.
///
/// Each side of `λ_j` is monotone in each free digit with the direction fixed
/// by parity, so the coordinate-wise extremal completion is the global one.
pub fn bound_lambda_window(window: &Window, j: i64) -> Result<LambdaBounds> {
    if window.assigned_count() == 0 {
        return Err(Error::EmptyWindow);
    }
    Ok(LambdaBounds {
        position: j,
        lower: completion(window, j, Direction::Min),
        upper: completion(window, j, Direction::Max),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::surd_compare;
    use crate::cf::{eval_finite, eval_periodic};
    use std::cmp::Ordering;

    fn tail_string(prefix_length: usize, dir: Direction) -> String {
        extremal_tail(prefix_length, dir).to_string()
    }

    #[test]
    fn tail_examples() {
        assert_eq!(tail_string(0, Direction::Max), "over(2 1)");
        assert_eq!(tail_string(1, Direction::Max), "over(1 2)");
        assert_eq!(tail_string(0, Direction::Min), "over(1 2)");
        assert_eq!(tail_string(1, Direction::Min), "over(2 1)");
    }

    #[test]
    fn single_digit_window() {
        let w = Window::from_marked("2").unwrap();
        let b = bound_lambda_window(&w, 0).unwrap();
        assert_eq!(b.lower.to_string(), "[2; over(2 1)] + [0; over(2 1)]");
        assert_eq!(b.upper.to_string(), "[2; over(1 2)] + [0; over(1 2)]");
        assert!((b.lower.value.approx_f64() - (1.0 + 3f64.sqrt())).abs() < 1e-12);
        assert!((b.upper.value.approx_f64() - (2.0 * 3f64.sqrt())).abs() < 1e-12);
    }

    #[test]
    fn empty_window_is_an_error() {
        assert!(matches!(
            bound_lambda_window(&Window::new(0, 3), 0),
            Err(Error::EmptyWindow)
        ));
    }

    #[test]
    fn window_edits() {
        let mut w = Window::from_marked("1 2* 2").unwrap();
        assert_eq!((w.start(), w.end()), (-1, 2));
        w.extend_to(-3);
        w.extend_to(3);
        assert_eq!((w.start(), w.end()), (-3, 4));
        assert_eq!(w.get(0), Some(2));
        assert_eq!(w.free_positions().collect::<Vec<_>>(), vec![-3, -2, 2, 3]);
        assert!(w.set(7, Some(1)).is_err());
        assert!(w.set(2, Some(3)).is_err());
    }

    /// Every {1,2} word of length 12 laid on positions -6..6 with its last
    /// digits repeated periodically must have `λ_0` inside the bounds, and the
    /// bounds must be approached within the cylinder gap.
    #[test]
    fn brute_force_oracle() {
        let assigned = [(-2i64, 1u32), (0, 2), (1, 2), (3, 1)];
        let mut w = Window::new(-3, 7);
        for &(p, d) in &assigned {
            w.set(p, Some(d)).unwrap();
        }
        let b = bound_lambda_window(&w, 0).unwrap();
        let (lo, hi) = (b.lower.value.approx_f64(), b.upper.value.approx_f64());
        let mut seen_lo = f64::INFINITY;
        let mut seen_hi = f64::NEG_INFINITY;
        for mask in 0u32..(1 << 12) {
            let digit = |k: i64| 1 + ((mask >> (k + 6)) & 1);
            if assigned.iter().any(|&(p, d)| digit(p) != d) {
                continue;
            }
            let fwd: Vec<u32> = (1..6).map(digit).collect();
            let bwd: Vec<u32> = (1..=6).map(|i| digit(-i)).collect();
            let value = eval_finite(digit(0) as i64, &FiniteWord::new(fwd).unwrap())
                + eval_finite(0, &FiniteWord::new(bwd).unwrap());
            let v = num_traits::ToPrimitive::to_f64(&value).unwrap();
            // finite continued fractions sit within one cylinder of a {1,2} tail
            assert!(v >= lo - 0.01 && v <= hi + 0.01, "{v} outside [{lo}, {hi}]");
            seen_lo = seen_lo.min(v);
            seen_hi = seen_hi.max(v);
        }
        assert!(seen_lo - lo < 0.01 && hi - seen_hi < 0.01);
    }

    #[test]
    fn approximate_bounds_track_exact_ones() {
        let mut w = Window::from_marked("1 2_4 1 2_2 1_2 2_3 2* 1 2_2 1_2 2_4 1 2_2 1_2 2").unwrap();
        w.extend_to(-20);
        w.extend_to(20);
        for j in -20..=20 {
            let b = bound_lambda_window(&w, j).unwrap();
            let (lo, hi) = approx_lambda_bounds(&w, j);
            assert!((lo - b.lower.value.approx_f64()).abs() < 1e-13);
            assert!((hi - b.upper.value.approx_f64()).abs() < 1e-13);
        }
    }

    proptest::proptest! {
        #[test]
        fn extremal_tails_bracket_completions(
            prefix in proptest::collection::vec(1u32..3, 0..=10),
            s in proptest::collection::vec(1u32..3, 10),
        ) {
            let tail_value = |dir| {
                let t = extremal_tail(prefix.len() + 1, dir);
                let w = OneSidedWord::from_parts(prefix.clone(), t.period().to_vec());
                eval_periodic(0, &w)
            };
            let lo = SurdSum::from(tail_value(Direction::Min));
            let hi = SurdSum::from(tail_value(Direction::Max));
            let mut digits = prefix.clone();
            digits.extend_from_slice(&s);
            for t in [1, 2] {
                let x = SurdSum::from(eval_periodic(0, &OneSidedWord::from_parts(digits.clone(), vec![t])));
                proptest::prop_assert_ne!(surd_compare(&lo, &x), Ordering::Greater);
                proptest::prop_assert_ne!(surd_compare(&hi, &x), Ordering::Less);
            }
        }
    }

    #[test]
    fn bounds_bracket_periodic_completions() {
        let w = Window::from_marked("2 1 2* 2 1").unwrap();
        let b = bound_lambda_window(&w, 0).unwrap();
        let tails = ["1", "2", "1 2", "2 1", "1 1 2", "2 2 1"];
        for ft in tails {
            for bt in tails {
                let period = |t: &str| crate::words::parse_compact(t).unwrap().into_digits();
                let fwd = OneSidedWord::from_parts(vec![2, 1], period(ft));
                let bwd = OneSidedWord::from_parts(vec![1, 2], period(bt));
                let v = LambdaExpression::new(2, fwd, bwd).value;
                assert_ne!(surd_compare(&v, &b.lower.value), Ordering::Less);
                assert_ne!(surd_compare(&v, &b.upper.value), Ordering::Greater);
            }
        }
    }
}
