use std::cmp::Ordering;

use crate::arith::{enclose, surd_compare, Rational, SurdSum};
use crate::cf::{extremal_tail, preferred_digit, Direction, LambdaExpression};
use crate::constants::{constant_value, definition, ConstantName};
use crate::error::{Error, Result};
use crate::spectra::{lagrange_value, lambda_expression, SpectrumValue};
use crate::words::{parse_compact, BiInfiniteSequence, FiniteWord, OneSidedWord};

fn digits(text: &str) -> Vec<u32> {
    parse_compact(text).expect("valid literal").into_digits()
}

fn repeated(block: &str, times: usize) -> Vec<u32> {
    digits(block).repeat(times)
}

/// `[0; explicit, minimizing tail]`.
fn min_completion(explicit: Vec<u32>) -> OneSidedWord {
    let tail = extremal_tail(explicit.len() + 1, Direction::Min);
    OneSidedWord::from_parts(explicit, tail.period().to_vec())
}

/// The recursive lower bound on `λ_n` for a sequence carrying
/// `1_3 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_2` at `n − 15 … n + 16`,
/// after `a` rounds of forcing on each side.
pub fn recursive_lower_bound_expression(a: usize) -> LambdaExpression {
    let mut fwd = digits("1 2_2 1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1 2_4 1_2");
    fwd.extend(repeated("2_3 1_3", a + 2));
    let mut bwd = digits("2_3 1_2 2_2 1 2_4 1");
    bwd.extend(repeated("1_3 2_3", a + 1));
    LambdaExpression::new(2, min_completion(fwd), min_completion(bwd))
}

pub fn recursive_lower_bound(a: usize) -> SpectrumValue {
    SpectrumValue::new(recursive_lower_bound_expression(a).value)
}

#[derive(Clone, Debug)]
pub struct RecursiveBoundReport {
    pub values: Vec<(usize, SpectrumValue)>,
    /// `C∞ − value(a)`, enclosed.
    pub gaps: Vec<Rational>,
    pub increasing: bool,
    pub below_upper_end: bool,
    pub gaps_decreasing: bool,
    pub pass: bool,
}

/// Checks that the bound increases with `a`, stays below `C∞` and closes in on it.
pub fn verify_recursive_bound(max_a: usize) -> RecursiveBoundReport {
    let upper = constant_value(ConstantName::UpperEnd);
    let values: Vec<_> = (0..=max_a).map(|a| (a, recursive_lower_bound(a))).collect();
    let width = Rational::new(1.into(), num_bigint::BigInt::from(10).pow(60));
    let gaps: Vec<Rational> = values
        .iter()
        .map(|(_, v)| {
            let diff = upper.checked_add(&v.value.neg()).expect("two radicands at most");
            enclose(&diff, &width).lo
        })
        .collect();
    let increasing = values
        .windows(2)
        .all(|w| surd_compare(&w[0].1.value, &w[1].1.value) == Ordering::Less);
    let below_upper_end = values
        .iter()
        .all(|(_, v)| surd_compare(&v.value, &upper) == Ordering::Less);
    let gaps_decreasing = gaps.windows(2).all(|w| w[1] < w[0]);
    RecursiveBoundReport {
        pass: increasing && below_upper_end && gaps_decreasing,
        values,
        gaps,
        increasing,
        below_upper_end,
        gaps_decreasing,
    }
}

#[derive(Clone, Debug)]
pub struct ChainStep {
    /// Number of digits of the backward word fixed so far.
    pub fixed: usize,
    /// The digit just fixed, when it overrode the minimizing choice.
    pub forced_digit: Option<u32>,
    pub bound: LambdaExpression,
}

#[derive(Clone, Debug)]
pub struct ChainReport {
    pub steps: Vec<ChainStep>,
    pub target: LambdaExpression,
    pub strictly_increasing: bool,
    pub below_target: bool,
    pub target_is_f: bool,
    pub pass: bool,
}

/// Digits of the backward word fixed before the forcing starts.
pub const CHAIN_START: usize = 16;
/// Periods of the backward tail walked through before closing at `f`.
pub const CHAIN_PERIODS: usize = 4;

/// Lower bounds on `λ_0 = [over(2_4 1_2 2_2 1)] + [0; …]` obtained by fixing
/// the backward digits of `f` one at a time.
///
/// A bound is emitted at the start and at every digit that differs from the
/// minimizing choice; the chain closes with `f` itself.
pub fn verify_minimality_chain() -> ChainReport {
    let target = definition(ConstantName::F);
    let total = target.backward.preperiod().len() + CHAIN_PERIODS * target.backward.period().len();
    let word = target.backward.prefix(total);
    let bound = |fixed: usize| LambdaExpression::new(2, target.forward.clone(), min_completion(word[..fixed].to_vec()));
    let mut steps = vec![ChainStep {
        fixed: CHAIN_START,
        forced_digit: None,
        bound: bound(CHAIN_START),
    }];
    for fixed in CHAIN_START + 1..=total {
        let digit = word[fixed - 1];
        if digit != preferred_digit(fixed, Direction::Min) {
            steps.push(ChainStep {
                fixed,
                forced_digit: Some(digit),
                bound: bound(fixed),
            });
        }
    }
    let strictly_increasing = steps
        .windows(2)
        .all(|w| surd_compare(&w[0].bound.value, &w[1].bound.value) == Ordering::Less);
    let below_target = steps
        .iter()
        .all(|s| surd_compare(&s.bound.value, &target.value) == Ordering::Less);
    let target_is_f = surd_compare(&target.value, &constant_value(ConstantName::F)) == Ordering::Equal;
    ChainReport {
        pass: strictly_increasing && below_target && target_is_f,
        steps,
        target,
        strictly_increasing,
        below_target,
        target_is_f,
    }
}

/// The word `P_a` with the index of its marked digit.
pub fn appendix_word(a: usize) -> (FiniteWord, usize) {
    let mut w = repeated("2_3 1_3", a);
    w.extend(digits("1 2_4 1 2_2 1_2 2_3"));
    let mark = w.len();
    w.extend(digits("2 1 2_2 1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1 2_4 1_2"));
    w.extend(repeated("2_3 1_3", a));
    (FiniteWord::new(w).expect("binary digits"), mark)
}

#[derive(Clone, Debug)]
pub struct AppendixRow {
    pub a: usize,
    pub lagrange: SpectrumValue,
    pub lambda_0: SpectrumValue,
    pub lambda_plus9: SpectrumValue,
    pub lambda_minus9: SpectrumValue,
    /// `ℓ = m = λ_0` for the periodic sequence.
    pub attained_at_origin: bool,
}

pub fn appendix_pa(a: usize) -> Result<AppendixRow> {
    if a < 1 {
        return Err(Error::Invalid("family index starts at 1".into()));
    }
    let (w, mark) = appendix_word(a);
    let seq = BiInfiniteSequence::periodic(&w)?.shift(mark as i64);
    let (lagrange, _) = lagrange_value(&w)?;
    let at = |i: i64| SpectrumValue::new(lambda_expression(&seq, i).value);
    let lambda_0 = at(0);
    let attained_at_origin = surd_compare(&lambda_0.value, &lagrange.value) == Ordering::Equal;
    Ok(AppendixRow {
        a,
        lagrange,
        lambda_0,
        lambda_plus9: at(9),
        lambda_minus9: at(-9),
        attained_at_origin,
    })
}

/// Limit of `over(P_a)` as `a → ∞`: the marked core flanked by `over(2_3 1_3)`.
pub const APPENDIX_LIMIT_LITERAL: &str = "over(2_3 1_3) 1 2_4 1 2_2 1_2 2_3 2 ; \
     1 2_2 1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1 2_4 1_2 ; over(2_3 1_3)";
pub const PRINTED_MINUS9_LIMIT: &str = "3.1180041084";
pub const PRINTED_PLUS9_LIMIT: &str = "3.11812017817071";

pub fn appendix_limit_sequence() -> BiInfiniteSequence {
    BiInfiniteSequence::parse(APPENDIX_LIMIT_LITERAL).expect("valid literal")
}

/// The expression printed for the limit of `λ_{−9}`.
pub fn printed_minus9_expression() -> LambdaExpression {
    LambdaExpression::new(
        2,
        OneSidedWord::from_parts(
            digits("1 2_2 1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1 2_4 1_2"),
            digits("2_3 1_3"),
        ),
        OneSidedWord::from_parts(digits("2_3 1"), digits("1_3 2_3")),
    )
}

/// The expression printed for the limit of `λ_9`.
pub fn printed_plus9_expression() -> LambdaExpression {
    LambdaExpression::new(
        2,
        OneSidedWord::from_parts(digits("1 2_2 1_2 2_2 1 2_4 1_2"), digits("2_3 1_3")),
        OneSidedWord::from_parts(digits("2_3 1_2 2_2 1 2_4 1_2 2_2 1 2_4 1"), digits("1_3 2_3")),
    )
}

#[derive(Clone, Debug)]
pub struct LimitCheck {
    pub limit: SpectrumValue,
    pub printed_decimal: &'static str,
    /// The certified limit starts with the printed digits.
    pub decimal_matches: bool,
    pub printed_expression: LambdaExpression,
    /// The printed expression evaluates to the limit.
    pub expression_matches: bool,
    /// `|λ(a) − limit|` strictly decreasing along the rows.
    pub converging: bool,
}

#[derive(Clone, Debug)]
pub struct AppendixReport {
    pub rows: Vec<AppendixRow>,
    pub upper_end: SpectrumValue,
    pub minus9: LimitCheck,
    pub plus9: LimitCheck,
    pub lagrange_increasing: bool,
    pub below_upper_end: bool,
    /// `|ℓ(a) − C∞|` strictly decreasing.
    pub lagrange_converging: bool,
    pub attained_at_origin: bool,
    pub pass: bool,
}

fn distance(x: &SurdSum, y: &SurdSum) -> SurdSum {
    let d = x.checked_add(&y.neg()).expect("shared radicands");
    if d.cmp_rational(&Rational::from_integer(0.into())) == Ordering::Less {
        d.neg()
    } else {
        d
    }
}

fn strictly_decreasing(v: &[SurdSum]) -> bool {
    v.windows(2).all(|w| surd_compare(&w[1], &w[0]) == Ordering::Less)
}

fn limit_check(
    rows: &[AppendixRow],
    pick: impl Fn(&AppendixRow) -> &SpectrumValue,
    limit: SurdSum,
    printed_decimal: &'static str,
    printed_expression: LambdaExpression,
) -> LimitCheck {
    let gaps: Vec<_> = rows.iter().map(|r| distance(&pick(r).value, &limit)).collect();
    let digits = printed_decimal.len() - 2;
    let limit = SpectrumValue::new(limit);
    LimitCheck {
        decimal_matches: limit.decimal(digits) == printed_decimal,
        expression_matches: surd_compare(&printed_expression.value, &limit.value) == Ordering::Equal,
        converging: strictly_decreasing(&gaps),
        limit,
        printed_decimal,
        printed_expression,
    }
}

/// Checks the family `P_a` over `range`: `ℓ` increasing and below `C∞`,
/// `ℓ = λ_0`, and `λ_{±9}` closing in on their limits.
pub fn verify_appendix(range: std::ops::RangeInclusive<usize>) -> Result<AppendixReport> {
    let rows: Vec<AppendixRow> = range.map(appendix_pa).collect::<Result<_>>()?;
    let upper = constant_value(ConstantName::UpperEnd);
    let limit_seq = appendix_limit_sequence();
    let minus9 = limit_check(
        &rows,
        |r| &r.lambda_minus9,
        lambda_expression(&limit_seq, -9).value,
        PRINTED_MINUS9_LIMIT,
        printed_minus9_expression(),
    );
    let plus9 = limit_check(
        &rows,
        |r| &r.lambda_plus9,
        lambda_expression(&limit_seq, 9).value,
        PRINTED_PLUS9_LIMIT,
        printed_plus9_expression(),
    );
    let lagrange_increasing = rows
        .windows(2)
        .all(|w| surd_compare(&w[0].lagrange.value, &w[1].lagrange.value) == Ordering::Less);
    let below_upper_end = rows
        .iter()
        .all(|r| surd_compare(&r.lagrange.value, &upper) == Ordering::Less);
    let lagrange_gaps: Vec<_> = rows.iter().map(|r| distance(&r.lagrange.value, &upper)).collect();
    let attained_at_origin = rows.iter().all(|r| r.attained_at_origin);
    Ok(AppendixReport {
        pass: lagrange_increasing
            && below_upper_end
            && attained_at_origin
            && minus9.converging
            && plus9.converging
            && minus9.decimal_matches
            && plus9.decimal_matches,
        lagrange_converging: strictly_decreasing(&lagrange_gaps),
        upper_end: SpectrumValue::new(upper),
        rows,
        minus9,
        plus9,
        lagrange_increasing,
        below_upper_end,
        attained_at_origin,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recursive_bound_closes_in_on_upper_end() {
        let report = verify_recursive_bound(6);
        assert!(report.pass);
        assert!(report.gaps.iter().all(|g| *g > Rational::from_integer(0.into())));
    }

    #[test]
    fn chain_climbs_to_f() {
        let report = verify_minimality_chain();
        assert!(report.pass);
        assert_eq!(report.steps[0].fixed, CHAIN_START);
        assert!(report.steps[0].bound.value.approx_f64() < 3.1181201782);
    }

    #[test]
    fn appendix_word_shape() {
        let (w, mark) = appendix_word(2);
        assert_eq!(w.digits().len(), 2 * 12 + 14 + 32);
        assert_eq!(w.digits()[mark], 2);
        assert!(appendix_pa(0).is_err());
    }

    #[test]
    fn appendix_limits_match_printed_decimals() {
        let report = verify_appendix(2..=4).unwrap();
        assert!(report.attained_at_origin);
        assert!(report.lagrange_converging);
        assert!(report.minus9.decimal_matches && report.minus9.expression_matches);
        assert!(report.plus9.decimal_matches);
        assert!(!report.plus9.expression_matches);
        // Lagrange values approach the upper end from above.
        assert!(!report.below_upper_end);
    }
}
