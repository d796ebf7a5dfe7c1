use super::*;
use crate::arith::{enclose, QuadraticSurd, SurdSum};
use crate::cf::eval_periodic;
use crate::words::OneSidedWord;
use proptest::prelude::*;

fn pair_spec() -> GaussCantorSpec {
    GaussCantorSpec::parse("1_2;2_2").unwrap()
}

fn scales(values: &[f64]) -> Vec<Interval> {
    values.iter().map(|&v| Interval::point(v)).collect()
}

/// `[0; prefix, over(tail)]` exactly.
fn exact_tail_value(prefix: &[u32], tail: u32) -> QuadraticSurd {
    let w = OneSidedWord::from_parts(prefix.to_vec(), vec![tail]);
    eval_periodic(0, &w)
}

fn encloses_exact(iv: &Interval, x: &QuadraticSurd) -> bool {
    let width = Rational::new(1.into(), BigInt::from(10).pow(40u32));
    let e = enclose(&SurdSum::from(x.clone()), &width);
    exact(iv.lo) <= e.lo && e.hi <= exact(iv.hi)
}

#[test]
fn interval_rounding_is_tight_and_outward() {
    let half = Interval::point(2.0).recip();
    assert_eq!(half, Interval::point(0.5));
    let third = Interval::point(3.0).recip();
    assert!(third.lo < third.hi && third.hi.next_down() == third.lo);
    let sum = Interval::point(0.1) + Interval::point(0.2);
    assert!(sum.lo <= 0.30000000000000004 && sum.hi >= 0.30000000000000004);
    assert!(Interval::periodic_tail(2).contains(2f64.sqrt() - 1.0));
}

#[test]
fn spec_validation() {
    assert!(GaussCantorSpec::parse("1_2").is_err());
    assert!(GaussCantorSpec::parse("1;1 2").is_err());
    assert!(GaussCantorSpec::parse("1_2;3").is_ok());
    assert!(GaussCantorSpec::parse("1_2;0").is_err());
    assert_eq!(pair_spec().to_string(), "1_2;2_2");
    assert_eq!(pair_spec().alphabet().len(), 2);
}

#[test]
fn scale_counts() {
    assert_eq!(interval_scales(&pair_spec(), 1).unwrap().len(), 2);
    assert_eq!(interval_scales(&pair_spec(), 12).unwrap().len(), 4096);
    assert!(interval_scales(&pair_spec(), 0).is_err());
    assert!(interval_scales_guarded(&pair_spec(), 11, 1024).is_err());
    assert!(interval_scales(&pair_spec(), 21).is_err());
}

#[test]
fn depth_one_matches_exact_products() {
    let scales = interval_scales(&pair_spec(), 1).unwrap();
    let s22 = scales.iter().find(|s| s.word.digits() == [2, 2]).unwrap();
    let product = |tail: u32| {
        // [0; 2, 2, over(t)]^{-2} [0; 2, over(t)]^{-2}
        let y1 = exact_tail_value(&[2, 2], tail);
        let y2 = exact_tail_value(&[2], tail);
        let p = y1.try_mul(&y2).unwrap();
        p.try_mul(&p).unwrap().recip_exact()
    };
    let ones = product(1);
    let twos = product(2);
    // over(2) makes every factor √2 − 1
    let root2 = QuadraticSurd::new((-1).into(), 1.into(), 2.into(), 1.into()).unwrap();
    let direct = root2.try_mul(&root2).unwrap();
    let direct = direct.try_mul(&direct).unwrap().recip_exact();
    assert_eq!(twos, direct);
    assert!(encloses_exact(&s22.lambda_min, &twos) || encloses_exact(&s22.lambda_min, &ones));
    assert!(encloses_exact(&s22.lambda_max, &twos) || encloses_exact(&s22.lambda_max, &ones));
    assert!(s22.lambda_min.lo <= s22.lambda_max.hi);
}

trait Recip {
    fn recip_exact(&self) -> QuadraticSurd;
}

impl Recip for QuadraticSurd {
    fn recip_exact(&self) -> QuadraticSurd {
        QuadraticSurd::from_integer(1).try_div(self).unwrap()
    }
}

#[test]
fn exponent_examples() {
    let one = solve_exponent(&scales(&[2.0, 2.0]), ExponentMode::Alpha, 1e-9).unwrap();
    assert_eq!(one.hi, 1.0);
    assert!(one.hi - one.lo <= 1e-9 && one.certificate_holds());

    let cantor = solve_exponent(&scales(&[3.0, 3.0]), ExponentMode::Beta, 1e-9).unwrap();
    let expected = 2f64.ln() / 3f64.ln();
    assert!(cantor.lo <= expected && expected <= cantor.hi);
    assert_eq!(cantor.decimal(6), "0.630930");
    assert!(cantor.certificate_holds());

    let single = solve_exponent(&scales(&[4.0]), ExponentMode::Alpha, 1e-9).unwrap();
    assert_eq!((single.lo, single.hi), (0.0, 0.0));
}

#[test]
fn exponent_errors() {
    assert!(solve_exponent(&scales(&[2.0, 1.0]), ExponentMode::Alpha, 1e-9).is_err());
    assert!(solve_exponent(&scales(&[2.0, 2.0]), ExponentMode::Alpha, 0.0).is_err());
    assert!(solve_exponent(&[], ExponentMode::Alpha, 1e-9).is_err());
    assert!(solve_exponent(&scales(&[1.5, 1.5]), ExponentMode::Alpha, 1e-9).is_err());
}

#[test]
fn decimals_round_toward_safety() {
    let b = ExponentBracket {
        mode: ExponentMode::Beta,
        lo: 0.25,
        hi: 0.2500001,
        sum_at_lo: Interval::point(1.0),
        sum_at_hi: Interval::point(1.0),
    };
    assert_eq!(b.upper_decimal(4), "0.2501");
    assert_eq!(b.lower_decimal(4), "0.2500");
    assert_eq!(b.upper_decimal(2), "0.26");
}

#[test]
fn shallow_depth_is_looser() {
    let b = hd_bounds(&pair_spec(), 1, DEFAULT_TOLERANCE).unwrap();
    assert!(b.alpha.value() < 0.2628);
    assert!(b.beta.value() > 0.2646);
}

#[test]
fn brackets_tighten_with_depth() {
    let tol = DEFAULT_TOLERANCE;
    let mut previous: Option<DimensionBounds> = None;
    for n in 1..=8 {
        let b = hd_bounds(&pair_spec(), n, tol).unwrap();
        assert!(b.alpha.certificate_holds() && b.beta.certificate_holds());
        if let Some(p) = previous {
            assert!(b.alpha.lo >= p.alpha.lo - tol, "alpha at {n}");
            assert!(b.beta.hi <= p.beta.hi + tol, "beta at {n}");
        }
        previous = Some(b);
    }
}

#[test]
fn full_shift_brackets_nest() {
    let spec = GaussCantorSpec::parse("1;2").unwrap();
    let six = hd_bounds(&spec, 6, DEFAULT_TOLERANCE).unwrap();
    let eight = hd_bounds(&spec, 8, DEFAULT_TOLERANCE).unwrap();
    assert!(six.alpha.lo <= eight.alpha.lo + DEFAULT_TOLERANCE);
    assert!(eight.beta.hi <= six.beta.hi + DEFAULT_TOLERANCE);
    assert!(eight.alpha.lo < 0.5312 && 0.5312 < eight.beta.hi);
}

#[test]
fn deterministic_and_csv() {
    let a = interval_scales(&pair_spec(), 5).unwrap();
    let b = interval_scales(&pair_spec(), 5).unwrap();
    assert_eq!(a, b);
    let mut out = Vec::new();
    write_scales_csv(&a[..2], &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("word,lambda_min_lo,lambda_min_hi,lambda_max_lo,lambda_max_hi"));
    assert!(lines.next().unwrap().starts_with("1111111111,"));
}

#[test]
fn swapped_scales_are_rejected() {
    let bad = ScalePair {
        word: FiniteWord::new(vec![1, 1]).unwrap(),
        lambda_min: Interval::point(9.0),
        lambda_max: Interval::point(3.0),
    };
    let good = ScalePair {
        word: FiniteWord::new(vec![2, 2]).unwrap(),
        lambda_min: Interval::point(9.0),
        lambda_max: Interval::point(10.0),
    };
    assert!(bounds_from_scales(&[bad, good], 1, 1e-6).is_err());
}

/// Naive float product `∏ [0; d_i, …]^{-2}` for a long finite word.
fn naive_product(prefix_len: usize, digits: &[u32]) -> f64 {
    let mut y = 0.0;
    let mut values = Vec::with_capacity(digits.len());
    for &d in digits.iter().rev() {
        y = 1.0 / (d as f64 + y);
        values.push(y);
    }
    values.reverse();
    values[..prefix_len].iter().map(|v| v.powi(-2)).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn extreme_tails_bound_every_continuation(
        depth in 1usize..=4,
        blocks in proptest::collection::vec(0usize..2, 4),
        continuation in proptest::collection::vec(0usize..2, 30),
    ) {
        let spec = pair_spec();
        let index = blocks[..depth].iter().fold(0u64, |acc, &b| acc * 2 + b as u64);
        let scales = interval_scales(&spec, depth).unwrap();
        let pair = &scales[index as usize];
        let mut digits = pair.word.digits().to_vec();
        for &b in &continuation {
            digits.extend_from_slice(spec.alphabet()[b].digits());
        }
        let p = naive_product(pair.word.len(), &digits);
        prop_assert!(pair.lambda_min.lo * (1.0 - 1e-12) <= p);
        prop_assert!(p <= pair.lambda_max.hi * (1.0 + 1e-12));
    }
}
