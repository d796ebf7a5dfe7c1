use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed fraction in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Parses a plain decimal literal such as `3.1181201786` or `-0.5` exactly.
pub fn parse_decimal(text: &str) -> Result<Rational> {
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::parse(0, format!("`{text}` is not a decimal number")));
    }
    if let Some(pos) = int_part
        .bytes()
        .chain(frac_part.bytes())
        .position(|b| !b.is_ascii_digit())
    {
        return Err(Error::parse(pos, format!("`{text}` is not a decimal number")));
    }
    let digits = format!("{int_part}{frac_part}");
    let mantissa: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().expect("validated digits")
    };
    let denom = BigInt::from(10u32).pow(frac_part.len() as u32);
    let value = Rational::new(mantissa, denom);
    Ok(if neg { -value } else { value })
}

/// Decimal rendering of `x` truncated toward zero after `digits` fractional digits.
pub fn truncate_decimal(x: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (x.numer().abs() * &scale).div_floor(x.denom());
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let sign = if x.is_negative() && !scaled.is_zero() {
        "-"
    } else {
        ""
    };
    if digits == 0 {
        return format!("{sign}{int_part}");
    }
    let frac = frac_part.to_str_radix(10);
    format!("{sign}{int_part}.{}{frac}", "0".repeat(digits - frac.len()))
}

pub(crate) fn sign_of(x: &Rational) -> std::cmp::Ordering {
    match x.numer().sign() {
        Sign::Minus => std::cmp::Ordering::Less,
        Sign::NoSign => std::cmp::Ordering::Equal,
        Sign::Plus => std::cmp::Ordering::Greater,
    }
}

pub(crate) fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits
}
