use std::fmt;

use num_traits::Signed;

use super::rational::truncate_decimal;
use super::{Rational, SurdSum};

/// Rational interval `[lo, hi]` certified to contain a real value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enclosure {
    pub lo: Rational,
    pub hi: Rational,
}

const START_BITS: u32 = 64;

impl Enclosure {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo <= hi, "enclosure endpoints out of order");
        Enclosure { lo, hi }
    }

    pub fn point(x: Rational) -> Self {
        Enclosure {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    /// Digits identical at both endpoints after truncation toward zero, up to
    /// `max_digits` fractional digits. `None` when not even the integer part
    /// is certified.
    pub fn certified_decimal(&self, max_digits: usize) -> Option<String> {
        if self.lo.is_negative() != self.hi.is_negative() && self.lo != self.hi {
            let zero_lo = truncate_decimal(&self.lo, 0);
            let zero_hi = truncate_decimal(&self.hi, 0);
            return (zero_lo == "0" && zero_hi == "0").then(|| "0".to_string());
        }
        let a = truncate_decimal(&self.lo, max_digits);
        let b = truncate_decimal(&self.hi, max_digits);
        if a == b {
            return Some(a);
        }
        let common = a.bytes().zip(b.bytes()).take_while(|(x, y)| x == y).count();
        let point = a.find('.').unwrap_or(a.len());
        if common < point || b.find('.').unwrap_or(b.len()) != point {
            return None;
        }
        let s = &a[..common];
        Some(s.trim_end_matches('.').to_string())
    }

    pub fn certified_digits(&self, max_digits: usize) -> usize {
        self.certified_decimal(max_digits)
            .and_then(|s| s.find('.').map(|p| s.len() - p - 1))
            .unwrap_or(0)
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Certified enclosure of `x` with `hi − lo ≤ width`.
pub fn enclose(x: &SurdSum, width: &Rational) -> Enclosure {
    assert!(width.is_positive(), "enclosure width must be positive");
    if let Some(r) = x.to_rational() {
        return Enclosure::point(r);
    }
    let lin = x.linear();
    let mut bits = START_BITS;
    loop {
        let (lo, hi) = lin.bounds(bits);
        if &(&hi - &lo) <= width {
            return Enclosure::new(lo, hi);
        }
        bits *= 2;
    }
}

impl SurdSum {
    /// Decimal rendering with `digits` certified fractional digits, truncated
    /// toward zero.
    pub fn to_decimal(&self, digits: usize) -> String {
        let mut extra = 6u32;
        loop {
            let width = Rational::new(1.into(), num_bigint::BigInt::from(10u32).pow(digits as u32 + extra));
            let enc = enclose(self, &width);
            if let Some(s) = enc.certified_decimal(digits) {
                if enc.lo == enc.hi || enc.certified_digits(digits) >= digits {
                    return s;
                }
            }
            extra *= 2;
            assert!(extra < 100_000, "decimal rendering did not converge");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::QuadraticSurd;
    use std::cmp::Ordering;

    fn golden() -> SurdSum {
        QuadraticSurd::new((-1).into(), 1.into(), 5.into(), 2.into())
            .unwrap()
            .into()
    }

    #[test]
    fn encloses_golden_ratio() {
        let w = Rational::new(1.into(), 1_000_000.into());
        let e = enclose(&golden(), &w);
        assert!(e.width() <= w);
        assert!(e.certified_decimal(6).unwrap().starts_with("0.61803"));
        let mut below = golden().linear();
        below.constant -= &e.lo;
        assert_ne!(below.sign(), Ordering::Less);
        let mut above = golden().linear();
        above.constant -= &e.hi;
        assert_ne!(above.sign(), Ordering::Greater);
    }

    #[test]
    fn rational_enclosure_is_a_point() {
        let x = Rational::new(2.into(), 3.into());
        let e = enclose(&SurdSum::from_rational(&x), &Rational::new(1.into(), 10.into()));
        assert_eq!(e, Enclosure::point(x));
        assert_eq!(e.certified_decimal(5).unwrap(), "0.66666");
    }

    #[test]
    fn certified_digits_stop_at_disagreement() {
        let e = Enclosure::new(
            Rational::new(31181.into(), 10000.into()),
            Rational::new(31189.into(), 10000.into()),
        );
        assert_eq!(e.certified_decimal(6).unwrap(), "3.118");
        let e = Enclosure::new(
            Rational::new(99.into(), 10.into()),
            Rational::new(101.into(), 10.into()),
        );
        assert_eq!(e.certified_decimal(3), None);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(golden().to_decimal(10), "0.6180339887");
        let x = SurdSum::from_rational(&Rational::new(5.into(), 2.into()));
        assert_eq!(x.to_decimal(3), "2.500");
    }
}
