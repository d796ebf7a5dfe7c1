use std::cmp::Ordering;
use std::fmt;

use num_traits::Zero;

use super::sign::LinearCombination;
use super::{QuadraticSurd, Rational};
use crate::error::{Error, Result};

/// Sum of at most two quadratic surds with distinct radicands.
///
/// Every `λᵢ` of an eventually periodic sequence is a forward plus a backward
/// periodic continued fraction, which may live in different quadratic fields.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdSum {
    terms: Vec<QuadraticSurd>,
}

impl SurdSum {
    pub fn zero() -> Self {
        QuadraticSurd::from_integer(0).into()
    }

    pub fn from_rational(x: &Rational) -> Self {
        QuadraticSurd::from_rational(x).into()
    }

    pub fn from_integer(n: i64) -> Self {
        QuadraticSurd::from_integer(n).into()
    }

    /// Sum of two surds, merged into one term when they share a field.
    pub fn pair(a: QuadraticSurd, b: QuadraticSurd) -> Self {
        match a.try_add(&b) {
            Ok(s) => s.into(),
            Err(_) => {
                let mut terms = vec![a, b];
                terms.sort_by(|x, y| x.radicand().cmp(y.radicand()));
                SurdSum { terms }
            }
        }
    }

    pub fn terms(&self) -> &[QuadraticSurd] {
        &self.terms
    }

    pub fn checked_add(&self, other: &SurdSum) -> Result<SurdSum> {
        let mut out: Vec<QuadraticSurd> = self.terms.clone();
        for t in &other.terms {
            if let Some(slot) = out.iter_mut().find(|s| s.try_add(t).is_ok()) {
                *slot = slot.try_add(t)?;
            } else {
                out.push(t.clone());
            }
        }
        // fold a purely rational term into an irrational neighbour
        if out.len() > 1 {
            if let Some(pos) = out.iter().position(QuadraticSurd::is_rational) {
                let r = out.remove(pos);
                out[0] = out[0].try_add(&r)?;
            }
        }
        if out.len() > 2 {
            return Err(Error::TooManyRadicands);
        }
        out.sort_by(|x, y| x.radicand().cmp(y.radicand()));
        Ok(SurdSum { terms: out })
    }

    pub fn add_rational(&self, x: &Rational) -> SurdSum {
        self.checked_add(&SurdSum::from_rational(x))
            .expect("adding a rational never adds a radicand")
    }

    pub fn neg(&self) -> SurdSum {
        SurdSum {
            terms: self.terms.iter().map(QuadraticSurd::neg).collect(),
        }
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(QuadraticSurd::is_rational)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| {
            self.terms
                .iter()
                .map(QuadraticSurd::rational_part)
                .fold(Rational::zero(), |a, b| a + b)
        })
    }

    pub(crate) fn accumulate(&self, lin: &mut LinearCombination, scale: &Rational) {
        for t in &self.terms {
            lin.constant += t.rational_part() * scale;
            lin.push_root(t.irrational_coefficient() * scale, t.radicand().clone());
        }
    }

    pub(crate) fn linear(&self) -> LinearCombination {
        let mut lin = LinearCombination::default();
        self.accumulate(&mut lin, &Rational::from_integer(1.into()));
        lin
    }

    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        let mut lin = self.linear();
        lin.constant -= x;
        lin.sign()
    }

    pub fn approx_f64(&self) -> f64 {
        let enc = super::enclose(self, &Rational::new(1.into(), num_bigint::BigInt::from(1u64 << 60)));
        super::surd::approx(&enc.lo)
    }
}

impl From<QuadraticSurd> for SurdSum {
    fn from(s: QuadraticSurd) -> Self {
        SurdSum { terms: vec![s] }
    }
}

impl fmt::Display for SurdSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exact order of two surd sums.
pub fn surd_compare(x: &SurdSum, y: &SurdSum) -> Ordering {
    let mut lin = x.linear();
    y.accumulate(&mut lin, &Rational::from_integer((-1).into()));
    lin.sign()
}

impl PartialOrd for SurdSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SurdSum {
    fn cmp(&self, other: &Self) -> Ordering {
        surd_compare(self, other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Branch;
    use num_bigint::BigInt;

    fn surd(p: i64, q: i64, d: i64, r: i64) -> QuadraticSurd {
        QuadraticSurd::new(p.into(), q.into(), d.into(), r.into()).unwrap()
    }

    #[test]
    fn compare_examples() {
        let golden = SurdSum::from(surd(-1, 1, 5, 2));
        let conv = SurdSum::from_rational(&Rational::new(13.into(), 21.into()));
        assert_eq!(surd_compare(&golden, &conv), Ordering::Less);

        let s = SurdSum::from(surd(-1, 1, 2, 1));
        assert_eq!(surd_compare(&s, &s.clone()), Ordering::Equal);

        let x = SurdSum::from(surd(6, 2, 3, 3));
        let t = SurdSum::from_rational(&Rational::new(63.into(), 20.into()));
        assert_eq!(surd_compare(&x, &t), Ordering::Greater);
    }

    #[test]
    fn cross_field_sums() {
        // sqrt2 + sqrt3 vs sqrt5 + 1
        let a = SurdSum::pair(surd(0, 1, 2, 1), surd(0, 1, 3, 1));
        let b = SurdSum::pair(surd(0, 1, 5, 1), QuadraticSurd::from_integer(1));
        assert_eq!(a.terms().len(), 2);
        assert_eq!(b.terms().len(), 1);
        assert_eq!(surd_compare(&a, &b), Ordering::Less);
        let c = SurdSum::pair(surd(0, 2, 3, 1), surd(0, 1, 8, 2));
        let d = SurdSum::pair(surd(0, 1, 12, 1), surd(0, 1, 2, 1));
        assert_eq!(surd_compare(&c, &d), Ordering::Equal);
    }

    #[test]
    fn checked_add_limits_radicands() {
        let a = SurdSum::pair(surd(0, 1, 2, 1), surd(0, 1, 3, 1));
        let b = SurdSum::from(surd(1, 1, 5, 1));
        assert!(matches!(a.checked_add(&b), Err(Error::TooManyRadicands)));
        let c = a.checked_add(&SurdSum::from(surd(1, 1, 2, 1))).unwrap();
        assert_eq!(c.terms().len(), 2);
    }

    #[test]
    fn fixed_point_root_cross_check() {
        let x = QuadraticSurd::from_fixed_point(
            &BigInt::from(1),
            &BigInt::from(2),
            &BigInt::from(-2),
            Branch::Plus,
        )
        .unwrap();
        assert!((SurdSum::from(x).approx_f64() - 0.7320508).abs() < 1e-7);
    }
}
