use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Which root of a quadratic to take.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

/// Exact number `(p + q·√d) / r`.
///
/// Canonical form: `r > 0`, `gcd(p, q, r) = 1`, `d` carries no small square
/// factors, and rational values are stored with `q = d = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
    r: BigInt,
}

const SQUARE_SIEVE: u32 = 1000;

pub(crate) fn is_perfect_square(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

impl QuadraticSurd {
    pub fn new(p: BigInt, q: BigInt, d: BigInt, r: BigInt) -> Result<Self> {
        if r.is_zero() {
            return Err(Error::Invalid("surd denominator is zero".into()));
        }
        if d.is_negative() {
            return Err(Error::NoRealRoot(d));
        }
        Ok(Self::normalize(p, q, d, r))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self::normalize(n.into(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    pub fn from_rational(x: &Rational) -> Self {
        Self::normalize(
            x.numer().clone(),
            BigInt::zero(),
            BigInt::zero(),
            x.denom().clone(),
        )
    }

    /// Root of `a·x² + b·x + c = 0`.
    pub fn from_fixed_point(a: &BigInt, b: &BigInt, c: &BigInt, branch: Branch) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::NotQuadratic);
        }
        let disc = b * b - BigInt::from(4) * a * c;
        if disc.is_negative() {
            return Err(Error::NoRealRoot(disc));
        }
        let q = match branch {
            Branch::Plus => BigInt::one(),
            Branch::Minus => -BigInt::one(),
        };
        Ok(Self::normalize(-b, q, disc, BigInt::from(2) * a))
    }

    fn normalize(mut p: BigInt, mut q: BigInt, mut d: BigInt, mut r: BigInt) -> Self {
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        if q.is_zero() || d.is_zero() {
            q = BigInt::zero();
            d = BigInt::zero();
        } else {
            for f in 2..SQUARE_SIEVE {
                let sq = BigInt::from(f * f);
                if sq > d {
                    break;
                }
                while (&d % &sq).is_zero() {
                    d /= &sq;
                    q *= f;
                }
            }
            if let Some(s) = is_perfect_square(&d) {
                p += &q * s;
                q = BigInt::zero();
                d = BigInt::zero();
            }
        }
        let g = p.gcd(&q).gcd(&r);
        if !g.is_one() && !g.is_zero() {
            p /= &g;
            q /= &g;
            r /= &g;
        }
        QuadraticSurd { p, q, d, r }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn radicand(&self) -> &BigInt {
        &self.d
    }
    pub fn r(&self) -> &BigInt {
        &self.r
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| Rational::new(self.p.clone(), self.r.clone()))
    }

    /// Rational part `p/r`.
    pub fn rational_part(&self) -> Rational {
        Rational::new(self.p.clone(), self.r.clone())
    }

    /// Coefficient `q/r` of `√d`.
    pub fn irrational_coefficient(&self) -> Rational {
        Rational::new(self.q.clone(), self.r.clone())
    }

    pub fn conjugate(&self) -> Self {
        Self::normalize(self.p.clone(), -&self.q, self.d.clone(), self.r.clone())
    }

    fn common_radicand(&self, other: &Self) -> Result<BigInt> {
        match (self.is_rational(), other.is_rational()) {
            (true, _) => Ok(other.d.clone()),
            (_, true) => Ok(self.d.clone()),
            _ if self.d == other.d => Ok(self.d.clone()),
            _ => Err(Error::FieldMismatch(self.d.clone(), other.d.clone())),
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::normalize(
            &self.p * &other.r + &other.p * &self.r,
            &self.q * &other.r + &other.q * &self.r,
            d,
            &self.r * &other.r,
        ))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        Ok(Self::normalize(
            &self.p * &other.p + &self.q * &other.q * &d,
            &self.p * &other.q + &other.p * &self.q,
            d,
            &self.r * &other.r,
        ))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        let d = self.common_radicand(other)?;
        let norm = &other.p * &other.p - &other.q * &other.q * &d;
        if norm.is_zero() {
            return Err(Error::Invalid("division by zero surd".into()));
        }
        Ok(Self::normalize(
            (&self.p * &other.p - &self.q * &other.q * &d) * &other.r,
            (&self.q * &other.p - &self.p * &other.q) * &other.r,
            d,
            &self.r * norm,
        ))
    }

    pub fn neg(&self) -> Self {
        Self {
            p: -&self.p,
            q: -&self.q,
            d: self.d.clone(),
            r: self.r.clone(),
        }
    }

    /// Applies `x ↦ (a·x + b) / (c·x + e)`.
    pub fn mobius(&self, a: &BigInt, b: &BigInt, c: &BigInt, e: &BigInt) -> Result<Self> {
        // numerator and denominator share the factor 1/r, which cancels
        let num_p = a * &self.p + b * &self.r;
        let num_q = a * &self.q;
        let den_p = c * &self.p + e * &self.r;
        let den_q = c * &self.q;
        let norm = &den_p * &den_p - &den_q * &den_q * &self.d;
        if norm.is_zero() {
            return Err(Error::Invalid("Mobius pole".into()));
        }
        Ok(Self::normalize(
            &num_p * &den_p - &num_q * &den_q * &self.d,
            &num_q * &den_p - &num_p * &den_q,
            self.d.clone(),
            norm,
        ))
    }

    /// Evaluates `a·x² + b·x + c` exactly in the field of `self`.
    pub fn eval_quadratic(&self, a: &BigInt, b: &BigInt, c: &BigInt) -> Self {
        let ax = Self::from_integer(a.clone());
        let bx = Self::from_integer(b.clone());
        let cx = Self::from_integer(c.clone());
        let sq = self.try_mul(self).expect("same field");
        sq.try_mul(&ax)
            .and_then(|t| t.try_add(&self.try_mul(&bx)?))
            .and_then(|t| t.try_add(&cx))
            .expect("same field")
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// Rough `f64` value for display and diagnostics; never used for decisions.
    pub fn approx_f64(&self) -> f64 {
        let enc = super::enclose(&super::SurdSum::from(self.clone()), &Rational::new(1.into(), BigInt::one() << 60));
        approx(&enc.lo)
    }
}

pub(crate) fn approx(x: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            if self.r.is_one() {
                return write!(f, "{}", self.p);
            }
            return write!(f, "{}/{}", self.p, self.r);
        }
        let sign = if self.q.is_negative() { "-" } else { "+" };
        let mag = self.q.abs();
        let root = if mag.is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{mag}*sqrt({})", self.d)
        };
        let head = if self.p.is_zero() {
            if self.q.is_negative() {
                format!("-{root}")
            } else {
                root
            }
        } else {
            format!("{} {sign} {root}", self.p)
        };
        if self.r.is_one() {
            write!(f, "{head}")
        } else {
            write!(f, "({head})/{}", self.r)
        }
    }
}
