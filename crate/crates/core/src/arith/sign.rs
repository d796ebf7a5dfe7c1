//! Exact sign of `c + Σ bᵢ·√dᵢ` with rational coefficients.
//!
//! Terms are first merged into classes of radicands whose pairwise products
//! are perfect squares. Square roots of integers with distinct square-free
//! parts are linearly independent over Q together with 1, so after merging
//! the combination is zero exactly when every coefficient is zero. Nonzero
//! combinations with up to two roots are decided by squaring; larger ones by
//! interval refinement, which terminates because the value is nonzero.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::rational::{pow2, sign_of};
use super::surd::is_perfect_square;
use super::Rational;

#[derive(Clone, Debug, Default)]
pub(crate) struct LinearCombination {
    pub constant: Rational,
    pub roots: Vec<(Rational, BigInt)>,
}

const START_BITS: u32 = 64;
const MAX_BITS: u32 = 1 << 20;

impl LinearCombination {
    pub fn push_root(&mut self, coef: Rational, d: BigInt) {
        if coef.is_zero() {
            return;
        }
        if let Some(s) = is_perfect_square(&d) {
            self.constant += coef * Rational::from_integer(s);
            return;
        }
        for (c, e) in self.roots.iter_mut() {
            if *e == d {
                *c += &coef;
                return;
            }
            let prod: BigInt = &d * &*e;
            if let Some(s) = is_perfect_square(&prod) {
                // √d = (√(d·e) / e)·√e
                *c += coef * Rational::new(s, e.clone());
                return;
            }
        }
        self.roots.push((coef, d));
    }

    fn prune(&mut self) {
        self.roots.retain(|(c, _)| !c.is_zero());
    }

    /// Lower and upper rational bounds using `bits` bits per square root.
    pub fn bounds(&self, bits: u32) -> (Rational, Rational) {
        let scale = Rational::from_integer(pow2(bits));
        let mut lo = self.constant.clone();
        let mut hi = self.constant.clone();
        for (c, d) in &self.roots {
            let s: BigInt = num_integer::Roots::sqrt(&(d << (2 * bits)));
            let below = Rational::from_integer(s.clone()) / &scale;
            let above = Rational::from_integer(s + 1) / &scale;
            if c.is_negative() {
                lo += c * &above;
                hi += c * &below;
            } else {
                lo += c * &below;
                hi += c * &above;
            }
        }
        (lo, hi)
    }

    pub fn sign(mut self) -> Ordering {
        self.prune();
        match self.roots.len() {
            0 => sign_of(&self.constant),
            1 => {
                let (b, d) = &self.roots[0];
                sign_one_root(&self.constant, b, d)
            }
            2 => {
                let (b1, d1) = &self.roots[0];
                let (b2, d2) = &self.roots[1];
                sign_two_roots(&self.constant, b1, d1, b2, d2)
            }
            _ => self.sign_by_refinement(),
        }
    }

    fn sign_by_refinement(&self) -> Ordering {
        let mut bits = START_BITS;
        loop {
            let (lo, hi) = self.bounds(bits);
            if lo.is_positive() {
                return Ordering::Greater;
            }
            if hi.is_negative() {
                return Ordering::Less;
            }
            assert!(bits < MAX_BITS, "sign refinement did not separate a nonzero value");
            bits *= 2;
        }
    }
}

/// Sign of `c + b·√d`, `d` not a perfect square.
fn sign_one_root(c: &Rational, b: &Rational, d: &BigInt) -> Ordering {
    let sc = sign_of(c);
    let sb = sign_of(b);
    if sc == Ordering::Equal {
        return sb;
    }
    if sb == Ordering::Equal || sc == sb {
        return sc;
    }
    let lhs = c * c;
    let rhs = b * b * Rational::from_integer(d.clone());
    match lhs.cmp(&rhs) {
        Ordering::Greater => sc,
        Ordering::Less => sb,
        Ordering::Equal => unreachable!("sqrt of a non-square is irrational"),
    }
}

/// Sign of `c + b1·√d1 + b2·√d2`.
fn sign_two_roots(
    c: &Rational,
    b1: &Rational,
    d1: &BigInt,
    b2: &Rational,
    d2: &BigInt,
) -> Ordering {
    let sa = sign_one_root(c, b1, d1);
    let sb = sign_of(b2);
    if sa == Ordering::Equal {
        return sb;
    }
    if sb == Ordering::Equal || sa == sb {
        return sa;
    }
    // sign(A + B) = sign(A) · sign(A² − B²) when A and B have opposite signs
    let r1 = Rational::from_integer(d1.clone());
    let r2 = Rational::from_integer(d2.clone());
    let constant = c * c + b1 * b1 * &r1 - b2 * b2 * &r2;
    let coef = Rational::from_integer(2.into()) * c * b1;
    let sd = sign_one_root(&constant, &coef, d1);
    if sa == Ordering::Greater {
        sd
    } else {
        sd.reverse()
    }
}
