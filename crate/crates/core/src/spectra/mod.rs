//! Perron values `λ_i`, Markov values and Lagrange values of eventually
//! periodic sequences over positive digits.

mod markov;

pub use markov::{markov_value, MarkovCertificate, MarkovValue, TailClass, TailSide};

use std::cmp::Ordering;

use num_bigint::BigInt;

use crate::arith::{enclose, surd_compare, Enclosure, Rational, SurdSum};
use crate::cf::LambdaExpression;
use crate::error::{Error, Result};
use crate::words::{BiInfiniteSequence, FiniteWord};

/// Width of the enclosure attached to every reported value.
pub const REPORT_WIDTH_DIGITS: u32 = 40;

/// An exact value together with a certified rational enclosure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumValue {
    pub value: SurdSum,
    pub enclosure: Enclosure,
}

impl SpectrumValue {
    pub fn new(value: SurdSum) -> Self {
        let width = Rational::new(1.into(), BigInt::from(10).pow(REPORT_WIDTH_DIGITS));
        let enclosure = enclose(&value, &width);
        SpectrumValue { value, enclosure }
    }

    pub fn decimal(&self, digits: usize) -> String {
        self.value.to_decimal(digits)
    }
}

impl PartialOrd for SpectrumValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(surd_compare(&self.value, &other.value))
    }
}

/// `λ_i` split into its integer part and the two one-sided tails.
pub fn lambda_expression(seq: &BiInfiniteSequence, i: i64) -> LambdaExpression {
    LambdaExpression::new(seq.digit_at(i), seq.forward_from(i + 1), seq.backward_from(i - 1))
}

/// `λ_i(A) = [a_i; a_{i+1}, …] + [0; a_{i−1}, a_{i−2}, …]`.
pub fn lambda_at(seq: &BiInfiniteSequence, i: i64) -> SpectrumValue {
    SpectrumValue::new(lambda_expression(seq, i).value)
}

/// `ℓ` of the purely periodic sequence `…www…`, the largest `λ` over the
/// `|w|` phases. Returns the value and the first phase attaining it.
pub fn lagrange_value(w: &FiniteWord) -> Result<(SpectrumValue, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let seq = BiInfiniteSequence::periodic(w)?;
    let mut best: Option<(SurdSum, usize)> = None;
    for i in 0..w.len() {
        let v = lambda_expression(&seq, i as i64).value;
        if best
            .as_ref()
            .map_or(true, |(b, _)| surd_compare(&v, b) == Ordering::Greater)
        {
            best = Some((v, i));
        }
    }
    let (v, i) = best.expect("nonempty word");
    Ok((SpectrumValue::new(v), i))
}
