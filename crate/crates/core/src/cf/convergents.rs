use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::Rational;
use crate::words::FiniteWord;

/// Convergents `p_k / q_k` of `[a0; d1, …, dn]`, `k = 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Convergents {
    pairs: Vec<(BigInt, BigInt)>,
}

impl Convergents {
    pub fn new(a0: i64, w: &FiniteWord) -> Self {
        let mut pairs = Vec::with_capacity(w.len() + 1);
        let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
        let (mut p, mut q) = (BigInt::from(a0), BigInt::one());
        pairs.push((p.clone(), q.clone()));
        for &d in w.digits() {
            let p_next = &p * d + &p_prev;
            let q_next = &q * d + &q_prev;
            p_prev = std::mem::replace(&mut p, p_next);
            q_prev = std::mem::replace(&mut q, q_next);
            pairs.push((p.clone(), q.clone()));
        }
        Convergents { pairs }
    }

    pub fn pairs(&self) -> &[(BigInt, BigInt)] {
        &self.pairs
    }

    pub fn last(&self) -> Rational {
        let (p, q) = self.pairs.last().expect("at least the zeroth convergent");
        Rational::new(p.clone(), q.clone())
    }

    /// `p_k q_{k−1} − p_{k−1} q_k = (−1)^{k−1}` for every `k ≥ 1`.
    pub fn determinants_hold(&self) -> bool {
        self.pairs.windows(2).enumerate().all(|(i, w)| {
            let k = i + 1;
            let det = &w[1].0 * &w[0].1 - &w[0].0 * &w[1].1;
            let expected = if k % 2 == 1 { BigInt::one() } else { -BigInt::one() };
            det == expected
        })
    }
}

/// Exact value of `[a0; w]`.
pub fn eval_finite(a0: i64, w: &FiniteWord) -> Rational {
    Convergents::new(a0, w).last()
}

/// Upper bound on `|x − y|` for any two continued fractions `[0; prefix, …]`.
///
/// Both lie in the cylinder between `p_m/q_m` and `(p_m + p_{m−1})/(q_m + q_{m−1})`,
/// whose length is `1 / (q_m (q_m + q_{m−1}))`.
pub fn agreement_gap(prefix: &FiniteWord) -> Rational {
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    for &d in prefix.digits() {
        let next = &q * d + &q_prev;
        q_prev = std::mem::replace(&mut q, next);
    }
    Rational::new(BigInt::one(), &q * (&q + q_prev))
}
