use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{Branch, QuadraticSurd, Rational, SurdSum};
use crate::words::OneSidedWord;

/// Integer Möbius map `x ↦ (a·x + b) / (c·x + d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mobius {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl Mobius {
    pub fn identity() -> Self {
        Mobius {
            a: BigInt::one(),
            b: BigInt::zero(),
            c: BigInt::zero(),
            d: BigInt::one(),
        }
    }

    /// The map `x ↦ [0; digits, x]`.
    pub fn of_digits(digits: &[u32]) -> Self {
        digits.iter().fold(Self::identity(), |m, &digit| {
            // m · [[0, 1], [1, digit]]
            Mobius {
                a: m.b.clone(),
                b: &m.a + &m.b * digit,
                c: m.d.clone(),
                d: &m.c + &m.d * digit,
            }
        })
    }

    /// `x ↦ shift + m(x)`.
    pub fn translate(self, shift: i64) -> Self {
        Mobius {
            a: &self.a + &self.c * shift,
            b: &self.b + &self.d * shift,
            c: self.c,
            d: self.d,
        }
    }

    pub fn apply(&self, x: &QuadraticSurd) -> QuadraticSurd {
        x.mobius(&self.a, &self.b, &self.c, &self.d)
            .expect("continued fraction maps have no pole on (0, 1)")
    }

    /// Attracting fixed point in (0, 1) of a purely periodic tail map.
    pub fn periodic_fixed_point(&self) -> QuadraticSurd {
        // c x² + (d − a) x − b = 0 has roots of opposite sign since b, c > 0
        let t = QuadraticSurd::from_fixed_point(&self.c, &(&self.d - &self.a), &-&self.b, Branch::Plus)
            .expect("period maps have a positive discriminant");
        let ts = SurdSum::from(t.clone());
        assert!(
            ts.cmp_rational(&Rational::zero()) == Ordering::Greater && ts.cmp_rational(&Rational::one()) == Ordering::Less,
            "periodic tail value must lie in (0, 1)"
        );
        t
    }
}

/// Exact value of `[a0; w]` for an eventually periodic word `w`.
pub fn eval_periodic(a0: i64, w: &OneSidedWord) -> QuadraticSurd {
    let tail = Mobius::of_digits(w.period()).periodic_fixed_point();
    Mobius::of_digits(w.preperiod()).translate(a0).apply(&tail)
}

/// Order of `[0; x]` against `[0; y]` by the alternating rule: at the first
/// differing partial quotient (index `k ≥ 1`) the larger digit wins when `k`
/// is even and loses when `k` is odd.
pub fn compare_words(x: &OneSidedWord, y: &OneSidedWord) -> Ordering {
    match x.first_difference(y) {
        None => Ordering::Equal,
        Some(k) => {
            let by_digit = x.digit(k).cmp(&y.digit(k));
            // word index k is partial quotient k + 1
            if (k + 1) % 2 == 0 {
                by_digit
            } else {
                by_digit.reverse()
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::surd_compare;
    use crate::words::{parse_compact, FiniteWord};
    use proptest::prelude::*;

    fn periodic(pre: &str, per: &str) -> OneSidedWord {
        let p = if pre.is_empty() {
            FiniteWord::empty()
        } else {
            parse_compact(pre).unwrap()
        };
        OneSidedWord::new(p, parse_compact(per).unwrap()).unwrap()
    }

    fn surd(p: i64, q: i64, d: i64, r: i64) -> QuadraticSurd {
        QuadraticSurd::new(p.into(), q.into(), d.into(), r.into()).unwrap()
    }

    #[test]
    fn periodic_examples() {
        assert_eq!(eval_periodic(0, &periodic("", "1")), surd(-1, 1, 5, 2));
        assert_eq!(eval_periodic(0, &periodic("", "2")), surd(-1, 1, 2, 1));
        assert_eq!(eval_periodic(0, &periodic("", "1 2")), surd(-1, 1, 3, 1));
        assert_eq!(eval_periodic(2, &periodic("", "2")), surd(1, 1, 2, 1));
        // [2; 1, over(1 2)] = 2 + 1/(1 + sqrt3 - 1) = 2 + sqrt3/3
        assert_eq!(eval_periodic(2, &periodic("1", "1 2")), surd(6, 1, 3, 3));
    }

    #[test]
    fn periodic_value_is_a_fixed_point() {
        let w = periodic("", "2_4 1_2 2_2 1");
        let t = eval_periodic(0, &w);
        let m = Mobius::of_digits(w.period());
        assert_eq!(m.apply(&t), t);
    }

    #[test]
    fn compare_examples() {
        assert_eq!(compare_words(&periodic("1 1", "1"), &periodic("1 2", "1")), Ordering::Less);
        assert_eq!(compare_words(&periodic("", "1"), &periodic("", "1")), Ordering::Equal);
        assert_eq!(compare_words(&periodic("2", "1"), &periodic("1", "1")), Ordering::Less);
    }

    fn word_strategy() -> impl Strategy<Value = OneSidedWord> {
        (
            proptest::collection::vec(1u32..3, 0..6),
            proptest::collection::vec(1u32..3, 1..5),
        )
            .prop_map(|(pre, per)| OneSidedWord::from_parts(pre, per))
    }

    proptest! {
        #[test]
        fn symbolic_order_matches_exact_values(x in word_strategy(), y in word_strategy()) {
            let sx = SurdSum::from(eval_periodic(0, &x));
            let sy = SurdSum::from(eval_periodic(0, &y));
            prop_assert_eq!(compare_words(&x, &y), surd_compare(&sx, &sy));
        }

        #[test]
        fn fixed_point_equation(per in proptest::collection::vec(1u32..4, 1..8)) {
            let m = Mobius::of_digits(&per);
            let t = m.periodic_fixed_point();
            prop_assert!(t.eval_quadratic(&m.c, &(&m.d - &m.a), &-&m.b).is_zero());
        }
    }
}
