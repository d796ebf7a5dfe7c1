use std::cmp::Ordering;

use num_traits::Zero;
use rayon::prelude::*;

use crate::arith::{surd_compare, Rational, SurdSum};
use crate::cf::{agreement_gap, LambdaExpression};
use crate::words::{BiInfiniteSequence, FiniteWord, OneSidedWord};

use super::{lambda_expression, SpectrumValue};

const INITIAL_PERIODS: i64 = 3;
const MAX_PERIODS: i64 = 3 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TailSide {
    Left,
    Right,
}

/// Unscanned tail positions `first, first ± step, first ± 2·step, …` sharing
/// one periodic phase and one sign of `λ_i − phase_value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailClass {
    pub side: TailSide,
    pub first: i64,
    pub step: i64,
    pub phase_value: SurdSum,
    pub sign: Ordering,
    /// Certified upper bound on `λ_i` over the class.
    pub bound: SurdSum,
    /// `bound − phase_value`, zero when the class never exceeds its phase value.
    pub gap: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovCertificate {
    /// `None` when the supremum is only approached along a tail.
    pub attaining_position: Option<i64>,
    pub attained_in_limit: bool,
    /// Inclusive range of positions whose `λ` was computed exactly.
    pub core_window: (i64, i64),
    /// Largest deviation allowed above a phase value.
    pub tail_bound: Rational,
    pub periodic_phase_values: Vec<SurdSum>,
    pub classes: Vec<TailClass>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovValue {
    pub value: SpectrumValue,
    pub certificate: MarkovCertificate,
}

/// `λ_i` with the backward side replaced by the periodic continuation of the
/// right tail. Valid once `i − period ≥ right_periodic_start`.
fn right_phase_expression(seq: &BiInfiniteSequence, i: i64, period: usize) -> LambdaExpression {
    let back: Vec<u32> = (1..=period as i64).map(|k| seq.digit_at(i - k)).collect();
    LambdaExpression::new(
        seq.digit_at(i),
        seq.forward_from(i + 1),
        OneSidedWord::from_parts(vec![], back),
    )
}

/// Tail classes for positions `i > hi` of `seq`, reported in the coordinates
/// of `map(i)`.
fn right_classes(
    seq: &BiInfiniteSequence,
    hi: i64,
    side: TailSide,
    map: impl Fn(i64) -> i64,
) -> Vec<TailClass> {
    let start = seq.right_periodic_start();
    let period = seq.right().period().len();
    let step = 2 * period as i64;
    (1..=step)
        .map(|k| {
            let i = hi + k;
            let phase = right_phase_expression(seq, i, period);
            let actual = lambda_expression(seq, i);
            let sign = surd_compare(&actual.value, &phase.value);
            let gap = if sign == Ordering::Greater {
                let shared = FiniteWord::new(phase.backward.prefix((i - start) as usize))
                    .expect("positive digits");
                agreement_gap(&shared)
            } else {
                Rational::zero()
            };
            TailClass {
                side,
                first: map(i),
                step: if side == TailSide::Right { step } else { -step },
                bound: phase.value.add_rational(&gap),
                phase_value: phase.value,
                sign,
                gap,
            }
        })
        .collect()
}

fn tail_classes(seq: &BiInfiniteSequence, lo: i64, hi: i64) -> Vec<TailClass> {
    let mut classes = right_classes(seq, hi, TailSide::Right, |i| i);
    classes.extend(right_classes(&seq.reversed(), -lo, TailSide::Left, |i| -i));
    classes
}

/// Prefers larger values, then smaller `|i|`, then negative `i`.
fn better(a: &(i64, SurdSum), b: &(i64, SurdSum)) -> bool {
    match surd_compare(&a.1, &b.1) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => (a.0.abs(), a.0) < (b.0.abs(), b.0),
    }
}

fn scan(seq: &BiInfiniteSequence, lo: i64, hi: i64) -> (i64, SurdSum) {
    (lo..=hi)
        .into_par_iter()
        .map(|i| (i, lambda_expression(seq, i).value))
        .reduce_with(|a, b| if better(&b, &a) { b } else { a })
        .expect("nonempty scan range")
}

enum Verdict {
    Attained,
    Limit(SurdSum),
    Extend,
}

fn judge(best: &SurdSum, classes: &[TailClass]) -> Verdict {
    let mut limit: Option<SurdSum> = None;
    for c in classes {
        match c.sign {
            Ordering::Greater => {
                if surd_compare(&c.bound, best) != Ordering::Less {
                    return Verdict::Extend;
                }
            }
            _ => {
                if surd_compare(&c.phase_value, best) == Ordering::Greater
                    && limit
                        .as_ref()
                        .map_or(true, |l| surd_compare(&c.phase_value, l) == Ordering::Greater)
                {
                    limit = Some(c.phase_value.clone());
                }
            }
        }
    }
    match limit {
        Some(l) => Verdict::Limit(l),
        None => Verdict::Attained,
    }
}

fn scan_range(seq: &BiInfiniteSequence, periods: i64) -> (i64, i64) {
    let lo = seq.left_periodic_start().min(0) - periods * seq.left().period().len() as i64;
    let hi = seq.right_periodic_start().max(0) + periods * seq.right().period().len() as i64;
    (lo, hi)
}

/// Exact `m(A) = sup_i λ_i(A)` with a replayable certificate.
pub fn markov_value(seq: &BiInfiniteSequence) -> MarkovValue {
    let mut periods = INITIAL_PERIODS;
    loop {
        let (lo, hi) = scan_range(seq, periods);
        let (pos, best) = scan(seq, lo, hi);
        let classes = tail_classes(seq, lo, hi);
        let verdict = judge(&best, &classes);
        let (value, attaining) = match verdict {
            Verdict::Extend => {
                periods *= 2;
                assert!(periods <= MAX_PERIODS, "tail certification did not converge");
                continue;
            }
            Verdict::Attained => (best, Some(pos)),
            Verdict::Limit(l) => (l, None),
        };
        let tail_bound = classes
            .iter()
            .map(|c| c.gap.clone())
            .max()
            .unwrap_or_else(Rational::zero);
        let mut phases: Vec<SurdSum> = Vec::new();
        for c in &classes {
            if !phases.iter().any(|p| surd_compare(p, &c.phase_value) == Ordering::Equal) {
                phases.push(c.phase_value.clone());
            }
        }
        return MarkovValue {
            value: SpectrumValue::new(value),
            certificate: MarkovCertificate {
                attaining_position: attaining,
                attained_in_limit: attaining.is_none(),
                core_window: (lo, hi),
                tail_bound,
                periodic_phase_values: phases,
                classes,
            },
        };
    }
}

impl MarkovCertificate {
    /// Re-checks the certificate against `seq` and the claimed value using
    /// only exact evaluations.
    pub fn verify(&self, seq: &BiInfiniteSequence, value: &SurdSum) -> bool {
        let (lo, hi) = self.core_window;
        if lo > hi || lo > 0 || hi < 0 {
            return false;
        }
        if seq.left_periodic_start() < lo + seq.left().period().len() as i64
            || seq.right_periodic_start() > hi - seq.right().period().len() as i64
        {
            return false;
        }
        // scanned positions
        for i in lo..=hi {
            let v = lambda_expression(seq, i).value;
            match (surd_compare(&v, value), self.attaining_position) {
                (Ordering::Greater, _) => return false,
                (Ordering::Equal, Some(p)) if (i.abs(), i) < (p.abs(), p) => return false,
                _ => {}
            }
        }
        if let Some(p) = self.attaining_position {
            if !(lo..=hi).contains(&p)
                || surd_compare(&lambda_expression(seq, p).value, value) != Ordering::Equal
            {
                return false;
            }
        }
        // every unscanned position lies in exactly one class
        let rights = self.classes.iter().filter(|c| c.side == TailSide::Right);
        let lefts = self.classes.iter().filter(|c| c.side == TailSide::Left);
        let covers = |firsts: Vec<i64>, from: i64, step: i64| {
            let mut f = firsts;
            f.sort_unstable();
            let expected: Vec<i64> = (0..step.abs()).map(|k| from + k * step.signum()).collect();
            let mut e = expected;
            e.sort_unstable();
            f == e
        };
        let right_step = 2 * seq.right().period().len() as i64;
        let left_step = 2 * seq.left().period().len() as i64;
        if !covers(rights.map(|c| c.first).collect(), hi + 1, right_step)
            || !covers(lefts.map(|c| c.first).collect(), lo - 1, -left_step)
        {
            return false;
        }
        let recomputed = tail_classes(seq, lo, hi);
        let mut limit_seen = false;
        for c in &self.classes {
            let Some(r) = recomputed.iter().find(|r| r.first == c.first && r.side == c.side) else {
                return false;
            };
            if surd_compare(&r.phase_value, &c.phase_value) != Ordering::Equal || r.sign != c.sign {
                return false;
            }
            match c.sign {
                Ordering::Greater => {
                    if c.gap > self.tail_bound
                        || c.gap < r.gap
                        || surd_compare(&c.phase_value.add_rational(&c.gap), value) != Ordering::Less
                    {
                        return false;
                    }
                }
                _ => match surd_compare(&c.phase_value, value) {
                    Ordering::Greater => return false,
                    Ordering::Equal if self.attained_in_limit => limit_seen = true,
                    _ => {}
                },
            }
        }
        self.attained_in_limit == self.attaining_position.is_none()
            && (!self.attained_in_limit || limit_seen)
    }
}
