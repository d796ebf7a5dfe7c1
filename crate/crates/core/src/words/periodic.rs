use std::fmt;

use super::FiniteWord;
use crate::error::{Error, Result};

/// Eventually periodic one-sided word `preperiod · period · period · …`.
///
/// Always normalized: the period is primitive and the preperiod minimal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OneSidedWord {
    preperiod: Vec<u32>,
    period: Vec<u32>,
}

impl OneSidedWord {
    pub fn new(preperiod: FiniteWord, period: FiniteWord) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::EmptyWord);
        }
        Ok(Self::from_parts(preperiod.into_digits(), period.into_digits()))
    }

    pub fn purely_periodic(period: FiniteWord) -> Result<Self> {
        Self::new(FiniteWord::empty(), period)
    }

    pub(crate) fn from_parts(mut preperiod: Vec<u32>, mut period: Vec<u32>) -> Self {
        assert!(!period.is_empty(), "period must be nonempty");
        let n = period.len();
        if let Some(p) = (1..n).find(|&p| n % p == 0 && period.chunks(p).all(|c| c == &period[..p])) {
            period.truncate(p);
        }
        while let Some(&last) = preperiod.last() {
            if last != *period.last().unwrap() {
                break;
            }
            preperiod.pop();
            period.rotate_right(1);
        }
        OneSidedWord { preperiod, period }
    }

    pub fn preperiod(&self) -> &[u32] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u32] {
        &self.period
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.preperiod.is_empty()
    }

    pub fn digit(&self, n: usize) -> u32 {
        match self.preperiod.get(n) {
            Some(&d) => d,
            None => self.period[(n - self.preperiod.len()) % self.period.len()],
        }
    }

    pub fn prefix(&self, n: usize) -> Vec<u32> {
        (0..n).map(|k| self.digit(k)).collect()
    }

    /// The word with its first `n` digits removed.
    pub fn suffix(&self, n: usize) -> OneSidedWord {
        if n <= self.preperiod.len() {
            return Self::from_parts(self.preperiod[n..].to_vec(), self.period.clone());
        }
        let mut period = self.period.clone();
        period.rotate_left((n - self.preperiod.len()) % self.period.len());
        OneSidedWord {
            preperiod: Vec::new(),
            period,
        }
    }

    /// `digits · self`.
    pub fn prepend(&self, digits: &[u32]) -> OneSidedWord {
        let mut pre = digits.to_vec();
        pre.extend_from_slice(&self.preperiod);
        Self::from_parts(pre, self.period.clone())
    }

    pub fn all_digits(&self) -> impl Iterator<Item = u32> + '_ {
        self.preperiod.iter().chain(self.period.iter()).copied()
    }

    /// Index of the first difference between two words, if any.
    pub fn first_difference(&self, other: &OneSidedWord) -> Option<usize> {
        let pre = self.preperiod.len().max(other.preperiod.len());
        let span = num_integer::lcm(self.period.len(), other.period.len());
        (0..pre + span).find(|&k| self.digit(k) != other.digit(k))
    }
}

impl fmt::Display for OneSidedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let period = FiniteWord::new(self.period.clone()).map_err(|_| fmt::Error)?;
        if self.preperiod.is_empty() {
            write!(f, "over({period})")
        } else {
            let pre = FiniteWord::new(self.preperiod.clone()).map_err(|_| fmt::Error)?;
            write!(f, "{pre} over({period})")
        }
    }
}
