use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::arith::{parse_decimal, Rational};
use crate::error::{Error, Result};
use crate::words::{check_binary_alphabet, parse_marked};

/// Assigned digits plus strict caps `λ_n < c` and floors `λ_n > c`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WindowConstraint {
    pub assigned: BTreeMap<i64, u32>,
    pub lambda_caps: Vec<(i64, Rational)>,
    pub lambda_floors: Vec<(i64, Rational)>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConstraint {
    #[serde(default)]
    assigned: BTreeMap<i64, u32>,
    /// Marked word such as `"2 1_2 2_4* 1"`; the star sits at position 0.
    #[serde(default)]
    assigned_word: Option<String>,
    #[serde(default)]
    lambda_caps: Vec<(i64, String)>,
    #[serde(default)]
    lambda_floors: Vec<(i64, String)>,
}

impl WindowConstraint {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign_word(mut self, start: i64, digits: &[u32]) -> Result<Self> {
        check_binary_alphabet(digits)?;
        for (k, &d) in digits.iter().enumerate() {
            self.assigned.insert(start + k as i64, d);
        }
        Ok(self)
    }

    pub fn cap(mut self, positions: &[i64], bound: &Rational) -> Self {
        self.lambda_caps
            .extend(positions.iter().map(|&p| (p, bound.clone())));
        self
    }

    pub fn floor(mut self, positions: &[i64], bound: &Rational) -> Self {
        self.lambda_floors
            .extend(positions.iter().map(|&p| (p, bound.clone())));
        self
    }

    /// Reads the JSON form, with bounds as decimal strings:
    /// `{"assigned": {"-6": 2}, "lambda_caps": [[0, "3.1181201786"]], "lambda_floors": [[0, "3.118117"]]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawConstraint =
            serde_json::from_str(text).map_err(|e| Error::Invalid(format!("constraint json: {e}")))?;
        let mut c = WindowConstraint::new();
        for (&p, &d) in &raw.assigned {
            check_binary_alphabet(&[d])?;
            c.assigned.insert(p, d);
        }
        if let Some(w) = raw.assigned_word {
            let (word, mark) = parse_marked(&w)?;
            c = c.assign_word(-(mark.unwrap_or(0) as i64), word.digits())?;
        }
        for (p, b) in raw.lambda_caps {
            c.lambda_caps.push((p, parse_decimal(&b)?));
        }
        for (p, b) in raw.lambda_floors {
            c.lambda_floors.push((p, parse_decimal(&b)?));
        }
        Ok(c)
    }

    pub fn is_unconstrained(&self) -> bool {
        self.lambda_caps.is_empty() && self.lambda_floors.is_empty()
    }
}

impl fmt::Display for WindowConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let render = |r: &Rational| render_bound(r);
        write!(f, "assigned {{")?;
        for (i, (p, d)) in self.assigned.iter().enumerate() {
            write!(f, "{}{p}:{d}", if i == 0 { "" } else { " " })?;
        }
        write!(f, "}}")?;
        for (p, b) in &self.lambda_caps {
            write!(f, " λ_{p}<{}", render(b))?;
        }
        for (p, b) in &self.lambda_floors {
            write!(f, " λ_{p}>{}", render(b))?;
        }
        Ok(())
    }
}

/// Shortest decimal rendering of a bound with at most 20 fractional digits.
pub(crate) fn render_bound(r: &Rational) -> String {
    let s = crate::arith::truncate_decimal(r, 20);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
