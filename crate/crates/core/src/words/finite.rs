use std::fmt;
use std::ops::Index;

use crate::error::{Error, Result};

/// Ordered list of positive digits.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FiniteWord(Vec<u32>);

impl FiniteWord {
    pub fn new(digits: Vec<u32>) -> Result<Self> {
        if let Some(pos) = digits.iter().position(|&d| d == 0) {
            return Err(Error::parse(pos, "digit 0 is not a partial quotient"));
        }
        Ok(FiniteWord(digits))
    }

    pub fn empty() -> Self {
        FiniteWord(Vec::new())
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> FiniteWord {
        FiniteWord(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &FiniteWord) -> FiniteWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FiniteWord(v)
    }

    pub fn repeat(&self, times: usize) -> FiniteWord {
        FiniteWord(self.0.repeat(times))
    }

    /// Canonical compact text: runs of equal digits collapse to `d_k`.
    pub fn render_compact(&self) -> String {
        let mut out: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let d = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == d).count();
            out.push(if run == 1 {
                d.to_string()
            } else {
                format!("{d}_{run}")
            });
            i += run;
        }
        out.join(" ")
    }

    /// True when `needle` occurs at `start`.
    pub fn matches_at(&self, needle: &FiniteWord, start: usize) -> bool {
        self.0.get(start..start + needle.len()) == Some(needle.digits())
    }
}

impl Index<usize> for FiniteWord {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_compact())
    }
}

impl std::str::FromStr for FiniteWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_compact(s)
    }
}

/// Parses compact word notation, e.g. `"2_4 1_2"` or `"1, 2_2, 1"`.
pub fn parse_compact(text: &str) -> Result<FiniteWord> {
    let (word, star) = parse_marked(text)?;
    if let Some(pos) = star {
        return Err(Error::parse(pos, "unexpected origin marker `*`"));
    }
    Ok(word)
}

/// Like [`parse_compact`] but accepts one `*` after a token marking the origin.
/// Returns the word and the index of the marked digit (the last digit of the
/// marked run).
pub fn parse_marked(text: &str) -> Result<(FiniteWord, Option<usize>)> {
    let mut digits = Vec::new();
    let mut star = None;
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b',' {
            i += 1;
            continue;
        }
        let start = i;
        let digit = read_number(bytes, &mut i)
            .ok_or_else(|| Error::parse(start, format!("expected a digit, found `{}`", c as char)))?;
        if digit == 0 {
            return Err(Error::parse(start, "digit 0 is not a partial quotient"));
        }
        let mut count = 1;
        if i < bytes.len() && bytes[i] == b'_' {
            i += 1;
            let cstart = i;
            count = read_number(bytes, &mut i)
                .ok_or_else(|| Error::parse(cstart, "expected a multiplicity after `_`"))?;
            if count == 0 {
                return Err(Error::parse(cstart, "zero multiplicity"));
            }
        }
        digits.extend(std::iter::repeat_n(digit, count as usize));
        if i < bytes.len() && bytes[i] == b'*' {
            if star.is_some() {
                return Err(Error::parse(i, "more than one origin marker"));
            }
            star = Some(digits.len() - 1);
            i += 1;
        }
        if i < bytes.len() && !(bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
            return Err(Error::parse(i, format!("unexpected `{}`", bytes[i] as char)));
        }
    }
    Ok((FiniteWord(digits), star))
}

fn read_number(bytes: &[u8], i: &mut usize) -> Option<u32> {
    let start = *i;
    while *i < bytes.len() && bytes[*i].is_ascii_digit() {
        *i += 1;
    }
    if *i == start {
        return None;
    }
    std::str::from_utf8(&bytes[start..*i]).ok()?.parse().ok()
}
