use std::fmt;

use super::{parse_marked, FiniteWord, OneSidedWord};
use crate::error::{Error, Result};

/// Eventually periodic bi-infinite sequence with a distinguished origin.
///
/// `left` lists the digits at positions −1, −2, … (reading outward), `core`
/// occupies positions `0..core.len()`, and `right` continues at `core.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiInfiniteSequence {
    left: OneSidedWord,
    core: FiniteWord,
    right: OneSidedWord,
}

impl BiInfiniteSequence {
    pub fn new(left: OneSidedWord, core: FiniteWord, right: OneSidedWord) -> Self {
        BiInfiniteSequence { left, core, right }
    }

    /// The purely periodic sequence `…www…` with `w[0]` at the origin.
    pub fn periodic(w: &FiniteWord) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::EmptyWord);
        }
        let mut outward = w.digits().to_vec();
        outward.reverse();
        Ok(BiInfiniteSequence {
            left: OneSidedWord::from_parts(vec![], outward),
            core: FiniteWord::empty(),
            right: OneSidedWord::from_parts(vec![], w.digits().to_vec()),
        })
    }

    pub fn left(&self) -> &OneSidedWord {
        &self.left
    }
    pub fn core(&self) -> &FiniteWord {
        &self.core
    }
    pub fn right(&self) -> &OneSidedWord {
        &self.right
    }

    fn core_len(&self) -> i64 {
        self.core.len() as i64
    }

    pub fn digit_at(&self, i: i64) -> u32 {
        if i < 0 {
            self.left.digit((-i - 1) as usize)
        } else if i < self.core_len() {
            self.core[i as usize]
        } else {
            self.right.digit((i - self.core_len()) as usize)
        }
    }

    pub fn digits(&self, from: i64, to: i64) -> Vec<u32> {
        (from..to).map(|i| self.digit_at(i)).collect()
    }

    /// Digits `a_i, a_{i+1}, …`.
    pub fn forward_from(&self, i: i64) -> OneSidedWord {
        let c = self.core_len();
        if i >= c {
            return self.right.suffix((i - c) as usize);
        }
        self.right.prepend(&self.digits(i, c))
    }

    /// Digits `a_i, a_{i−1}, …`.
    pub fn backward_from(&self, i: i64) -> OneSidedWord {
        if i < 0 {
            return self.left.suffix((-i - 1) as usize);
        }
        let mut head = self.digits(0, i + 1);
        head.reverse();
        self.left.prepend(&head)
    }

    /// First position from which the right side is purely periodic.
    pub fn right_periodic_start(&self) -> i64 {
        self.core_len() + self.right.preperiod().len() as i64
    }

    /// Last position (counting down) from which the left side is purely periodic.
    pub fn left_periodic_start(&self) -> i64 {
        -1 - self.left.preperiod().len() as i64
    }

    /// The sequence re-indexed so that old position `k` becomes the origin.
    pub fn shift(&self, k: i64) -> BiInfiniteSequence {
        if k <= 0 {
            let moved = self.digits(k, 0);
            let mut core = moved;
            core.extend_from_slice(self.core.digits());
            BiInfiniteSequence {
                left: self.left.suffix((-k) as usize),
                core: FiniteWord::new(core).expect("positive digits"),
                right: self.right.clone(),
            }
        } else {
            let mut outward = self.digits(0, k);
            outward.reverse();
            BiInfiniteSequence {
                left: self.left.prepend(&outward),
                core: FiniteWord::new(self.digits(k, self.core_len().max(k))).expect("positive digits"),
                right: self.forward_from(self.core_len().max(k)),
            }
        }
    }

    /// The mirrored sequence `b_i = a_{−i}`.
    pub fn reversed(&self) -> BiInfiniteSequence {
        BiInfiniteSequence {
            left: self.forward_from(1),
            core: FiniteWord::new(vec![self.digit_at(0)]).expect("positive digit"),
            right: self.backward_from(-1),
        }
    }

    pub fn all_digits(&self) -> impl Iterator<Item = u32> + '_ {
        self.left
            .all_digits()
            .chain(self.core.digits().iter().copied())
            .chain(self.right.all_digits())
    }

    /// Parses the sequence literal `left ; core ; right` or a single periodic
    /// block.
    ///
    /// Each tail contains exactly one `over(…)` block giving its period and is
    /// written in natural left-to-right order: `over(1 2) 2 2` on the left is
    /// `…1 2 1 2 2 2`, `1 over(2 1)` on the right is `1 2 1 2 1 …`. The origin
    /// is the digit marked `*` if present, otherwise the digit immediately
    /// before the first `;`. A single segment `over(w)` (or a bare word `w`)
    /// denotes the purely periodic `…www…` with its first digit (or the marked
    /// one) at the origin.
    pub fn parse(text: &str) -> Result<Self> {
        let segments: Vec<(usize, &str)> = split_segments(text);
        match segments.len() {
            1 => {
                let (off, seg) = segments[0];
                let body = match find_over(seg, off)? {
                    Some((before, inner, after)) => {
                        if !before.trim().is_empty() || !after.trim().is_empty() {
                            return Err(Error::parse(off, "a periodic literal takes a single over(...) block"));
                        }
                        inner
                    }
                    None => seg,
                };
                let (w, star) = parse_marked(body).map_err(|e| rebase(e, off))?;
                let seq = Self::periodic(&w)?;
                Ok(seq.shift(star.unwrap_or(0) as i64))
            }
            3 => {
                let (loff, lseg) = segments[0];
                let (coff, cseg) = segments[1];
                let (roff, rseg) = segments[2];
                let (lper, lpre, lstar) = parse_tail(lseg, loff, true)?;
                let (core, cstar) = parse_marked(cseg).map_err(|e| rebase(e, coff))?;
                let (rper, rpre, rstar) = parse_tail(rseg, roff, false)?;
                if lstar.is_some() || rstar.is_some() {
                    return Err(Error::parse(loff, "the origin marker must sit in the core"));
                }
                let mut outward = lpre.into_digits();
                outward.reverse();
                let mut lp = lper.into_digits();
                lp.reverse();
                let seq = BiInfiniteSequence {
                    left: OneSidedWord::from_parts(outward, lp),
                    core,
                    right: OneSidedWord::from_parts(rpre.into_digits(), rper.into_digits()),
                };
                Ok(seq.shift(cstar.map(|s| s as i64).unwrap_or(-1)))
            }
            n => Err(Error::parse(0, format!("expected 1 or 3 `;`-separated segments, found {n}"))),
        }
    }
}

fn split_segments(text: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == ';' {
            out.push((start, &text[start..i]));
            start = i + 1;
        }
    }
    out.push((start, &text[start..]));
    out
}

fn rebase(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + offset,
            message,
        },
        other => other,
    }
}

/// Splits `seg` around its `over(...)` block.
fn find_over(seg: &str, off: usize) -> Result<Option<(&str, &str, &str)>> {
    let Some(open) = seg.find("over(") else {
        return Ok(None);
    };
    let inner_start = open + "over(".len();
    let close = seg[inner_start..]
        .find(')')
        .ok_or_else(|| Error::parse(off + open, "unclosed over("))?
        + inner_start;
    if seg[close + 1..].contains("over(") {
        return Err(Error::parse(off + close, "more than one over(...) block"));
    }
    Ok(Some((&seg[..open], &seg[inner_start..close], &seg[close + 1..])))
}

/// Returns (period, preperiod in reading order away from the core, star).
fn parse_tail(seg: &str, off: usize, left: bool) -> Result<(FiniteWord, FiniteWord, Option<usize>)> {
    let (before, inner, after) =
        find_over(seg, off)?.ok_or_else(|| Error::parse(off, "each tail needs an over(...) period"))?;
    let (period, s1) = parse_marked(inner).map_err(|e| rebase(e, off))?;
    if period.is_empty() {
        return Err(Error::parse(off, "empty period"));
    }
    let (outer, inner_text) = if left { (before, after) } else { (after, before) };
    if !outer.trim().is_empty() {
        return Err(Error::parse(
            off,
            "the over(...) block must be the outermost part of a tail",
        ));
    }
    let (pre, s2) = parse_marked(inner_text).map_err(|e| rebase(e, off))?;
    Ok((period, pre, s1.or(s2)))
}

impl fmt::Display for BiInfiniteSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // written with the origin as the last digit before the first `;`
        let s = self.shift(1);
        let mut lper = s.left.period().to_vec();
        lper.reverse();
        let mut lpre = s.left.preperiod().to_vec();
        lpre.reverse();
        let lper = FiniteWord::new(lper).map_err(|_| fmt::Error)?;
        let lpre = FiniteWord::new(lpre).map_err(|_| fmt::Error)?;
        let rper = FiniteWord::new(s.right.period().to_vec()).map_err(|_| fmt::Error)?;
        let rpre = FiniteWord::new(s.right.preperiod().to_vec()).map_err(|_| fmt::Error)?;
        let join = |a: String, b: String| {
            if b.is_empty() {
                a
            } else {
                format!("{a} {b}")
            }
        };
        write!(
            f,
            "{} ; {} ; {}",
            join(format!("over({lper})"), lpre.to_string()),
            s.core,
            if rpre.is_empty() {
                format!("over({rper})")
            } else {
                format!("{rpre} over({rper})")
            }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const RHO: &str = "over(1 2_2 1_2 2_4) ; 1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2 ; over(2_3 1_3)";

    #[test]
    fn parses_rho_with_origin_before_semicolon() {
        let rho = BiInfiniteSequence::parse(RHO).unwrap();
        assert_eq!(rho.digits(-8, 1), vec![1, 2, 2, 1, 1, 2, 2, 2, 2]);
        assert_eq!(rho.digit_at(0), 2);
        assert_eq!(rho.digits(1, 19), crate::words::parse_compact("1 2_2 1_2 2_4 1 2_2 1_2 2_2 1_2").unwrap().into_digits());
        assert_eq!(rho.digits(19, 31), vec![2, 2, 2, 1, 1, 1, 2, 2, 2, 1, 1, 1]);
        assert_eq!(rho.digits(-17, -8), vec![1, 2, 2, 1, 1, 2, 2, 2, 2]);
    }

    #[test]
    fn explicit_origin_and_periodic_literals() {
        let s = BiInfiniteSequence::parse("over(1) ; 2 1* 2 ; over(1)").unwrap();
        assert_eq!(s.digits(-3, 4), vec![1, 1, 2, 1, 2, 1, 1]);
        let p = BiInfiniteSequence::parse("over(1 2*)").unwrap();
        assert_eq!(p.digits(-2, 3), vec![2, 1, 2, 1, 2]);
        let q = BiInfiniteSequence::parse("2 1 1").unwrap();
        assert_eq!(q.digits(-3, 3), vec![2, 1, 1, 2, 1, 1]);
    }

    #[test]
    fn literal_errors() {
        assert!(BiInfiniteSequence::parse("over(1) ; 2").is_err());
        assert!(BiInfiniteSequence::parse("1 ; 2 ; over(1)").is_err());
        assert!(BiInfiniteSequence::parse("over(1) ; 2 ; over(1").is_err());
        assert!(BiInfiniteSequence::parse("over() ; 2 ; over(1)").is_err());
        assert!(BiInfiniteSequence::parse("over(1) ; 0 ; over(1)").is_err());
    }

    #[test]
    fn display_round_trips() {
        let rho = BiInfiniteSequence::parse(RHO).unwrap();
        let again = BiInfiniteSequence::parse(&rho.to_string()).unwrap();
        assert_eq!(again.digits(-60, 60), rho.digits(-60, 60));
    }

    #[test]
    fn shift_and_reverse() {
        let rho = BiInfiniteSequence::parse(RHO).unwrap();
        for k in -25..25 {
            let s = rho.shift(k);
            assert_eq!(s.digits(-40, 40), rho.digits(k - 40, k + 40), "shift {k}");
        }
        let r = rho.reversed();
        for i in -40..40 {
            assert_eq!(r.digit_at(i), rho.digit_at(-i));
        }
    }

    #[test]
    fn tails_are_periodic() {
        let rho = BiInfiniteSequence::parse(RHO).unwrap();
        let start = rho.left_periodic_start();
        let per = rho.left().period().len() as i64;
        for i in (start - 50)..start {
            assert_eq!(rho.digit_at(i), rho.digit_at(i + per));
        }
        let fw = rho.forward_from(-5);
        let bw = rho.backward_from(7);
        for k in 0..40 {
            assert_eq!(fw.digit(k), rho.digit_at(-5 + k as i64));
            assert_eq!(bw.digit(k), rho.digit_at(7 - k as i64));
        }
    }
}
