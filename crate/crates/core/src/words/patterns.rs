use std::ops::Range;

use super::{check_binary_alphabet, parse_compact, BiInfiniteSequence, FiniteWord, OneSidedWord};
use crate::error::Result;

/// The thirteen forbidden strings of the first forbidden-string table, with
/// the asterisk dropped.
pub(crate) const FORBIDDEN_WORDS: [&str; 13] = [
    "1 2 1",
    "2_2 1 2 2_2 1",
    "2_3 1 2 2_2",
    "2_4 2 1 2_2 1_2",
    "2_3 1_2 2_3 2 1 2_2 1_2 2_3",
    "2_2 1_2 2_3 2 1 2_2 1_2 2_3 1",
    "1_2 2_2 1_2 2_3 2 1 2_2 1_2 2_3",
    "2_2 1 2_2 1_2 2_3 2 1 2_2 1_2 2_5",
    "1 2_2 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1",
    "2_4 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1_2",
    "2_4 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1 2_2 1 2",
    "1 2_4 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1 2_2 1_3",
    "2 1 2_4 1 2_2 1_2 2_3 2 1 2_2 1_2 2_4 1 2_2 1_2 2_2",
];

/// The extra word excluded from the Cantor set `Y` besides the table.
pub(crate) const EXTRA_WORD: &str = "2 1_2 2_4 1 2_2 1_2 2_3";

const CANONICAL_SIZE: usize = 26;

/// A finite set of forbidden words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternSet {
    patterns: Vec<FiniteWord>,
}

impl PatternSet {
    pub fn new(mut patterns: Vec<FiniteWord>) -> Self {
        let mut seen = std::collections::HashSet::new();
        patterns.retain(|p| seen.insert(p.clone()));
        PatternSet { patterns }
    }

    /// The set defining `Y`: the table words, their transposes, the extra word
    /// and its transpose. Words `1 2 1` and `2_3 1 2_3` are palindromes, so the
    /// 28 listed words collapse to 26 distinct ones.
    pub fn canonical() -> Self {
        let mut words = Vec::new();
        for text in FORBIDDEN_WORDS.iter().chain(std::iter::once(&EXTRA_WORD)) {
            let w = parse_compact(text).expect("static pattern");
            words.push(w.transpose());
            words.push(w);
        }
        let set = PatternSet::new(words);
        assert_eq!(set.len(), CANONICAL_SIZE, "canonical pattern set must have 26 distinct words");
        set
    }

    pub fn patterns(&self) -> &[FiniteWord] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn max_len(&self) -> usize {
        self.patterns.iter().map(FiniteWord::len).max().unwrap_or(0)
    }

    pub fn is_closed_under_transpose(&self) -> bool {
        self.patterns.iter().all(|p| self.patterns.contains(&p.transpose()))
    }

    /// First (position, pattern) occurrence in `text`, scanning starts `< limit`.
    fn first_match(&self, text: &[u32], limit: usize) -> Option<(usize, FiniteWord)> {
        let hay = FiniteWord::new(text.to_vec()).ok()?;
        (0..limit.min(text.len())).find_map(|start| {
            self.patterns
                .iter()
                .find(|p| hay.matches_at(p, start))
                .map(|p| (start, p.clone()))
        })
    }
}

/// Outcome of a membership scan against a pattern set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YMembership {
    pub member: bool,
    pub first_violation: Option<(usize, FiniteWord)>,
}

/// Whether an eventually periodic word over {1,2} avoids every canonical pattern.
///
/// Any occurrence in `pre · per^∞` has a copy starting before `|pre| + |per|`,
/// so scanning starts below `|pre| + 2|per|` over a text of that length plus
/// the longest pattern covers every occurrence.
pub fn y_membership(word: &OneSidedWord) -> Result<YMembership> {
    let pat = PatternSet::canonical();
    let pre = word.preperiod().len();
    let per = word.period().len();
    check_binary_alphabet(word.preperiod())?;
    check_binary_alphabet(word.period())?;
    let starts = pre + 2 * per;
    let text = word.prefix(starts + pat.max_len());
    let hit = pat.first_match(&text, starts);
    if let Some((pos, _)) = &hit {
        debug_assert!(*pos < pre + per || pat.first_match(&text, pre + per).is_some());
    }
    Ok(YMembership {
        member: hit.is_none(),
        first_violation: hit,
    })
}

/// Membership scan for a finite word.
pub fn y_membership_finite(word: &FiniteWord) -> Result<YMembership> {
    check_binary_alphabet(word.digits())?;
    let pat = PatternSet::canonical();
    let hit = pat.first_match(word.digits(), word.len());
    Ok(YMembership {
        member: hit.is_none(),
        first_violation: hit,
    })
}

/// All start positions `p` in `window` with `needle` at `p, p+1, …`.
pub fn find_pattern(hay: &BiInfiniteSequence, needle: &FiniteWord, window: Range<i64>) -> Vec<i64> {
    window
        .filter(|&p| {
            needle
                .digits()
                .iter()
                .enumerate()
                .all(|(k, &d)| hay.digit_at(p + k as i64) == d)
        })
        .collect()
}
