use std::ops::Range;

use crate::arith::{parse_decimal, Rational};
use crate::error::{Error, Result};
use crate::words::{parse_compact, FiniteWord};

use super::{forced_window_search, SearchOptions, SearchOutcome, WindowConstraint};

/// The 31-digit block every admissible sequence carries on `[−14, 16]`.
pub const FORCED_WORD: &str = "1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_4 1 2_2 1_2 2_2";
/// Digits assumed on `[−6, 8]` by the one-sided preset.
pub const LF3P_ASSIGNED: &str = "2 1_2 2_4 1 2_2 1_2 2_3";
/// Common cap on the constrained `λ_n`.
pub const LOWER_CAP: &str = "3.1181201786";
/// Floor on `λ_0` for the two-sided preset.
pub const UPPER_FLOOR: &str = "3.118117";

pub fn forced_word() -> FiniteWord {
    parse_compact(FORCED_WORD).expect("valid literal")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// Floor on `λ_0` and caps at `0, ±2, ±6, ±9, ±11, ±15`.
    TwoSided,
    /// Assigned block on `[−6, 8]` and caps at `0, −6, −9, 11, 15`.
    OneSided,
}

impl Preset {
    pub fn name(self) -> &'static str {
        match self {
            Preset::TwoSided => "lf4",
            Preset::OneSided => "lf3p",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        match name {
            "lf4" => Ok(Preset::TwoSided),
            "lf3p" => Ok(Preset::OneSided),
            other => Err(Error::UnknownCheck(other.to_string())),
        }
    }

    pub fn range(self) -> Range<i64> {
        -16..17
    }

    pub fn constraint(self) -> WindowConstraint {
        let cap: Rational = parse_decimal(LOWER_CAP).expect("valid literal");
        match self {
            Preset::TwoSided => WindowConstraint::new()
                .floor(&[0], &parse_decimal(UPPER_FLOOR).expect("valid literal"))
                .cap(&[0, 2, -2, 6, -6, 9, -9, 11, -11, 15, -15], &cap),
            Preset::OneSided => WindowConstraint::new()
                .assign_word(-6, parse_compact(LF3P_ASSIGNED).expect("valid literal").digits())
                .expect("binary digits")
                .cap(&[0, -6, -9, 11, 15], &cap),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ForcedWindowReport {
    pub preset: Preset,
    pub outcome: SearchOutcome,
    /// Distinct survivor restrictions to `[−14, 16]`.
    pub forward_forms: Vec<FiniteWord>,
    /// Distinct survivor restrictions to `[−16, 14]`.
    pub mirrored_forms: Vec<FiniteWord>,
    /// Survivors matching neither the forced word on `[−14, 16]` nor its
    /// transpose on `[−16, 14]`.
    pub unexplained: Vec<FiniteWord>,
    pub pass: bool,
}

/// Runs a preset and checks the survivors against the forced word.
///
/// The two-sided preset passes when every survivor carries the word on
/// `[−14, 16]` or its transpose on `[−16, 14]` and both orientations occur;
/// the one-sided preset needs the word on `[−14, 16]` in every survivor.
pub fn run_preset(preset: Preset, options: &SearchOptions) -> Result<ForcedWindowReport> {
    let range = preset.range();
    let outcome = forced_window_search(&preset.constraint(), range.clone(), options)?;
    let word = forced_word();
    let mirrored = word.transpose();
    let slice = |w: &FiniteWord, from: i64, to: i64| {
        let a = (from - range.start) as usize;
        let b = (to + 1 - range.start) as usize;
        FiniteWord::new(w.digits()[a..b].to_vec()).expect("binary digits")
    };
    let mut forward_hit = false;
    let mut mirrored_hit = false;
    let mut unexplained = Vec::new();
    for s in &outcome.surviving_windows {
        let f = slice(s, -14, 16) == word;
        let m = slice(s, -16, 14) == mirrored;
        forward_hit |= f;
        mirrored_hit |= m;
        let explained = match preset {
            Preset::TwoSided => f || m,
            Preset::OneSided => f,
        };
        if !explained {
            unexplained.push(s.clone());
        }
    }
    let pass = unexplained.is_empty()
        && match preset {
            Preset::TwoSided => forward_hit && mirrored_hit,
            Preset::OneSided => forward_hit,
        };
    Ok(ForcedWindowReport {
        preset,
        forward_forms: outcome.restricted(-14..17),
        mirrored_forms: outcome.restricted(-16..15),
        unexplained,
        pass,
        outcome,
    })
}
