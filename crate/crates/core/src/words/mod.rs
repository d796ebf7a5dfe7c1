//! Finite words, eventually periodic one-sided words and bi-infinite
//! sequences over positive-integer digits, with the compact multiplicity
//! notation (`2_4 1_2` for `2,2,2,2,1,1`).

mod finite;
mod patterns;
mod periodic;
mod sequence;

pub use finite::{parse_compact, parse_marked, FiniteWord};
pub use patterns::{find_pattern, y_membership, y_membership_finite, PatternSet, YMembership};
pub use periodic::OneSidedWord;
pub use sequence::BiInfiniteSequence;

/// Digits allowed in the spectra and search modules.
pub fn check_binary_alphabet(digits: &[u32]) -> crate::Result<()> {
    match digits.iter().find(|&&d| d != 1 && d != 2) {
        Some(&digit) => Err(crate::Error::Alphabet { digit }),
        None => Ok(()),
    }
}
