//! Exact arithmetic: rationals, quadratic surds, sums of surds over at most two
//! quadratic fields, and certified rational enclosures.

mod enclosure;
mod rational;
mod sign;
mod sum;
mod surd;

pub use enclosure::{enclose, Enclosure};
pub use rational::{parse_decimal, truncate_decimal, Rational};
pub use sum::{surd_compare, SurdSum};
pub use surd::{Branch, QuadraticSurd};
