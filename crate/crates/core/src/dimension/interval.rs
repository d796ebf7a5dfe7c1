use std::ops::{Add, Mul};

/// Relative slack applied around library `powf`, which is not correctly rounded.
const POW_SLACK: f64 = 1e-14;

/// Closed interval of positive floats with outward rounding.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        assert!(lo <= hi, "inverted interval {lo} > {hi}");
        Interval { lo, hi }
    }

    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    fn sqrt_of(n: f64) -> Self {
        // IEEE sqrt is correctly rounded
        let r = n.sqrt();
        Interval::new(r.next_down(), r.next_up())
    }

    /// `[0; over(t)]` for `t ∈ {1, 2}`, and generally `(√(t² + 4) − t) / 2`.
    pub fn periodic_tail(t: u32) -> Self {
        let t = t as f64;
        let root = Self::sqrt_of(t * t + 4.0);
        Interval::new(
            ((root.lo - t) / 2.0).next_down(),
            ((root.hi - t) / 2.0).next_up(),
        )
    }

    /// `1/x` for `x > 0`.
    pub fn recip(self) -> Self {
        assert!(self.lo > 0.0);
        let lo = 1.0 / self.hi;
        let hi = 1.0 / self.lo;
        // sign of r·x − 1 tells which way r was rounded
        Interval::new(
            below(lo, lo.mul_add(self.hi, -1.0)),
            above(hi, hi.mul_add(self.lo, -1.0)),
        )
    }

    /// `x^{−s}` for `x ≥ 1`, `s ≥ 0`.
    pub fn inverse_power(&self, s: f64) -> Self {
        if s == 0.0 {
            return Interval::point(1.0);
        }
        if s == 1.0 {
            return self.recip();
        }
        Interval::new(
            self.hi.powf(-s) * (1.0 - POW_SLACK),
            self.lo.powf(-s) * (1.0 + POW_SLACK),
        )
    }

    pub fn min(&self, other: &Self) -> Self {
        Interval::new(self.lo.min(other.lo), self.hi.min(other.hi))
    }

    pub fn max(&self, other: &Self) -> Self {
        Interval::new(self.lo.max(other.lo), self.hi.max(other.hi))
    }
}

/// `x` rounded from a value `x − err`: step down when `x` overshoots.
fn below(x: f64, err: f64) -> f64 {
    if err > 0.0 {
        x.next_down()
    } else {
        x
    }
}

fn above(x: f64, err: f64) -> f64 {
    if err < 0.0 {
        x.next_up()
    } else {
        x
    }
}

/// Rounded sum with the sign of its rounding error (rounded minus exact).
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let exact_err = (a - (s - bb)) + (b - bb);
    (s, -exact_err)
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, rhs: Interval) -> Interval {
        let (lo, lo_err) = two_sum(self.lo, rhs.lo);
        let (hi, hi_err) = two_sum(self.hi, rhs.hi);
        Interval::new(below(lo, lo_err), above(hi, hi_err))
    }
}

impl Mul for Interval {
    type Output = Interval;
    /// Both operands nonnegative.
    fn mul(self, rhs: Interval) -> Interval {
        debug_assert!(self.lo >= 0.0 && rhs.lo >= 0.0);
        let lo = self.lo * rhs.lo;
        let hi = self.hi * rhs.hi;
        Interval::new(
            below(lo, -(self.lo.mul_add(rhs.lo, -lo))),
            above(hi, -(self.hi.mul_add(rhs.hi, -hi))),
        )
    }
}
