//! Closed intervals of `f64` with outward rounding. Library transcendental
//! functions are assumed accurate to a few ulps; every result is widened by
//! [`SLACK_ULPS`] in each direction.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::Serialize;

/// Ulps added on each side after every operation.
pub const SLACK_ULPS: u32 = 2;

fn step_up(x: f64) -> f64 {
    if x.is_nan() || x == f64::INFINITY {
        return x;
    }
    if x == 0.0 {
        return f64::from_bits(1);
    }
    let bits = x.to_bits();
    f64::from_bits(if x > 0.0 { bits + 1 } else { bits - 1 })
}

fn step_down(x: f64) -> f64 {
    -step_up(-x)
}

pub(crate) fn up(mut x: f64) -> f64 {
    for _ in 0..SLACK_ULPS {
        x = step_up(x);
    }
    x
}

pub(crate) fn down(mut x: f64) -> f64 {
    for _ in 0..SLACK_ULPS {
        x = step_down(x);
    }
    x
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Interval {
        assert!(lo <= hi, "empty interval [{lo}, {hi}]");
        Interval { lo, hi }
    }

    /// The exact value `x`.
    pub fn point(x: f64) -> Interval {
        Interval { lo: x, hi: x }
    }

    /// An enclosure of a value computed in floating point to within a few ulps.
    pub fn around(x: f64) -> Interval {
        Interval { lo: down(x), hi: up(x) }
    }

    pub fn from_int(n: u64) -> Interval {
        let x = n as f64;
        if x as u64 == n {
            Interval::point(x)
        } else {
            Interval::around(x)
        }
    }

    fn widen(lo: f64, hi: f64) -> Interval {
        Interval { lo: down(lo), hi: up(hi) }
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn radius(&self) -> f64 {
        up(0.5 * (self.hi - self.lo))
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Certainly `self ≤ other`.
    pub fn certainly_le(&self, other: &Interval) -> bool {
        self.hi <= other.lo
    }

    pub fn certainly_lt(&self, other: &Interval) -> bool {
        self.hi < other.lo
    }

    pub fn is_positive(&self) -> bool {
        self.lo > 0.0
    }

    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    pub fn abs(&self) -> Interval {
        if self.lo >= 0.0 {
            *self
        } else if self.hi <= 0.0 {
            -*self
        } else {
            Interval {
                lo: 0.0,
                hi: self.hi.max(-self.lo),
            }
        }
    }

    pub fn sqr(&self) -> Interval {
        let a = self.abs();
        Interval::widen(a.lo * a.lo, a.hi * a.hi)
    }

    pub fn sqrt(&self) -> Interval {
        Interval::widen(self.lo.max(0.0).sqrt(), self.hi.max(0.0).sqrt())
    }

    pub fn exp(&self) -> Interval {
        Interval::widen(self.lo.exp(), self.hi.exp()).clamp_nonneg()
    }

    pub fn ln(&self) -> Interval {
        Interval::widen(self.lo.ln(), self.hi.ln())
    }

    /// `x^p` for `x ≥ 0` and a real exponent.
    pub fn powf(&self, p: &Interval) -> Interval {
        (self.ln() * *p).exp()
    }

    pub fn powi(&self, k: i32) -> Interval {
        if k == 0 {
            return Interval::point(1.0);
        }
        if k < 0 {
            return Interval::point(1.0) / self.powi(-k);
        }
        let mut acc = Interval::point(1.0);
        for _ in 0..k {
            acc = acc * *self;
        }
        acc
    }

    pub fn min(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.min(other.hi),
        }
    }

    pub fn max(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.max(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    fn clamp_nonneg(self) -> Interval {
        Interval {
            lo: self.lo.max(0.0),
            hi: self.hi,
        }
    }

    /// `ln(eᵃ + eᵇ)` for intervals `a`, `b`.
    pub fn log_add_exp(a: &Interval, b: &Interval) -> Interval {
        let f = |x: f64, y: f64| {
            let (m, n) = if x >= y { (x, y) } else { (y, x) };
            if n == f64::NEG_INFINITY {
                m
            } else {
                m + (n - m).exp().ln_1p()
            }
        };
        Interval::widen(f(a.lo, b.lo), f(a.hi, b.hi))
    }

    /// `1/x`.
    pub fn recip(&self) -> Interval {
        Interval::point(1.0) / *self
    }
}

impl Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval::widen(self.lo + o.lo, self.hi + o.hi)
    }
}

impl Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval::widen(self.lo - o.hi, self.hi - o.lo)
    }
}

impl Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        let c = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi];
        let c: Vec<f64> = c.iter().map(|x| if x.is_nan() { 0.0 } else { *x }).collect();
        Interval::widen(
            c.iter().copied().fold(f64::INFINITY, f64::min),
            c.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        )
    }
}

impl Div for Interval {
    type Output = Interval;
    fn div(self, o: Interval) -> Interval {
        assert!(o.lo > 0.0 || o.hi < 0.0, "division by an interval containing zero");
        let c = [self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi];
        Interval::widen(
            c.iter().copied().fold(f64::INFINITY, f64::min),
            c.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        )
    }
}

impl Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }
}

impl Add<f64> for Interval {
    type Output = Interval;
    fn add(self, o: f64) -> Interval {
        self + Interval::point(o)
    }
}

impl Mul<f64> for Interval {
    type Output = Interval;
    fn mul(self, o: f64) -> Interval {
        self * Interval::point(o)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.12e} ± {:.1e}", self.mid(), self.radius())
    }
}

/// A positive quantity represented by an enclosure of its natural logarithm.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LogValue {
    pub ln: Interval,
}

impl LogValue {
    pub fn from_ln(ln: Interval) -> LogValue {
        LogValue { ln }
    }

    pub fn from_value(x: Interval) -> LogValue {
        LogValue { ln: x.ln() }
    }

    /// The value itself; infinite when it overflows `f64`.
    pub fn value(&self) -> Interval {
        self.ln.exp()
    }

    pub fn log10(&self) -> Interval {
        self.ln * Interval::point(std::f64::consts::LOG10_E)
    }

    pub fn mul(&self, other: &LogValue) -> LogValue {
        LogValue { ln: self.ln + other.ln }
    }

    pub fn add(&self, other: &LogValue) -> LogValue {
        LogValue {
            ln: Interval::log_add_exp(&self.ln, &other.ln),
        }
    }

    /// Certainly `x ≤ self` for a nonnegative enclosure `x`.
    pub fn certainly_bounds(&self, x: &Interval) -> bool {
        x.hi <= 0.0 || x.hi.ln() + 4.0 * f64::EPSILON * x.hi.ln().abs().max(1.0) <= self.ln.lo
    }

    /// Decimal text `m.mmmmmmEk` computed from the logarithm.
    pub fn to_scientific(&self) -> String {
        let l = self.log10().mid();
        if !l.is_finite() {
            return format!("{l}");
        }
        let e = l.floor();
        format!("{:.6}e{}", 10f64.powf(l - e), e as i64)
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (ln = {})", self.to_scientific(), self.ln)
    }
}
