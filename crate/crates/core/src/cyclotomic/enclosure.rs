//! Rigorous complex enclosures of cyclotomic numbers under the embedding
//! `ζ_e ↦ exp(2πi/e)`.
//!
//! All arithmetic is done on fixed-point integers scaled by `2^w`, with every
//! truncation error accounted for in the interval endpoints.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::Cyclotomic;

/// A closed real interval with exact dyadic endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct RealEnclosure {
    lo: BigRational,
    hi: BigRational,
}

impl RealEnclosure {
    pub fn exact(q: BigRational) -> RealEnclosure {
        RealEnclosure { lo: q.clone(), hi: q }
    }

    pub fn new(lo: BigRational, hi: BigRational) -> RealEnclosure {
        assert!(lo <= hi, "empty interval");
        RealEnclosure { lo, hi }
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn mid(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn radius(&self) -> BigRational {
        (&self.hi - &self.lo) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, q: &BigRational) -> bool {
        &self.lo <= q && q <= &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    /// Largest absolute value in the interval.
    pub fn mag(&self) -> BigRational {
        self.lo.abs().max(self.hi.abs())
    }

    /// Smallest absolute value in the interval.
    pub fn mig(&self) -> BigRational {
        if self.contains(&BigRational::zero()) {
            BigRational::zero()
        } else {
            self.lo.abs().min(self.hi.abs())
        }
    }

    pub fn mid_f64(&self) -> f64 {
        self.mid().to_f64().unwrap_or(f64::NAN)
    }

    pub fn radius_f64(&self) -> f64 {
        // Rounded up so the printed radius still covers the interval.
        let r = self.radius().to_f64().unwrap_or(f64::INFINITY);
        if r == 0.0 {
            0.0
        } else {
            r.next_up()
        }
    }
}

/// `re + i·im` with both parts enclosed.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexEnclosure {
    pub re: RealEnclosure,
    pub im: RealEnclosure,
}

impl ComplexEnclosure {
    /// Bounds `(L, U)` with `L ≤ |z|² ≤ U` for every `z` in the enclosure.
    pub fn abs_squared_bounds(&self) -> (BigRational, BigRational) {
        let (a, b) = (self.re.mig(), self.im.mig());
        let (c, d) = (self.re.mag(), self.im.mag());
        (&a * &a + &b * &b, &c * &c + &d * &d)
    }

    /// A rational upper bound on `|z|` over the enclosure.
    pub fn abs_upper(&self) -> BigRational {
        sqrt_upper(&self.abs_squared_bounds().1)
    }

    /// Whether some point of the enclosure may have absolute value 1.
    pub fn may_have_unit_modulus(&self) -> bool {
        let (lo, hi) = self.abs_squared_bounds();
        lo <= BigRational::one() && BigRational::one() <= hi
    }
}

impl fmt::Display for ComplexEnclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({:e} ± {:.1e}) + ({:e} ± {:.1e})i",
            self.re.mid_f64(),
            self.re.radius_f64(),
            self.im.mid_f64(),
            self.im.radius_f64()
        )
    }
}

/// Smallest-ish rational `s ≥ 0` with `s² ≥ x`.
pub fn sqrt_upper(x: &BigRational) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let approx = x.to_f64().unwrap_or(f64::MAX).sqrt();
    let mut s = BigRational::from_float(approx.next_up()).unwrap_or_else(|| x + BigRational::one());
    let mut bump = BigRational::new(BigInt::one(), BigInt::from(1u64 << 52));
    while &(&s * &s) < x {
        s += &bump * &s.clone().max(BigRational::one());
        bump = &bump * BigRational::from_integer(BigInt::from(2));
    }
    s
}

/// Fixed-point interval `[lo, hi] · 2^{−w}`.
#[derive(Clone, Debug)]
struct Fixed {
    lo: BigInt,
    hi: BigInt,
}

impl Fixed {
    fn point(x: BigInt) -> Fixed {
        Fixed { lo: x.clone(), hi: x }
    }

    fn widen(&self, ulps: u64) -> Fixed {
        Fixed {
            lo: &self.lo - ulps,
            hi: &self.hi + ulps,
        }
    }

    fn neg(&self) -> Fixed {
        Fixed {
            lo: -&self.hi,
            hi: -&self.lo,
        }
    }

    fn add(&self, o: &Fixed) -> Fixed {
        Fixed {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn scale_int(&self, k: i64) -> Fixed {
        let (a, b) = (&self.lo * k, &self.hi * k);
        if k >= 0 {
            Fixed { lo: a, hi: b }
        } else {
            Fixed { lo: b, hi: a }
        }
    }

    fn mul(&self, o: &Fixed, w: u32) -> Fixed {
        let one = BigInt::one() << w;
        let ps = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let min = ps.iter().min().unwrap();
        let max = ps.iter().max().unwrap();
        Fixed {
            lo: min.div_floor(&one),
            hi: ceil_div(max, &one),
        }
    }

    fn from_rational(q: &BigRational, w: u32) -> Fixed {
        let n = q.numer() << w;
        Fixed {
            lo: n.div_floor(q.denom()),
            hi: ceil_div(&n, q.denom()),
        }
    }

    fn to_enclosure(&self, w: u32) -> RealEnclosure {
        let d = BigInt::one() << w;
        RealEnclosure {
            lo: BigRational::new(self.lo.clone(), d.clone()),
            hi: BigRational::new(self.hi.clone(), d),
        }
    }
}

fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

/// `atan(1/x)` by its alternating series.
fn atan_inv(x: u64, w: u32) -> Fixed {
    let x2 = BigInt::from(x * x);
    let mut p = (BigInt::one() << w) / x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !p.is_zero() {
        let t = &p / (2 * k + 1);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        p /= &x2;
        k += 1;
    }
    // Each term is off by less than 3 ulps; the omitted tail is below 2 ulps.
    Fixed::point(sum).widen(3 * k + 2)
}

fn pi(w: u32) -> Fixed {
    // Machin: π = 16·atan(1/5) − 4·atan(1/239).
    atan_inv(5, w).scale_int(16).add(&atan_inv(239, w).scale_int(-4))
}

/// Enclosures of `(cos x, sin x)` at the fixed-point value `x ∈ [0, 1.6]`.
fn cos_sin_point(x: &BigInt, w: u32) -> (Fixed, Fixed) {
    let one = BigInt::one() << w;
    let x2 = (x * x) >> w;
    let series = |first: BigInt, offset: u64| -> Fixed {
        let mut term = first;
        let mut sum = BigInt::zero();
        let mut k: u64 = 0;
        while !term.is_zero() {
            if k % 2 == 0 {
                sum += &term;
            } else {
                sum -= &term;
            }
            let d = (2 * k + 1 + offset) * (2 * k + 2 + offset);
            term = (&term * &x2) / (&one * d);
            k += 1;
        }
        Fixed::point(sum).widen(6 * k + 12)
    };
    (series(one.clone(), 0), series(x.clone(), 1))
}

/// Enclosures of `(cos 2πf, sin 2πf)` for rational `f`.
fn cos_sin_turn(f: &BigRational, pi: &Fixed, w: u32) -> (Fixed, Fixed) {
    let one = BigInt::one() << w;
    let frac = f - f.floor();
    let quarter = (&frac * BigRational::from_integer(4.into())).floor();
    let q = quarter.to_integer().to_u8().unwrap_or(0);
    let g = &frac - quarter / BigRational::from_integer(4.into());
    let (c, s) = if g.is_zero() {
        (Fixed::point(one.clone()), Fixed::point(BigInt::zero()))
    } else {
        // θ = 2πg lies in (0, π/2), where sin increases and cos decreases.
        let two_g = &g * BigRational::from_integer(2.into());
        let lo = (&pi.lo * two_g.numer()).div_floor(two_g.denom());
        let hi = ceil_div(&(&pi.hi * two_g.numer()), two_g.denom());
        let (c_lo_pt, s_lo_pt) = cos_sin_point(&lo, w);
        let (c_hi_pt, s_hi_pt) = cos_sin_point(&hi, w);
        let cmin = (&c_hi_pt.lo).min(&one).clone();
        let c = Fixed {
            lo: cmin,
            hi: c_lo_pt.hi.min(one.clone()),
        };
        let s = Fixed {
            lo: s_lo_pt.lo.max(BigInt::zero()),
            hi: s_hi_pt.hi.min(one.clone()),
        };
        (c, s)
    };
    match q {
        0 => (c, s),
        1 => (s.neg(), c),
        2 => (c.neg(), s.neg()),
        _ => (s, c.neg()),
    }
}

fn enclose_at(a: &Cyclotomic, w: u32) -> ComplexEnclosure {
    let e = a.conductor();
    let pi = pi(w);
    let mut re = Fixed::point(BigInt::zero());
    let mut im = Fixed::point(BigInt::zero());
    for (j, c) in a.coefficients().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coeff = Fixed::from_rational(c, w);
        let f = BigRational::new(BigInt::from(j), BigInt::from(e));
        let (cos, sin) = cos_sin_turn(&f, &pi, w);
        re = re.add(&coeff.mul(&cos, w));
        im = im.add(&coeff.mul(&sin, w));
    }
    ComplexEnclosure {
        re: re.to_enclosure(w),
        im: im.to_enclosure(w),
    }
}

impl Cyclotomic {
    /// A rigorous enclosure of the value with each part of width at most
    /// `10^{−precision}`. Rational values are returned exactly.
    pub fn to_complex(&self, precision: u32) -> ComplexEnclosure {
        let precision = precision.max(1);
        if let Some(q) = self.to_rational() {
            return ComplexEnclosure {
                re: RealEnclosure::exact(q),
                im: RealEnclosure::exact(BigRational::zero()),
            };
        }
        let target = BigRational::new(BigInt::one(), BigInt::from(10u32).pow(precision));
        let mag: u32 = self
            .coefficients()
            .iter()
            .map(|c| c.abs().ceil().to_integer().bits() as u32)
            .sum();
        let mut w = (precision as f64 * 3.33).ceil() as u32 + mag + 32;
        loop {
            let z = enclose_at(self, w);
            if z.re.width() <= target && z.im.width() <= target {
                return z;
            }
            w *= 2;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn pi_is_enclosed() {
        let p = pi(200).to_enclosure(200);
        assert!(p.lo() > &q(3141592653589793, 1000000000000000));
        assert!(p.hi() < &q(3141592653589794, 1000000000000000));
    }

    #[test]
    fn documented_embeddings() {
        let i = Cyclotomic::root_of_unity(4, 1).to_complex(20);
        assert!(i.re.is_exact() && i.im.is_exact());
        assert_eq!(i.im.lo(), &q(1, 1));
        let minus_one = Cyclotomic::from_integer(-1).to_complex(5);
        assert_eq!(minus_one.re, RealEnclosure::exact(q(-1, 1)));
        let z3 = Cyclotomic::root_of_unity(3, 1).to_complex(30);
        assert!(z3.re.contains(&q(-1, 2)));
        assert!(z3.im.lo() > &q(8660254037844386, 10000000000000000));
        assert!(z3.im.hi() < &q(8660254037844387, 10000000000000000));
        assert!(z3.im.width() <= q(1, 1) / BigRational::from_integer(BigInt::from(10).pow(30)));
    }

    #[test]
    fn roots_of_unity_have_unit_modulus() {
        for e in 1..=40u32 {
            for k in 0..e as i64 {
                let z = Cyclotomic::root_of_unity(e, k).to_complex(15);
                assert!(z.may_have_unit_modulus(), "ζ_{e}^{k}: {z}");
            }
        }
    }

    #[test]
    fn sqrt_upper_is_an_upper_bound() {
        for (n, d) in [(2, 1), (1, 3), (10_001, 10_000), (1, 1)] {
            let x = q(n, d);
            let s = sqrt_upper(&x);
            assert!(&s * &s >= x);
            assert!(s.to_f64().unwrap() - (n as f64 / d as f64).sqrt() < 1e-12);
        }
    }
}
